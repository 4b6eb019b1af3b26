#include "skolem/problem_io.hpp"

#include "skolem/factor.hpp"

#include <sstream>

namespace skolem {
namespace {

[[noreturn]] void bad(int line, const std::string& msg) {
    throw error("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s, int line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        std::string tok = trim(s.substr(start, comma - start));
        if (tok.empty()) bad(line, "empty list entry");
        out.push_back(std::move(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Int parse_int(const std::string& tok, int line) {
    // Strict digits-only check: mpz_set_str would quietly skip interior
    // whitespace, turning "1 1" into 11.
    size_t i = (!tok.empty() && (tok[0] == '+' || tok[0] == '-')) ? 1 : 0;
    bool ok = i < tok.size();
    for (; ok && i < tok.size(); ++i) ok = tok[i] >= '0' && tok[i] <= '9';
    if (!ok) bad(line, "malformed integer '" + tok + "'");
    return Int(tok);
}

Rat parse_rat(const std::string& tok, int line) {
    size_t slash = tok.find('/');
    if (slash == std::string::npos) return Rat(parse_int(tok, line));
    Int num = parse_int(trim(tok.substr(0, slash)), line);
    std::string den_s = trim(tok.substr(slash + 1));
    if (den_s.find('/') != std::string::npos)
        bad(line, "malformed rational '" + tok + "'");
    Int den = parse_int(den_s, line);
    if (den == 0) bad(line, "zero denominator in '" + tok + "'");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

long parse_long(const std::string& tok, int line, long lo, long hi,
                const char* what) {
    Int v = parse_int(tok, line);
    if (v < lo || v > hi)
        bad(line, std::string(what) + " out of range: " + tok);
    return v.get_si();
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    ProblemFile p;
    bool saw_rec = false, saw_init = false;
    std::vector<std::string> seen;

    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string s = trim(raw);
        if (s.empty()) continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos) bad(line, "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty()) bad(line, "missing key");
        if (val.empty()) bad(line, "missing value for '" + key + "'");
        for (const auto& k : seen)
            if (k == key) bad(line, "duplicate key '" + key + "'");
        seen.push_back(key);

        if (key == "recurrence") {
            for (const auto& t : split_list(val, line))
                p.recurrence.push_back(parse_rat(t, line));
            saw_rec = true;
        } else if (key == "initial") {
            for (const auto& t : split_list(val, line))
                p.initial.push_back(parse_rat(t, line));
            saw_init = true;
        } else if (key == "field") {
            for (const auto& t : split_list(val, line))
                p.field.push_back(parse_int(t, line));
            std::vector<Rat> cs(p.field.begin(), p.field.end());
            QPoly f(std::move(cs));
            if (f.degree() < 1) bad(line, "field polynomial must be nonconstant");
            if (!is_irreducible_over_Q(f))
                bad(line, "field polynomial is reducible");
        } else if (key == "mode") {
            if (val == "certify")
                p.mode = RunMode::Certify;
            else if (val == "report")
                p.mode = RunMode::Report;
            else
                bad(line, "mode must be 'certify' or 'report'");
        } else if (key == "cap") {
            p.cap = parse_int(val, line);
            if (p.cap < 0) bad(line, "cap must be nonnegative");
        } else if (key == "sieve_budget") {
            p.sieve_budget = static_cast<unsigned long>(
                parse_long(val, line, 1, 1l << 30, "sieve_budget"));
        } else if (key == "precision") {
            p.precision = parse_long(val, line, 64, 1l << 16, "precision");
        } else {
            bad(line, "unknown key '" + key + "'");
        }
    }

    check_input(saw_rec, "missing 'recurrence'");
    check_input(saw_init, "missing 'initial'");
    if (p.recurrence.size() != p.initial.size())
        throw error("recurrence has " + std::to_string(p.recurrence.size()) +
                    " coefficients but initial has " +
                    std::to_string(p.initial.size()) + " values");
    return p;
}

namespace {

std::string rat_str(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F f) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += f(xs[i]);
    }
    return out;
}

}  // namespace

std::string serialize_problem(const ProblemFile& p) {
    std::ostringstream os;
    os << "recurrence = " << join(p.recurrence, rat_str) << "\n";
    os << "initial = " << join(p.initial, rat_str) << "\n";
    if (!p.field.empty())
        os << "field = " << join(p.field, [](const Int& n) { return n.get_str(); })
           << "\n";
    os << "mode = " << (p.mode == RunMode::Certify ? "certify" : "report") << "\n";
    os << "cap = " << p.cap.get_str() << "\n";
    os << "sieve_budget = " << p.sieve_budget << "\n";
    os << "precision = " << p.precision << "\n";
    return os.str();
}

LRS problem_lrs(const ProblemFile& p) { return LRS(p.recurrence, p.initial); }

}  // namespace skolem
