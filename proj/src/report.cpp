#include "skolem/report.hpp"

#include <sstream>

namespace skolem {
namespace {

std::string rat_str(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string mf_dec(mpfr_srcptr v, bool up) {
    char* s = nullptr;
    mpfr_asprintf(&s, up ? "%.20RUg" : "%.20RDg", v);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

// Decimal interval string, outward-rounded in decimal too.
std::string ri_pair(const RI& x) {
    return "[" + jstr(mf_dec(x.lo(), false)) + ", " + jstr(mf_dec(x.hi(), true)) +
           "]";
}

std::string int_pair(const Int& n) {
    return "[" + jstr(n.get_str()) + ", " + jstr(n.get_str()) + "]";
}

std::string dbl_str(double d) {
    char buf[40];
    snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

const char* status_str(Status s) {
    return s == Status::Decided ? "decided" : "bounded";
}

template <class T, class F>
std::string jarr(const std::vector<T>& xs, F f) {
    std::string out = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += f(xs[i]);
    }
    return out + "]";
}

// The named-constant ledger of one branch certificate.
std::string ledger_json(const BranchInfo& b) {
    const mpfr_prec_t prec = 96;
    const PlaceCutoff& pc = *b.certificate;
    std::ostringstream os;
    os << "{";
    os << "\"kappa\": " << ri_pair(kappa_floor(b.field_degree, prec));
    os << ", \"theta\": " << ri_pair(theta_gap(b.field_degree, prec));
    os << ", \"matveev.premultiplier\": "
       << ri_pair(matveev_premult(3, b.field_degree, prec));
    if (!pc.place.arch)
        os << ", \"yu.c0\": "
           << ri_pair(yu_c0(2, b.field_degree, pc.place.fin.p(), prec));
    os << ", \"gap\": " << ri_pair(pc.gap);
    os << ", \"decay.a0\": " << ri_pair(pc.decay.a0);
    os << ", \"decay.a1\": " << ri_pair(pc.decay.a1);
    os << ", \"decay.a2\": " << ri_pair(pc.decay.a2);
    os << ", \"identity_cap\": " << int_pair(pc.cap);
    os << ", \"N0\": " << int_pair(pc.n0);
    os << "}";
    return os.str();
}

std::string branch_json(const BranchInfo& b) {
    std::ostringstream os;
    os << "{";
    os << "\"offset\": " << jstr(b.offset.get_str());
    os << ", \"modulus\": " << jstr(b.modulus.get_str());
    os << ", \"all_zero\": " << (b.all_zero ? "true" : "false");
    os << ", \"status\": " << jstr(status_str(b.status));
    os << ", \"cutoff\": " << jstr(b.cutoff.get_str());
    os << ", \"searched_below\": " << jstr(b.searched_below.get_str());
    if (b.certificate) {
        const PlaceCutoff& pc = *b.certificate;
        os << ", \"place\": " << jstr(b.place);
        os << ", \"lead\": " << b.lead;
        os << ", \"field_degree\": " << b.field_degree;
        os << ", \"sieve_density\": " << dbl_str(b.sieve_density);
        os << ", \"exact_checks\": " << b.exact_checks;
        os << ", \"certificate\": {\"has_tail\": "
           << (pc.has_tail ? "true" : "false")
           << ", \"constants\": " << ledger_json(b) << "}";
    }
    os << "}";
    return os.str();
}

std::string root_json(const BinetRoot& r) {
    std::ostringstream os;
    CI box = r.value.enclosure();
    os << "{\"minpoly\": "
       << jarr(r.value.minpoly().coeffs(),
               [](const Rat& c) { return jstr(rat_str(c)); })
       << ", \"mult\": " << r.mult << ", \"box\": {\"re\": " << ri_pair(box.re())
       << ", \"im\": " << ri_pair(box.im()) << "}}";
    return os.str();
}

}  // namespace

RunArtifacts analyze(const ProblemFile& p, int threads) {
    RunArtifacts ra;
    ra.problem = p;
    LRS u = problem_lrs(p);

    DecideOptions opt;
    opt.cap = p.cap;
    opt.sieve_budget = p.sieve_budget;
    opt.precision = p.precision;
    opt.threads = threads;

    ra.zero_sequence = u.is_zero_sequence();
    ra.result = decide(u, opt);  // also enforces the <= 4 roots scope check
    if (!ra.zero_sequence) {
        LRS um = u.minimized();
        ra.minimal_order = um.order();
        BinetForm bf = binet_form(um);
        ra.transient = bf.transient;
        ra.zero_tail = bf.zero_tail;
        ra.roots = bf.roots;
        for (auto& r : ra.roots)
            r.value.refine(Rat(Int(1), Int(Int(1) << 48)));
        ra.degeneracy = bf.zero_tail ? 1 : degeneracy_modulus(bf);
    }
    return ra;
}

bool replay(const RunArtifacts& ra) {
    for (const BranchInfo& b : ra.result.branches) {
        if (!b.certificate) continue;
        const PlaceCutoff& pc = *b.certificate;
        Int need = pc.cap;
        if (pc.has_tail) {
            if (!pc.gap.is_positive()) return false;
            Int cr = decay_crossover(pc.gap, pc.decay);
            if (cr > need) need = cr;
        } else if (pc.lead >= 2 && need < 3) {
            need = 3;
        }
        if (pc.n0 < need) return false;
    }
    return true;
}

std::string machine_report(const RunArtifacts& ra) {
    const ProblemFile& p = ra.problem;
    const EngineResult& r = ra.result;
    std::ostringstream os;
    os << "{\n";
    os << "  \"schema\": \"skolem4-report/1\",\n";
    os << "  \"input\": {";
    os << "\"recurrence\": "
       << jarr(p.recurrence, [](const Rat& q) { return jstr(rat_str(q)); });
    os << ", \"initial\": "
       << jarr(p.initial, [](const Rat& q) { return jstr(rat_str(q)); });
    os << ", \"field\": "
       << jarr(p.field, [](const Int& n) { return jstr(n.get_str()); });
    os << ", \"mode\": " << jstr(p.mode == RunMode::Certify ? "certify" : "report");
    os << ", \"cap\": " << jstr(p.cap.get_str());
    os << ", \"sieve_budget\": " << p.sieve_budget;
    os << ", \"precision\": " << p.precision;
    os << "},\n";
    os << "  \"zero_sequence\": " << (ra.zero_sequence ? "true" : "false")
       << ",\n";
    os << "  \"minimal_order\": " << ra.minimal_order << ",\n";
    os << "  \"transient\": " << ra.transient << ",\n";
    os << "  \"zero_tail\": " << (ra.zero_tail ? "true" : "false") << ",\n";
    os << "  \"roots\": " << jarr(ra.roots, root_json) << ",\n";
    os << "  \"degeneracy_modulus\": " << ra.degeneracy << ",\n";
    os << "  \"status\": " << jstr(status_str(r.status)) << ",\n";
    os << "  \"zeros\": "
       << jarr(r.zeros, [](const Int& z) { return jstr(z.get_str()); }) << ",\n";
    os << "  \"progressions\": "
       << jarr(r.progressions,
               [](const std::pair<Int, Int>& pr) {
                   return "{\"offset\": " + jstr(pr.first.get_str()) +
                          ", \"modulus\": " + jstr(pr.second.get_str()) + "}";
               })
       << ",\n";
    os << "  \"searched_below\": " << jstr(r.searched_below.get_str()) << ",\n";
    os << "  \"cutoff\": " << jstr(r.cutoff.get_str()) << ",\n";
    os << "  \"branches\": " << jarr(r.branches, branch_json) << "\n";
    os << "}\n";
    return os.str();
}

std::string human_report(const RunArtifacts& ra) {
    const EngineResult& r = ra.result;
    std::ostringstream os;
    os << "order " << ra.problem.recurrence.size() << " sequence, recurrence [";
    for (size_t i = 0; i < ra.problem.recurrence.size(); ++i)
        os << (i ? ", " : "") << rat_str(ra.problem.recurrence[i]);
    os << "], initial [";
    for (size_t i = 0; i < ra.problem.initial.size(); ++i)
        os << (i ? ", " : "") << rat_str(ra.problem.initial[i]);
    os << "]\n";

    if (ra.zero_sequence) {
        os << "identically zero\n";
    } else {
        os << "minimal order " << ra.minimal_order;
        if (ra.transient) os << ", transient " << ra.transient;
        if (ra.zero_tail) os << ", zero tail";
        os << "\n";
        for (const auto& root : ra.roots)
            os << "  root of " << root.value.minpoly().str() << " at "
               << root.value.enclosure().str() << ", multiplicity " << root.mult
               << "\n";
        if (ra.degeneracy > 1)
            os << "degenerate: split into " << ra.degeneracy
               << " residue classes\n";
    }

    for (const BranchInfo& b : r.branches) {
        os << "class n = " << b.modulus.get_str() << "k+" << b.offset.get_str()
           << ": ";
        if (b.all_zero) {
            os << "identically zero\n";
            continue;
        }
        os << status_str(b.status) << ", zero-free beyond " << b.cutoff.get_str()
           << ", searched below " << b.searched_below.get_str();
        if (b.certificate) {
            os << "\n    place " << b.place << ", " << b.lead << " dominant, "
               << "sieve density " << dbl_str(b.sieve_density) << ", "
               << b.exact_checks << " exact checks";
        }
        os << "\n";
    }

    os << "status: " << status_str(r.status) << "\n";
    os << "zeros:";
    if (r.zeros.empty()) os << " (none outside progressions)";
    for (const Int& z : r.zeros) os << " " << z.get_str();
    os << "\n";
    for (const auto& [o, m] : r.progressions)
        os << "zero progression: n = " << o.get_str() << " + " << m.get_str()
           << " k, all k >= 0\n";
    if (r.status == Status::Bounded)
        os << "zeros complete below " << r.searched_below.get_str()
           << "; none at or beyond " << r.cutoff.get_str()
           << "; the window between is open\n";
    return os.str();
}

}  // namespace skolem
