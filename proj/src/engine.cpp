#include "skolem/engine.hpp"

#include "skolem/factor.hpp"

#include <algorithm>
#include <thread>

namespace skolem {
namespace {

// The zero scan below the cutoff runs modulo one big word-sized prime; a
// residue hit is only a candidate and every candidate gets an exact
// confirmation, so the witness choice affects speed, never correctness.
constexpr unsigned long kWitness = (1ul << 61) - 1;

unsigned long mulmod(unsigned long a, unsigned long b) {
    return static_cast<unsigned long>(
        static_cast<unsigned __int128>(a) * b % kWitness);
}

unsigned long rat_mod_w(const Rat& x) {
    require(x.get_den() == 1, "witness scan needs an integer sequence");
    Int num = x.get_num();
    return mpz_fdiv_ui(num.get_mpz_t(), kWitness);
}

// Row-vector state convention: s(n) = (u(n), ..., u(n+k-1)), s(n+1) = s(n) C
// with C the companion matrix of the recurrence.
struct ModLRS {
    int k = 0;
    std::vector<unsigned long> rec;
    std::vector<unsigned long> state0;
    std::vector<std::vector<unsigned long>> jump;  // C^(2^i), row-major

    explicit ModLRS(const LRS& u) : k(u.order()) {
        rec.resize(k);
        state0.resize(k);
        for (int i = 0; i < k; ++i) rec[i] = rat_mod_w(u.rec()[i]);
        for (int i = 0; i < k; ++i) state0[i] = rat_mod_w(u.init()[i]);
        std::vector<unsigned long> C(k * k, 0);
        for (int j = 0; j + 1 < k; ++j) C[(j + 1) * k + j] = 1;
        for (int i = 0; i < k; ++i) C[i * k + (k - 1)] = rec[i];
        jump.push_back(std::move(C));
    }

    std::vector<unsigned long> mat_mul(const std::vector<unsigned long>& A,
                                       const std::vector<unsigned long>& B) const {
        std::vector<unsigned long> R(k * k, 0);
        for (int i = 0; i < k; ++i)
            for (int l = 0; l < k; ++l) {
                unsigned long a = A[i * k + l];
                if (!a) continue;
                for (int j = 0; j < k; ++j) {
                    unsigned long t = R[i * k + j] + mulmod(a, B[l * k + j]);
                    R[i * k + j] = t >= kWitness ? t - kWitness : t;
                }
            }
        return R;
    }

    const std::vector<unsigned long>& power_of_two(size_t i) {
        while (jump.size() <= i) jump.push_back(mat_mul(jump.back(), jump.back()));
        return jump[i];
    }

    std::vector<unsigned long> apply(const std::vector<unsigned long>& s,
                                     const std::vector<unsigned long>& M) const {
        std::vector<unsigned long> r(k, 0);
        for (int i = 0; i < k; ++i) {
            unsigned long a = s[i];
            if (!a) continue;
            for (int j = 0; j < k; ++j) {
                unsigned long t = r[j] + mulmod(a, M[i * k + j]);
                r[j] = t >= kWitness ? t - kWitness : t;
            }
        }
        return r;
    }

    std::vector<unsigned long> advance(std::vector<unsigned long> s, unsigned long g) {
        for (size_t i = 0; g; ++i, g >>= 1)
            if (g & 1) s = apply(s, power_of_two(i));
        return s;
    }

    void step(std::vector<unsigned long>& s) const {
        unsigned long next = 0;
        for (int i = 0; i < k; ++i) {
            unsigned long t = next + mulmod(rec[i], s[i]);
            next = t >= kWitness ? t - kWitness : t;
        }
        std::rotate(s.begin(), s.begin() + 1, s.end());
        s[k - 1] = next;
    }

    std::vector<unsigned long> state_at(unsigned long n) {
        return advance(state0, n);
    }
};

// Candidate positions in [lo, hi): sieve-admitted and zero mod the witness.
void scan_range(ModLRS& mw, const Sieve& sv, unsigned long lo, unsigned long hi,
                std::vector<unsigned long>& out) {
    if (lo >= hi) return;
    const unsigned long pre = static_cast<unsigned long>(std::max(sv.preperiod, 0l));
    const bool jumpy = sv.density > 0.0 && sv.density < 1.0 / 64 && sv.period > 1;

    auto s = mw.state_at(lo);
    unsigned long n = lo;
    auto sequential_until = [&](unsigned long end) {
        for (; n < end; ++n, mw.step(s))
            if (s[0] == 0 && (n < pre || sv.allowed[n % sv.period])) out.push_back(n);
    };

    if (!jumpy) {
        sequential_until(hi);
        return;
    }
    // Sparse sieve: visit only admitted residues, jumping the state across gaps.
    sequential_until(std::min(hi, pre));
    if (n >= hi) return;
    std::vector<unsigned long> res;
    for (unsigned long r = 0; r < sv.period; ++r)
        if (sv.allowed[r]) res.push_back(r);
    unsigned long block = n / sv.period, idx = 0;
    while (idx < res.size() && block * sv.period + res[idx] < n) ++idx;
    if (idx == res.size()) { ++block; idx = 0; }
    unsigned long pos = block * sv.period + res[idx];
    while (pos < hi) {
        s = mw.advance(std::move(s), pos - n);
        n = pos;
        if (s[0] == 0) out.push_back(n);
        if (++idx == res.size()) { ++block; idx = 0; }
        pos = block * sv.period + res[idx];
    }
}

struct EnumStats {
    double density = 1.0;
    long exact = 0;
};

// All zeros of w in [0, N), exactly.  Sieve and witness narrow the candidates;
// each survivor is confirmed with exact arithmetic.
std::vector<Int> enumerate_zeros(const LRS& w, const Int& N,
                                 const DecideOptions& opt, EnumStats& stats) {
    std::vector<Int> zeros;
    if (N <= 0) return zeros;
    require(mpz_sizeinbase(N.get_mpz_t(), 2) <= 62, "search bound too large to enumerate");
    const unsigned long NN = N.get_ui();

    LRS iw = w.integer_form();
    Sieve sv = build_sieve(iw, opt.sieve_budget);
    stats.density = sv.density;

    unsigned long scan_hi = NN;
    if (sv.density == 0.0)  // certified zero-free beyond the preperiod
        scan_hi = std::min(NN, static_cast<unsigned long>(std::max(sv.preperiod, 0l)));

    ModLRS mw(iw);
    int threads = std::max(opt.threads, 1);
    if (scan_hi < (1ul << 16)) threads = 1;

    std::vector<std::vector<unsigned long>> cand(threads);
    if (threads == 1) {
        scan_range(mw, sv, 0, scan_hi, cand[0]);
    } else {
        std::vector<ModLRS> copies(threads, mw);
        std::vector<std::thread> pool;
        unsigned long chunk = scan_hi / threads + 1;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                unsigned long a = std::min<unsigned long>(t * chunk, scan_hi);
                unsigned long b = std::min<unsigned long>(a + chunk, scan_hi);
                scan_range(copies[t], sv, a, b, cand[t]);
            });
        for (auto& th : pool) th.join();
    }

    // Confirmation stays serial and ordered, so the result is independent of
    // the thread count.
    for (auto& c : cand)
        for (unsigned long n : c) {
            ++stats.exact;
            if (iw.term(n) == 0) zeros.push_back(Int(n));
        }
    return zeros;
}

struct BranchOutcome {
    BranchInfo info;
    std::vector<Int> zeros;  // original indexing
    std::vector<std::pair<Int, Int>> progressions;
};

// Decide one non-degenerate residue class w(j) = u(mod*j + off).
BranchOutcome decide_branch(const LRS& w, const Int& off, const Int& mod,
                            const DecideOptions& opt) {
    BranchOutcome out;
    out.info.offset = off;
    out.info.modulus = mod;
    auto to_orig = [&](const Int& j) -> Int { return mod * j + off; };

    // Class-local cap: indices j with mod*j + off < opt.cap.
    Int cap_local = opt.cap <= off ? Int(0) : Int((opt.cap - off + mod - 1) / mod);

    if (w.is_zero_sequence()) {
        out.info.all_zero = true;
        out.info.status = Status::Decided;
        out.info.cutoff = 0;
        out.info.searched_below = 0;
        out.progressions.emplace_back(off, mod);
        return out;
    }

    BinetForm bf = binet_form(w);

    if (bf.zero_tail) {
        // Zero from index `transient` on; the finite head is checked directly.
        Int T(bf.transient);
        out.progressions.emplace_back(to_orig(T), mod);
        Int head = T <= cap_local ? T : cap_local;
        for (unsigned long j = 0; j < head.get_ui(); ++j)
            if (w.term(j) == 0) out.zeros.push_back(to_orig(Int(j)));
        out.info.status = T <= cap_local ? Status::Decided : Status::Bounded;
        out.info.cutoff = to_orig(T);
        out.info.searched_below = to_orig(head);
        return out;
    }

    Cutoff ct = compute_cutoff(bf, opt.precision);
    Int limit = ct.n0 + Int(bf.transient);  // class zero-free from here on
    Int N = limit <= cap_local ? limit : cap_local;

    EnumStats stats;
    std::vector<Int> zs = enumerate_zeros(w, N, opt, stats);
    for (const Int& j : zs) out.zeros.push_back(to_orig(j));

    out.info.status = limit <= cap_local ? Status::Decided : Status::Bounded;
    out.info.cutoff = to_orig(limit);
    out.info.searched_below = to_orig(N);
    out.info.place = ct.places[ct.chosen].place.str();
    out.info.lead = ct.places[ct.chosen].lead;
    out.info.sieve_density = stats.density;
    out.info.exact_checks = stats.exact;
    out.info.field_degree = ct.degree;
    out.info.certificate = ct.places[ct.chosen];
    return out;
}

}  // namespace

EngineResult decide(const LRS& u, const DecideOptions& opt) {
    require(opt.cap >= 0, "cap must be nonnegative");
    EngineResult res;

    if (u.is_zero_sequence()) {
        res.status = Status::Decided;
        res.progressions.emplace_back(Int(0), Int(1));
        res.searched_below = 0;
        res.cutoff = 0;
        BranchInfo bi;
        bi.offset = 0;
        bi.modulus = 1;
        bi.all_zero = true;
        res.branches.push_back(std::move(bi));
        return res;
    }

    LRS um = u.minimized();
    // Scope check before any splitting-field work: distinct nonzero roots of
    // the minimal characteristic polynomial, counted through its factors.
    long nroots = 0;
    for (const QPoly& g : irreducible_factors(um.charpoly()))
        if (!(g.degree() == 1 && g[0] == 0)) nroots += g.degree();
    check_input(nroots <= 4,
                "engine handles at most four distinct characteristic roots");

    BinetForm bf0 = binet_form(um);
    unsigned long M = bf0.zero_tail ? 1 : degeneracy_modulus(bf0);

    std::vector<BranchOutcome> branches;
    if (M == 1) {
        branches.push_back(decide_branch(um, Int(0), Int(1), opt));
    } else {
        // Root quotients that are roots of unity all have order dividing M,
        // so every M-step subsequence is non-degenerate (or identically zero).
        for (unsigned long t = 0; t < M; ++t)
            branches.push_back(decide_branch(um.subsequence(M, t), Int(t), Int(M), opt));
    }

    res.status = Status::Decided;
    res.cutoff = 0;
    for (auto& b : branches) {
        if (b.info.status == Status::Bounded) res.status = Status::Bounded;
        res.cutoff = std::max(res.cutoff, b.info.cutoff);
        for (auto& p : b.progressions) res.progressions.push_back(p);
        for (auto& z : b.zeros) res.zeros.push_back(z);
        res.branches.push_back(std::move(b.info));
    }
    if (res.status == Status::Decided) {
        // Zero-free beyond the cutoff and searched exhaustively below it:
        // the listed zero set is complete everywhere.
        res.searched_below = res.cutoff;
    } else {
        // Complete below the smallest searched bound of an undecided class.
        res.searched_below = Int(0);
        bool first = true;
        for (auto& b : res.branches)
            if (b.status == Status::Bounded) {
                if (first || b.searched_below < res.searched_below)
                    res.searched_below = b.searched_below;
                first = false;
            }
    }
    std::sort(res.progressions.begin(), res.progressions.end());
    std::sort(res.zeros.begin(), res.zeros.end());
    // Zeros covered by a reported progression are not listed twice.
    auto in_progression = [&](const Int& n) {
        for (auto& [o, m] : res.progressions)
            if (n >= o && (n - o) % m == 0) return true;
        return false;
    };
    res.zeros.erase(std::remove_if(res.zeros.begin(), res.zeros.end(), in_progression),
                    res.zeros.end());
    return res;
}

}  // namespace skolem
