#include "skolem/lrs.hpp"

#include <algorithm>
#include <numeric>

namespace skolem {

LRS::LRS(std::vector<Rat> rec, std::vector<Rat> init)
    : rec_(std::move(rec)), init_(std::move(init)) {
    check_input(rec_.size() == init_.size(),
                "recurrence order and initial-term count differ");
}

QPoly LRS::charpoly() const {
    std::vector<Rat> c(rec_.size() + 1);
    for (std::size_t i = 0; i < rec_.size(); ++i) c[i] = -rec_[i];
    c.back() = 1;
    return QPoly(std::move(c));
}

std::vector<Rat> LRS::terms(unsigned long count) const {
    std::vector<Rat> out;
    out.reserve(count);
    std::size_t k = rec_.size();
    for (unsigned long n = 0; n < count; ++n) {
        if (n < k) {
            out.push_back(init_[n]);
            continue;
        }
        Rat acc(0);
        for (std::size_t i = 0; i < k; ++i)
            acc += rec_[i] * out[n - k + i];
        out.push_back(std::move(acc));
    }
    return out;
}

Rat LRS::term(unsigned long n) const {
    std::size_t k = rec_.size();
    if (k == 0) return Rat(0);
    if (n < k) return init_[n];
    if (n <= 8 * k + 64) return terms(n + 1).back();
    // Companion-matrix power on the state vector.
    using Mat = std::vector<std::vector<Rat>>;
    auto mul = [&](const Mat& a, const Mat& b) {
        Mat r(k, std::vector<Rat>(k, Rat(0)));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l) {
                if (a[i][l] == 0) continue;
                for (std::size_t j = 0; j < k; ++j)
                    r[i][j] += a[i][l] * b[l][j];
            }
        return r;
    };
    Mat c(k, std::vector<Rat>(k, Rat(0)));
    for (std::size_t j = 0; j < k - 1; ++j) c[j][j + 1] = 1;
    for (std::size_t j = 0; j < k; ++j) c[k - 1][j] = rec_[j];
    Mat acc(k, std::vector<Rat>(k, Rat(0)));
    for (std::size_t j = 0; j < k; ++j) acc[j][j] = 1;
    unsigned long e = n;
    while (e) {
        if (e & 1) acc = mul(acc, c);
        c = mul(c, c);
        e >>= 1;
    }
    Rat out(0);
    for (std::size_t j = 0; j < k; ++j) out += acc[0][j] * init_[j];
    return out;
}

bool LRS::is_zero_sequence() const {
    for (const auto& v : init_)
        if (v != 0) return false;
    return true;
}

namespace {

// Berlekamp-Massey over Q: minimal connection polynomial of the window.
// Returns the recurrence coefficients c[0..L-1] with
// s[n] = sum_i c[i] s[n-L+i] for L <= n < window size.
std::vector<Rat> berlekamp_massey(const std::vector<Rat>& s) {
    std::vector<Rat> C{Rat(1)}, B{Rat(1)};
    std::size_t L = 0, m = 1;
    Rat b(1);
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rat d(0);
        for (std::size_t i = 0; i <= L && i <= n && i < C.size(); ++i)
            d += C[i] * s[n - i];
        if (d == 0) {
            ++m;
            continue;
        }
        if (2 * L <= n) {
            std::vector<Rat> T = C;
            Rat f = d / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, Rat(0));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= f * B[i];
            L = n + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            Rat f = d / b;
            if (C.size() < B.size() + m) C.resize(B.size() + m, Rat(0));
            for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= f * B[i];
            ++m;
        }
    }
    // C(x) = 1 + C[1] x + ...: s[n] = -sum_{i>=1} C[i] s[n-i].
    std::vector<Rat> rec(L, Rat(0));
    for (std::size_t i = 1; i <= L; ++i)
        if (i < C.size()) rec[L - i] = -C[i];
    return rec;
}

}  // namespace

LRS LRS::minimized() const {
    if (order() == 0) return *this;
    std::vector<Rat> window = terms(2 * static_cast<unsigned long>(order()) + 2);
    std::vector<Rat> rec = berlekamp_massey(window);
    std::vector<Rat> init(window.begin(),
                          window.begin() + static_cast<long>(rec.size()));
    LRS out(std::move(rec), std::move(init));
    // The window length certifies minimality and correctness for a sequence
    // already known to satisfy a recurrence of the input order.
    std::vector<Rat> check = out.terms(window.size());
    require(check == window, "minimization changed the sequence");
    return out;
}

LRS LRS::subsequence(unsigned long M, unsigned long t) const {
    check_input(M >= 1, "subsequence modulus must be positive");
    if (order() == 0) return *this;
    unsigned long k = static_cast<unsigned long>(order());
    // The subsequence satisfies a recurrence of order at most k.
    std::vector<Rat> window(2 * k + 2);
    for (unsigned long j = 0; j < window.size(); ++j)
        window[j] = term(M * j + t);
    std::vector<Rat> rec = berlekamp_massey(window);
    require(rec.size() <= k, "subsequence order exceeded the bound");
    std::vector<Rat> init(window.begin(),
                          window.begin() + static_cast<long>(rec.size()));
    LRS out(std::move(rec), std::move(init));
    std::vector<Rat> check = out.terms(window.size());
    require(check == window, "subsequence recurrence mismatch");
    return out;
}

LRS LRS::integer_form() const {
    if (order() == 0) return *this;
    std::size_t k = rec_.size();
    Int d0(1);
    for (const auto& c : rec_) d0 = lcm(d0, den(c));
    std::vector<Rat> rec(k);
    for (std::size_t i = 0; i < k; ++i)
        rec[i] = rec_[i] * Rat(pow(d0, static_cast<unsigned long>(k - i)));
    std::vector<Rat> init(k);
    Int scale(1);
    Rat d0p(1);
    for (std::size_t i = 0; i < k; ++i) {
        init[i] = init_[i] * d0p;
        scale = lcm(scale, den(init[i]));
        d0p *= Rat(d0);
    }
    for (auto& v : init) v *= Rat(scale);
    for (const auto& c : rec) require(den(c) == 1, "integer recurrence");
    for (const auto& c : init) require(den(c) == 1, "integer initial terms");
    return LRS(std::move(rec), std::move(init));
}

BinetForm binet_form(const LRS& u) {
    BinetForm bf;
    bf.minimal = u.minimized();
    if (bf.minimal.order() == 0) {
        bf.transient = 0;
        bf.stripped = bf.minimal;
        bf.zero_tail = true;
        return bf;
    }
    QPoly chi = bf.minimal.charpoly();
    // Transient = multiplicity of the root 0.
    long s = 0;
    while (chi[static_cast<int>(s)] == 0) ++s;
    bf.transient = s;
    long kk = chi.degree() - s;
    if (kk == 0) {
        // Sequence vanishes from index s on.
        bf.stripped = LRS({}, {});
        bf.zero_tail = true;
        return bf;
    }
    std::vector<Rat> rec(static_cast<std::size_t>(kk));
    for (long i = 0; i < kk; ++i)
        rec[static_cast<std::size_t>(i)] = -chi[static_cast<int>(s + i)];
    std::vector<Rat> init(static_cast<std::size_t>(kk));
    for (long i = 0; i < kk; ++i)
        init[static_cast<std::size_t>(i)] =
            bf.minimal.term(static_cast<unsigned long>(s + i));
    bf.stripped = LRS(std::move(rec), std::move(init));
    bf.zero_tail = false;

    // Distinct nonzero roots with multiplicities.
    QPoly tail = bf.stripped.charpoly();
    std::vector<std::pair<AlgebraicNumber, int>> rts;
    for (const auto& [part, mult] : squarefree_decomposition(tail))
        for (const auto& r : AlgebraicNumber::roots_of(part))
            rts.emplace_back(r, mult);
    std::vector<AlgebraicNumber> vals;
    for (auto& rm : rts) vals.push_back(rm.first);
    FieldBuild fb = build_field(vals);
    bf.field = fb.field;
    const NumberField& L = bf.field;

    // Confluent Vandermonde solve for the coefficient polynomials.
    long total = 0;
    for (auto& rm : rts) total += rm.second;
    require(total == kk, "root multiplicities do not add up");
    std::size_t n_unk = static_cast<std::size_t>(kk);
    // Columns: for each root j and power t < mult_j, entry n^t lambda_j^n.
    std::vector<std::vector<FVec>> A(
        n_unk, std::vector<FVec>(n_unk, L.zero()));
    std::vector<FVec> rhs(n_unk, L.zero());
    for (std::size_t row = 0; row < n_unk; ++row) {
        unsigned long n = row;
        rhs[row] = L.from_rat(bf.stripped.term(n));
        std::size_t col = 0;
        for (std::size_t j = 0; j < rts.size(); ++j) {
            FVec lam_n = L.pow_ui(fb.coords[j], n);
            Rat npow(1);
            for (int t = 0; t < rts[j].second; ++t) {
                A[row][col] = L.mul_rat(lam_n, npow);
                npow *= Rat(static_cast<long>(n));
                ++col;
            }
        }
        require(col == n_unk, "system width mismatch");
    }
    // Gaussian elimination over the field.
    std::vector<FVec> sol(n_unk, L.zero());
    {
        std::size_t m = n_unk;
        for (std::size_t c2 = 0; c2 < m; ++c2) {
            std::size_t piv = c2;
            while (piv < m && L.is_zero(A[piv][c2])) ++piv;
            require(piv < m, "confluent Vandermonde is singular");
            std::swap(A[c2], A[piv]);
            std::swap(rhs[c2], rhs[piv]);
            FVec inv = L.inverse(A[c2][c2]);
            for (std::size_t j2 = c2; j2 < m; ++j2)
                A[c2][j2] = L.mul(A[c2][j2], inv);
            rhs[c2] = L.mul(rhs[c2], inv);
            for (std::size_t i2 = 0; i2 < m; ++i2) {
                if (i2 == c2 || L.is_zero(A[i2][c2])) continue;
                FVec f = A[i2][c2];
                for (std::size_t j2 = c2; j2 < m; ++j2)
                    A[i2][j2] = L.sub(A[i2][j2], L.mul(f, A[c2][j2]));
                rhs[i2] = L.sub(rhs[i2], L.mul(f, rhs[c2]));
            }
        }
        sol = rhs;
    }
    std::size_t col = 0;
    for (std::size_t j = 0; j < rts.size(); ++j) {
        BinetRoot br;
        br.value = rts[j].first;
        br.coords = fb.coords[j];
        br.mult = rts[j].second;
        for (int t = 0; t < br.mult; ++t) br.coeffs.push_back(sol[col++]);
        require(!L.is_zero(br.coeffs.back()),
                "leading Binet coefficient vanished");
        bf.roots.push_back(std::move(br));
    }

    // Cross-check the decomposition against the sequence itself.
    for (unsigned long n = 0; n < 2 * static_cast<unsigned long>(kk) + 2; ++n) {
        FVec acc = L.zero();
        for (const auto& br : bf.roots) {
            FVec lam_n = L.pow_ui(br.coords, n);
            FVec poly = L.zero();
            Rat npow(1);
            for (const auto& cf : br.coeffs) {
                poly = L.add(poly, L.mul_rat(cf, npow));
                npow *= Rat(static_cast<long>(n));
            }
            acc = L.add(acc, L.mul(poly, lam_n));
        }
        FVec want = L.from_rat(bf.stripped.term(n));
        require(acc == want, "Binet form does not reproduce the sequence");
    }
    return bf;
}

unsigned long degeneracy_modulus(const BinetForm& bf) {
    unsigned long M = 1;
    const NumberField& L = bf.field;
    for (std::size_t i = 0; i < bf.roots.size(); ++i)
        for (std::size_t j = i + 1; j < bf.roots.size(); ++j) {
            FVec ratio = L.div(bf.roots[i].coords, bf.roots[j].coords);
            QPoly mp = L.minpoly_of(ratio);
            if (auto ord = root_of_unity_order(mp)) {
                unsigned long g = std::gcd(M, *ord);
                M = M / g * *ord;
            }
        }
    return M;
}

}  // namespace skolem
