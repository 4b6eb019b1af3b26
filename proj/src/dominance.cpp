#include "skolem/dominance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skolem {

std::string PlaceRef::str() const {
    std::ostringstream os;
    if (arch)
        os << (inf.real ? "sigma_" : "tau_") << inf.emb;
    else
        os << "P(" << fin.p() << ";e=" << fin.e() << ",f=" << fin.f() << ")#"
           << ordinal;
    return os.str();
}

AlgebraicNumber conjugate_at(const NumberField& K, const FVec& x,
                             const ArchPlace& v) {
    QPoly m = K.minpoly_of(x);
    if (m.degree() == 1) return AlgebraicNumber(Rat(-m[0] / m[1]));
    return AlgebraicNumber::locate(
        m, [&](const Rat& eps) { return K.embed(x, v.emb, eps); });
}

namespace {

// Group indices already sorted from largest to smallest magnitude; eq(a, b)
// decides exact ties.
template <typename Less, typename Eq>
DominanceLayers group_sorted(size_t n, Less less, Eq eq) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), less);
    DominanceLayers L;
    for (int i : idx) {
        if (!L.groups.empty() && eq(L.groups.back().front(), i))
            L.groups.back().push_back(i);
        else
            L.groups.push_back({i});
    }
    return L;
}

}  // namespace

DominanceLayers layers_at_arch(const NumberField& K,
                               const std::vector<FVec>& xs,
                               const ArchPlace& v) {
    std::vector<AlgebraicNumber> mu;  // |sigma_v(x)|^2, real algebraic
    mu.reserve(xs.size());
    for (const FVec& x : xs) mu.push_back(conjugate_at(K, x, v).abs_sq());
    return group_sorted(
        xs.size(), [&](int a, int b) { return mu[a].compare(mu[b]) > 0; },
        [&](int a, int b) { return mu[a] == mu[b]; });
}

DominanceLayers layers_at_finite(const std::vector<FVec>& xs,
                                 const FinitePlace& v) {
    std::vector<long> nu;
    nu.reserve(xs.size());
    for (const FVec& x : xs) nu.push_back(v.valuation(x));
    // Smaller valuation = larger magnitude.
    return group_sorted(
        xs.size(), [&](int a, int b) { return nu[a] < nu[b]; },
        [&](int a, int b) { return nu[a] == nu[b]; });
}

std::vector<UsablePlace> usable_places(const BinetForm& bf) {
    const NumberField& K = bf.field;
    std::vector<FVec> xs;
    xs.reserve(bf.roots.size());
    for (const auto& r : bf.roots) xs.push_back(r.coords);

    std::vector<UsablePlace> out;
    for (const ArchPlace& v : archimedean_places(K)) {
        DominanceLayers L = layers_at_arch(K, xs, v);
        if (L.lead_count() <= 3)
            out.push_back({PlaceRef{true, v, FinitePlace(), 0}, L});
    }
    for (const Int& p : relevant_primes(K, xs)) {
        auto ws = finite_places_above(K, p);
        for (size_t i = 0; i < ws.size(); ++i) {
            DominanceLayers L = layers_at_finite(xs, ws[i]);
            if (L.lead_count() <= 2)
                out.push_back(
                    {PlaceRef{false, ArchPlace(), ws[i], (int)i}, L});
        }
    }
    return out;
}

RI place_gap(const NumberField& K, const std::vector<FVec>& xs,
             const UsablePlace& up, mpfr_prec_t prec) {
    require(up.layers.groups.size() >= 2, "place_gap: no subleading layer");
    int ilead = up.layers.groups[0][0];
    int inext = up.layers.groups[1][0];
    if (!up.place.arch) {
        const FinitePlace& w = up.place.fin;
        long d = w.valuation(xs[inext]) - w.valuation(xs[ilead]);
        return ri_log(RI::of(w.p(), prec)) * RI::of(Rat(d, w.e()), prec);
    }
    AlgebraicNumber a = conjugate_at(K, xs[ilead], up.place.inf).abs_sq();
    AlgebraicNumber b = conjugate_at(K, xs[inext], up.place.inf).abs_sq();
    Rat eps(1, Int(1) << 40);
    for (;;) {
        a.refine(eps);
        b.refine(eps);
        RI ra = a.enclosure().re(), rb = b.enclosure().re();
        if (rb.is_positive() && rb.surely_lt(ra)) {
            RI half = RI::of(Rat(1, 2), prec);
            return ri_log(ra / rb) * half;
        }
        eps /= Int(1) << 40;
    }
}

}  // namespace skolem
