#pragma once

#include "skolem/interval.hpp"
#include "skolem/poly.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace skolem {

// Number of real roots of squarefree f in (a, b], by Sturm's theorem.
int count_real_roots(const QPoly& f, const Rat& a, const Rat& b);

// Isolating intervals for all real roots of a squarefree f, sorted
// ascending. Each entry is either a point [r, r] (exact rational root) or an
// open interval (lo, hi) containing exactly one root with f(lo), f(hi) != 0.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const QPoly& f);

// Cauchy bound: all complex roots have modulus < bound.
Rat cauchy_root_bound(const QPoly& f);

// Evaluate an integer polynomial over a complex box.
CI eval_zpoly(const std::vector<Int>& f, const CI& x);
RI eval_zpoly(const std::vector<Int>& f, const RI& x);

// Lower bound for the minimal distance between distinct roots of a
// squarefree integer polynomial (Mahler).
Rat root_separation_bound(const std::vector<Int>& f);

// All roots of a squarefree polynomial with certified enclosures.
//
// Indices 0..real_count-1 are the real roots in ascending order, with exact
// zero imaginary part. The remaining indices hold complex-conjugate pairs,
// upper-half root immediately followed by its mirror image. Every box is
// certified to contain exactly one root, boxes are pairwise disjoint, and
// refinement always shrinks a box in place (nested enclosures).
class RootSystem {
public:
    static std::shared_ptr<RootSystem> isolate(const QPoly& f_squarefree);

    const std::vector<Int>& poly() const { return zf_; }
    int count() const { return static_cast<int>(roots_.size()); }
    int real_count() const { return real_count_; }
    bool is_real_root(int i) const { return roots_[at(i)].real; }
    int conj_index(int i) const;
    CI box(int i) const;
    // Exact rational bounds of a real root (requires is_real_root).
    std::pair<Rat, Rat> real_bounds(int i) const;

    // Shrink box i until both sides have width <= eps.
    void refine(int i, const Rat& eps);

    Rat separation_bound();

private:
    struct RootBox {
        bool real = false;
        Rat lo, hi;  // real roots only
        CI cbox;
        mpfr_prec_t prec = 128;
    };
    std::size_t at(int i) const {
        check_input(i >= 0 && i < count(), "root index out of range");
        return static_cast<std::size_t>(i);
    }
    void refine_real(RootBox& rb, const Rat& eps);
    void refine_complex(RootBox& rb, const Rat& eps);

    QPoly qf_;
    std::vector<Int> zf_;
    std::vector<RootBox> roots_;
    int real_count_ = 0;
    Rat sep_;  // cached separation bound, 0 if not computed
    mutable std::mutex mu_;
};

}  // namespace skolem
