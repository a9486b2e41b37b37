// Relative determinant and relative dimension calculus for semi-infinite
// subspaces of n(K), by explicit enumeration of affine roots in a finite
// t-degree window.
//
// An affine root (alpha, n) stands for the line e_alpha (x) t^n.  The root
// set of n(K) is {(alpha, n) : alpha > 0}; the Iwahori root set is
// {(alpha, n) : n > 0, or n = 0 and alpha > 0}.  The affine Weyl group acts
// by (alpha, n) |-> (wbar alpha, n + (wbar alpha)(lambda)) for w =
// t_lambda wbar.  The t h(O) summand of n(K)-dagger intersects none of the
// conjugates considered and is omitted throughout.
#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chevalley/weyl.hpp"

namespace chevalley {

// One affine root: index into +-positive_roots and a t-degree.
struct AffineRoot {
    int root_index;  // 0..npos-1
    bool negative;   // true: -positive_roots[root_index]
    long degree;

    friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
        if (a.root_index != b.root_index) return a.root_index < b.root_index;
        if (a.negative != b.negative) return a.negative < b.negative;
        return a.degree < b.degree;
    }
    friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
        return a.root_index == b.root_index && a.negative == b.negative && a.degree == b.degree;
    }
};

struct AffineRootWindow {
    long depth = 0;  // entries restricted to |degree| <= depth
    std::set<AffineRoot> entries;
};

namespace detail {

inline int positive_root_index(const RootDatum& datum, const Weight& alpha, bool& negative) {
    for (int i = 0; i < datum.num_positive_roots(); ++i) {
        if (datum.positive_roots[i] == alpha) {
            negative = false;
            return i;
        }
        if (-datum.positive_roots[i] == alpha) {
            negative = true;
            return i;
        }
    }
    throw std::logic_error("weight is not a root");
}

}  // namespace detail

// Window representation of n(O): alpha > 0, 0 <= n <= depth.
inline AffineRootWindow baseline_window(const RootDatum& datum, long depth) {
    AffineRootWindow w;
    w.depth = depth;
    for (int r = 0; r < datum.num_positive_roots(); ++r)
        for (long n = 0; n <= depth; ++n) w.entries.insert(AffineRoot{r, false, n});
    return w;
}

// Smallest window depth at which every degree shift produced by conjugation
// with w stays clear of the boundary shells.
inline long required_depth(const RootDatum& datum, const WeylGroup& g,
                           const AffineWeylElement& w) {
    AffineWeylElement winv = affine_inverse(datum, g, w);
    Int max_shift = 0;
    for (const auto& alpha : datum.positive_roots) {
        Int s = to_int(pair(datum, winv.translation, alpha));
        if (s < 0) s = -s;
        if (s > max_shift) max_shift = s;
    }
    return static_cast<long>(max_shift) + 2;
}

// Window representation of n(K) intersected with w i w^{-1}.
inline AffineRootWindow conjugated_subspace(const RootDatum& datum, const WeylGroup& g,
                                            const AffineWeylElement& w, long depth) {
    Rat ht = w.translation_height(datum);
    Rat abs_ht = ht < 0 ? -ht : ht;
    if (Rat(depth) < 2 * (abs_ht + 1) || depth < required_depth(datum, g, w))
        throw std::domain_error("conjugated_subspace: depth too small for this translation");

    AffineWeylElement winv = affine_inverse(datum, g, w);
    AffineRootWindow out;
    out.depth = depth;
    // (alpha, n) lies in i_w iff w^{-1}(alpha, n) lies in the Iwahori root set.
    for (int r = 0; r < datum.num_positive_roots(); ++r) {
        const Weight& alpha = datum.positive_roots[r];
        Weight balpha = winv.finite.apply(alpha);
        Rat shift = pair(datum, winv.translation, balpha);
        Int shift_i = to_int(shift);
        bool beta_negative;
        detail::positive_root_index(datum, balpha, beta_negative);
        for (long n = -depth; n <= depth; ++n) {
            Int m = Int(n) + shift_i;  // t-degree of w^{-1}(alpha, n)
            bool in_iwahori = m > 0 || (m == 0 && !beta_negative);
            if (in_iwahori) out.entries.insert(AffineRoot{r, false, n});
        }
    }
    return out;
}

// weight = sum_{U \ V} alpha - sum_{V \ U} alpha, dim = |U \ V| - |V \ U|.
// Windows must agree on the two outermost degree shells, which certifies
// that the symmetric difference is complete.
inline std::pair<Weight, Int> relative_det_dim(const RootDatum& datum, const AffineRootWindow& u,
                                               const AffineRootWindow& v) {
    if (u.depth != v.depth) throw std::domain_error("relative_det_dim: window depths differ");
    Weight weight = Weight::zero(datum.rank);
    Int dim = 0;
    auto root_of = [&](const AffineRoot& a) {
        Weight r = datum.positive_roots[a.root_index];
        return a.negative ? -r : r;
    };
    for (const auto& e : u.entries) {
        if (v.entries.count(e)) continue;
        if (std::abs(e.degree) >= u.depth - 1)
            throw std::domain_error("relative_det_dim: symmetric difference touches the boundary");
        weight = weight + root_of(e);
        dim += 1;
    }
    for (const auto& e : v.entries) {
        if (u.entries.count(e)) continue;
        if (std::abs(e.degree) >= u.depth - 1)
            throw std::domain_error("relative_det_dim: symmetric difference touches the boundary");
        weight = weight - root_of(e);
        dim -= 1;
    }
    return {weight, dim};
}

struct DetLemmaRow {
    AffineWeylElement w;
    Weight enumerated_weight;
    Int enumerated_dim = 0;
    Weight predicted_weight;
    Int predicted_dim = 0;
    bool pass = false;
};

struct DetLemmaReport {
    bool ok = true;
    std::vector<DetLemmaRow> rows;
};

// Checks det(n(K) cap i_w, n(O)) = C_{wbar.0 + kappa_c(lambda_w)} and
// dim = -2 ht(lambda_w) - l(wbar) for every w in the height window.
inline DetLemmaReport verify_det_lemma(const RootDatum& datum, const WeylGroup& g,
                                       long max_height) {
    DetLemmaReport report;
    Level kappa_c(critical_level(datum));
    auto window = enumerate_Waff_window(g, max_height);
    long depth = 2 * (max_height + 1) + 2;
    for (const auto& w : window) depth = std::max(depth, required_depth(datum, g, w));
    AffineRootWindow base = baseline_window(datum, depth);
    for (const auto& w : window) {
        DetLemmaRow row;
        row.w = w;
        auto [wt, dim] = relative_det_dim(datum, conjugated_subspace(datum, g, w, depth), base);
        row.enumerated_weight = wt;
        row.enumerated_dim = dim;
        row.predicted_weight = dot_finite(datum, w.finite, Weight::zero(datum.rank)) +
                               coweight_to_weight(datum, kappa_c, w.translation);
        row.predicted_dim = -2 * to_int(w.translation_height(datum)) - w.finite.length();
        row.pass = row.enumerated_weight == row.predicted_weight &&
                   row.enumerated_dim == row.predicted_dim;
        if (!row.pass) report.ok = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace chevalley
