// Finite and affine Weyl groups, dot actions at a level, and the
// "sufficiently negative" level predicates.
//
// The affine Weyl group is Gamma x| W with Gamma the coroot lattice.  The
// affine dot action at level kappa is w.chi = wbar.chi - kappa(lambda_w),
// where kappa(lambda_w) is the image of the translation coweight under the
// scaled invariant form.  Finite windows of W_aff are enumerated by
// translation height: the window of height h holds every lambda whose
// simple-coroot coordinates have absolute sum <= h (so |ht lambda| <= h),
// paired with every finite element.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "chevalley/rootdata.hpp"

namespace chevalley {

struct WeylElement {
    std::vector<int> word;       // reduced word in simple reflections
    std::vector<IntVec> wmat;    // action on weights, fundamental-weight basis
    std::vector<IntVec> cmat;    // action on coweights, simple-coroot basis

    int length() const { return static_cast<int>(word.size()); }
    bool is_identity() const { return word.empty(); }

    Weight apply(const Weight& chi) const {
        int n = static_cast<int>(wmat.size());
        RatVec out(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[i] += Rat(wmat[i][j]) * chi.coords[j];
        return Weight(std::move(out));
    }

    Coweight apply(const RootDatum& datum, const Coweight& lambda) const {
        RatVec u = datum.coroot_coords(lambda);
        int n = static_cast<int>(cmat.size());
        RatVec v(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[i] += Rat(cmat[i][j]) * u[j];
        // back to fundamental-coweight coordinates: coords = A^T v
        IntVec coords(n, Int(0));
        for (int i = 0; i < n; ++i) {
            Rat c = 0;
            for (int j = 0; j < n; ++j) c += Rat(datum.cartan[j][i]) * v[j];
            coords[i] = to_int(c);
        }
        return Coweight(std::move(coords));
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.wmat == b.wmat; }
};

struct WeylGroup {
    RootDatum datum;
    std::vector<WeylElement> elements;  // sorted by (length, word lex); identity first
    std::map<std::vector<IntVec>, int> index_of_matrix;
    int longest = 0;

    int size() const { return static_cast<int>(elements.size()); }
    const WeylElement& identity() const { return elements[0]; }
    const WeylElement& longest_element() const { return elements[longest]; }

    int index(const WeylElement& w) const {
        auto it = index_of_matrix.find(w.wmat);
        if (it == index_of_matrix.end()) throw std::invalid_argument("element not in this group");
        return it->second;
    }

    // uv: apply v first, then u.
    WeylElement multiply(const WeylElement& u, const WeylElement& v) const {
        return elements[index_of_matrix.at(mat_prod(u.wmat, v.wmat))];
    }

    WeylElement inverse(const WeylElement& u) const {
        for (const auto& v : elements)
            if (is_id(mat_prod(u.wmat, v.wmat))) return v;
        throw std::logic_error("no inverse found");
    }

    static std::vector<IntVec> mat_prod(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
        int n = static_cast<int>(a.size());
        std::vector<IntVec> out(n, IntVec(n, Int(0)));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (a[i][k] == 0) continue;
                for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
            }
        return out;
    }

    static bool is_id(const std::vector<IntVec>& m) {
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j)
                if (m[i][j] != Int(i == j ? 1 : 0)) return false;
        return true;
    }
};

inline WeylGroup enumerate_W(const RootDatum& datum) {
    int n = datum.rank;
    // Simple reflection matrices on weights and on coweights (coroot coords).
    std::vector<std::vector<IntVec>> refl_w, refl_c;
    for (int i = 0; i < n; ++i) {
        std::vector<IntVec> sw(n, IntVec(n, Int(0))), sc(n, IntVec(n, Int(0)));
        for (int k = 0; k < n; ++k) sw[k][k] = sc[k][k] = 1;
        for (int k = 0; k < n; ++k) sw[k][i] -= datum.cartan[k][i];  // alpha_i column
        // s_i(lambda) = lambda - alpha_i(lambda) H_i with alpha_i(H_j) = a_ji
        for (int j = 0; j < n; ++j) sc[i][j] -= datum.cartan[j][i];
        refl_w.push_back(std::move(sw));
        refl_c.push_back(std::move(sc));
    }

    WeylGroup g;
    g.datum = datum;
    WeylElement id;
    id.word = {};
    id.wmat.assign(n, IntVec(n, Int(0)));
    id.cmat.assign(n, IntVec(n, Int(0)));
    for (int i = 0; i < n; ++i) id.wmat[i][i] = id.cmat[i][i] = 1;

    std::vector<WeylElement> frontier{id};
    g.elements.push_back(id);
    g.index_of_matrix[id.wmat] = 0;
    while (!frontier.empty()) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier) {
            for (int i = 0; i < n; ++i) {
                WeylElement ws;
                ws.word = w.word;
                ws.word.push_back(i);
                ws.wmat = WeylGroup::mat_prod(w.wmat, refl_w[i]);
                ws.cmat = WeylGroup::mat_prod(w.cmat, refl_c[i]);
                if (g.index_of_matrix.count(ws.wmat)) continue;
                g.index_of_matrix[ws.wmat] = -1;  // placeholder, reindexed below
                g.elements.push_back(ws);
                next.push_back(std::move(ws));
            }
        }
        frontier = std::move(next);
    }
    std::sort(g.elements.begin(), g.elements.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.word < b.word;
    });
    for (int i = 0; i < g.size(); ++i) g.index_of_matrix[g.elements[i].wmat] = i;
    g.longest = g.size() - 1;
    return g;
}

// Shifted (dot) action: w.chi = w(chi+rho) - rho.
inline Weight dot_finite(const RootDatum& datum, const WeylElement& w, const Weight& chi) {
    return w.apply(chi + datum.rho) - datum.rho;
}

struct AffineWeylElement {
    Coweight translation;  // lambda_w in Gamma
    WeylElement finite;    // wbar

    Rat translation_height(const RootDatum& datum) const {
        return datum.coweight_height(translation);
    }
};

// Semidirect product: (lambda,u)(mu,v) = (lambda + u(mu), uv).
inline AffineWeylElement compose(const RootDatum& datum, const WeylGroup& g,
                                 const AffineWeylElement& x, const AffineWeylElement& y) {
    AffineWeylElement out;
    out.translation = x.translation + x.finite.apply(datum, y.translation);
    out.finite = g.multiply(x.finite, y.finite);
    return out;
}

inline AffineWeylElement affine_inverse(const RootDatum& datum, const WeylGroup& g,
                                        const AffineWeylElement& x) {
    AffineWeylElement out;
    out.finite = g.inverse(x.finite);
    out.translation = -out.finite.apply(datum, x.translation);
    return out;
}

// Affine dot action at the given level: w.chi = wbar.chi - level(lambda_w).
inline Weight dot_affine(const RootDatum& datum, const AffineWeylElement& w, const Weight& chi,
                         const Level& level) {
    return dot_finite(datum, w.finite, chi) - coweight_to_weight(datum, level, w.translation);
}

namespace detail {

// All coroot-coordinate vectors with |u_1| + ... + |u_r| <= radius, sorted
// by (height = sum u_i, lexicographic).
inline std::vector<IntVec> coroot_l1_ball(int rank, long radius) {
    std::vector<IntVec> out;
    IntVec cur(rank, Int(0));
    auto rec = [&](auto&& self, int pos, long remaining) -> void {
        if (pos == rank) {
            out.push_back(cur);
            return;
        }
        for (long v = -remaining; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - std::abs(v));
        }
        cur[pos] = 0;
    };
    rec(rec, 0, radius);
    auto height = [](const IntVec& u) {
        Int h = 0;
        for (const auto& c : u) h += c;
        return h;
    };
    std::sort(out.begin(), out.end(), [&](const IntVec& a, const IntVec& b) {
        Int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

}  // namespace detail

// Finite window of W_aff: every (lambda, wbar) with lambda in the coroot
// l1-ball of the given radius (hence |ht lambda| <= max_height).
inline std::vector<AffineWeylElement> enumerate_Waff_window(const WeylGroup& g, long max_height) {
    if (max_height < 0) throw std::invalid_argument("enumerate_Waff_window: negative height");
    std::vector<AffineWeylElement> out;
    for (const auto& u : detail::coroot_l1_ball(g.datum.rank, max_height))
        for (const auto& w : g.elements)
            out.push_back(AffineWeylElement{g.datum.coweight_from_coroot(u), w});
    return out;
}

struct LevelPredicates {
    bool irreducible = false;
    bool orbit_free = false;
    bool sufficient = false;
};

// The three conditions from the remark on sufficiently negative levels:
//   irreducible:  kappa <= -(chi,theta)_0 - 1
//   orbit_free :  for every w != e some root alpha has
//                 (alpha, (chi-rho-w(chi-rho))/(kappa-kappa_c))_0 not in Z
//   sufficient :  kappa - kappa_c < -2(chi-rho,theta)_0
inline LevelPredicates level_predicates(const RootDatum& datum, const WeylGroup& g,
                                        const Weight& chi, const Rat& kappa) {
    LevelPredicates p;
    Rat kc = critical_level(datum);
    p.irreducible = kappa <= -datum.form0(chi, datum.theta) - 1;
    p.sufficient = kappa - kc < -2 * datum.form0(chi - datum.rho, datum.theta);
    if (kappa == kc) throw std::domain_error("level_predicates: kappa equals the critical level");
    p.orbit_free = true;
    Weight shifted = chi - datum.rho;
    for (const auto& w : g.elements) {
        if (w.is_identity()) continue;
        Weight diff = shifted - w.apply(shifted);
        bool witness = false;
        for (const auto& alpha : datum.positive_roots) {
            if (!is_integer(datum.form0(alpha, diff) / (kappa - kc))) {
                witness = true;
                break;
            }
        }
        if (!witness) {
            p.orbit_free = false;
            break;
        }
    }
    return p;
}

// True iff the affine dot orbit of -chi is collision-free over the window.
inline bool distinct_dot_orbit(const RootDatum& datum, const WeylGroup& g, const Weight& chi,
                               const Level& level, long max_height) {
    std::set<Weight> seen;
    for (const auto& w : enumerate_Waff_window(g, max_height)) {
        if (!seen.insert(dot_affine(datum, w, -chi, level)).second) return false;
    }
    return true;
}

}  // namespace chevalley
