// Chevalley-Eilenberg cohomology of the nilpotent radical n: trivial
// coefficients (Kostant's theorem and the cup product on the distinguished
// classes omega_w) and weight-truncated semi-induced coefficient modules
// (delta-module sections, modeled as Ind_{n cap n_w}^n Coind_0^{n cap n_w}
// of the fiber line).
//
// Structure constants come from a Chevalley basis: type A from gl matrix
// units E_ij, types B2 and G2 from fixed sign tables keyed by root
// coordinates.  The Jacobi identity is asserted at construction, and d.d = 0
// is asserted per weight block, so a bad sign table cannot survive setup.
//
// The positive-root basis is ordered by (height, lexicographic root
// coordinates); all cocycle signs and determinant lines are taken in this
// order.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "chevalley/characters.hpp"
#include "chevalley/linalg.hpp"
#include "chevalley/weyl.hpp"

namespace chevalley {

// Bracket table of n in the ordered positive-root basis:
// [e_i, e_j] = coeff * e_k, at most one term for the supported types.
struct NilStructure {
    int npos = 0;
    std::vector<std::vector<std::pair<int, Int>>> bracket;  // (target, coeff), coeff 0 if none

    std::pair<int, Int> at(int i, int j) const { return bracket[i][j]; }
};

namespace detail {

inline NilStructure build_nil_structure(const RootDatum& datum) {
    NilStructure s;
    s.npos = datum.num_positive_roots();
    s.bracket.assign(s.npos, std::vector<std::pair<int, Int>>(s.npos, {-1, Int(0)}));

    std::map<IntVec, int> index_of_root;
    for (int i = 0; i < s.npos; ++i) index_of_root[datum.positive_root_coords[i]] = i;

    auto set_entry = [&](const IntVec& a, const IntVec& b, const Int& coeff) {
        IntVec sum(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
        int ia = index_of_root.at(a), ib = index_of_root.at(b), ic = index_of_root.at(sum);
        s.bracket[ia][ib] = {ic, coeff};
        s.bracket[ib][ia] = {ic, -coeff};
    };

    const std::string base = datum.name.ends_with("v") ? datum.name.substr(0, 2) : datum.name;
    const bool dualized = datum.name.ends_with("v");
    if (base[0] == 'A') {
        // gl realization: a positive root with support [p, q) is E_{p,q+1}
        // and [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb.
        auto ends = [&](const IntVec& rc) {
            int first = -1, last = -1;
            for (int i = 0; i < datum.rank; ++i)
                if (rc[i] == 1) {
                    if (first < 0) first = i;
                    last = i;
                }
            return std::make_pair(first + 1, last + 2);  // 1-based (p, q)
        };
        for (int i = 0; i < s.npos; ++i)
            for (int j = 0; j < s.npos; ++j) {
                if (i == j) continue;
                auto [a, b] = ends(datum.positive_root_coords[i]);
                auto [c, d] = ends(datum.positive_root_coords[j]);
                Int coeff = 0;
                IntVec sum(datum.rank);
                for (int t = 0; t < datum.rank; ++t)
                    sum[t] = datum.positive_root_coords[i][t] + datum.positive_root_coords[j][t];
                if (!index_of_root.count(sum)) continue;
                if (b == c) coeff = 1;
                if (d == a) coeff = -1;
                if (coeff != 0) s.bracket[i][j] = {index_of_root.at(sum), coeff};
            }
    } else if (base == "B2") {
        auto rc = [](long a, long b) { return IntVec{Int(a), Int(b)}; };
        if (!dualized) {
            set_entry(rc(1, 0), rc(0, 1), Int(1));   // [e_a1, e_a2] = e_{a1+a2}
            set_entry(rc(0, 1), rc(1, 1), Int(2));   // [e_a2, e_{a1+a2}] = 2 e_{a1+2a2}
        } else {
            // dual datum (type C2): short/long swapped, table mirrored
            set_entry(rc(1, 0), rc(0, 1), Int(1));
            set_entry(rc(1, 0), rc(1, 1), Int(2));   // [e_a1, e_{a1+a2}] = 2 e_{2a1+a2}
        }
    } else if (base == "G2") {
        auto rc = [](long a, long b) { return IntVec{Int(a), Int(b)}; };
        if (!dualized) {
            // alpha1 long, alpha2 short; positive roots a1, a2, a1+a2,
            // a1+2a2, a1+3a2, 2a1+3a2
            set_entry(rc(1, 0), rc(0, 1), Int(1));
            set_entry(rc(0, 1), rc(1, 1), Int(2));
            set_entry(rc(0, 1), rc(1, 2), Int(3));
            set_entry(rc(1, 0), rc(1, 3), Int(1));
            set_entry(rc(1, 1), rc(1, 2), Int(3));
        } else {
            set_entry(rc(0, 1), rc(1, 0), Int(1));
            set_entry(rc(1, 0), rc(1, 1), Int(2));
            set_entry(rc(1, 0), rc(2, 1), Int(3));
            set_entry(rc(0, 1), rc(3, 1), Int(1));
            set_entry(rc(1, 1), rc(2, 1), Int(3));
        }
    } else {
        throw std::invalid_argument("no Chevalley table for type " + datum.name);
    }

    // Jacobi on all triples: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0.
    for (int x = 0; x < s.npos; ++x)
        for (int y = 0; y < s.npos; ++y)
            for (int z = 0; z < s.npos; ++z) {
                std::map<int, Int> acc;
                auto add2 = [&](int a, int b, const Int& c) {
                    if (c == 0) return;
                    auto [t, cc] = s.at(a, b);
                    if (cc != 0) acc[t] += c * cc;
                };
                auto [t1, c1] = s.at(x, y);
                if (c1 != 0) add2(t1, z, c1);
                auto [t2, c2] = s.at(y, z);
                if (c2 != 0) add2(t2, x, c2);
                auto [t3, c3] = s.at(z, x);
                if (c3 != 0) add2(t3, y, c3);
                for (const auto& [t, c] : acc)
                    if (c != 0) throw std::logic_error("Jacobi identity fails for " + datum.name);
            }
    return s;
}

// Sign of merging two disjoint index masks into sorted order.
inline int merge_sign(unsigned a, unsigned b) {
    int inversions = 0;
    for (int i = 0; i < 32; ++i) {
        if (!(b >> i & 1u)) continue;
        inversions += __builtin_popcount(a >> (i + 1));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

struct CohomologyTable {
    // (degree, weight) -> exact dimension; zero dimensions omitted
    std::map<std::pair<long, Weight>, Int> dims;
    std::set<Weight> untrusted;  // weights whose blocks touch the truncation

    Int dim(long degree, const Weight& w) const {
        auto it = dims.find({degree, w});
        return it == dims.end() ? Int(0) : it->second;
    }
    bool trusted(const Weight& w) const { return !untrusted.count(w); }
};

// H^*(n, C) with the distinguished Kostant classes and their cup products.
struct TrivialCohomology {
    RootDatum datum;
    WeylGroup group;
    NilStructure nil;
    CohomologyTable table;
    std::vector<unsigned> omega_mask;  // per Weyl-element index: wedge over {alpha>0 : w^{-1}alpha<0}
    std::vector<Weight> omega_weight;  // = w.0

    int npos() const { return nil.npos; }

    Weight mask_weight(unsigned mask) const {
        Weight w = Weight::zero(datum.rank);
        for (int i = 0; i < npos(); ++i)
            if (mask >> i & 1u) w = w - datum.positive_roots[i];
        return w;
    }

    // d of a basis monomial of Wedge* n^*: d c^g = -sum_{a<b} f^g_{ab} c^a c^b,
    // extended as an antiderivation.
    std::map<unsigned, Int> d_monomial(unsigned mask) const {
        std::map<unsigned, Int> out;
        int pos_in_mask = 0;
        for (int g = 0; g < npos(); ++g) {
            if (!(mask >> g & 1u)) continue;
            Int outer_sign = (pos_in_mask % 2 == 0) ? 1 : -1;
            unsigned rest = mask & ~(1u << g);
            for (int a = 0; a < npos(); ++a)
                for (int b = a + 1; b < npos(); ++b) {
                    auto [t, c] = nil.at(a, b);
                    if (c == 0 || t != g) continue;
                    unsigned pair_mask = (1u << a) | (1u << b);
                    if (pair_mask & rest) continue;
                    Int sign = Int(detail::merge_sign(pair_mask, rest));
                    out[pair_mask | rest] += -c * outer_sign * sign;
                }
            ++pos_in_mask;
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    struct CupResult {
        Int coeff = 0;   // 0 means the product vanishes in cohomology
        int w_index = -1;
    };

    // [omega_w] . [omega_w'], reduced in cohomology against the distinguished
    // basis.  Nonzero results satisfy weight and length additivity.
    CupResult cup(int wi, int wj) const {
        unsigned a = omega_mask[wi], b = omega_mask[wj];
        if (a & b) return {};
        unsigned m = a | b;
        Int sign = Int(detail::merge_sign(a, b));
        Weight wt = mask_weight(m);
        long deg = __builtin_popcount(m);
        // candidate class
        int candidate = -1;
        for (int k = 0; k < group.size(); ++k)
            if (group.elements[k].length() == deg && omega_weight[k] == wt) candidate = k;

        // collect chain bases at (deg-1, wt) and (deg, wt)
        std::vector<unsigned> lower, here;
        for (unsigned mask = 0; mask < (1u << npos()); ++mask) {
            int pc = __builtin_popcount(mask);
            if (pc == deg - 1 && mask_weight(mask) == wt) lower.push_back(mask);
            if (pc == deg && mask_weight(mask) == wt) here.push_back(mask);
        }
        std::map<unsigned, std::size_t> row;
        for (std::size_t i = 0; i < here.size(); ++i) row[here[i]] = i;
        // columns: d(lower) plus optionally omega_candidate
        RatMatrix cols(here.size(), RatVec(lower.size() + (candidate >= 0 ? 1 : 0), Rat(0)));
        for (std::size_t j = 0; j < lower.size(); ++j)
            for (const auto& [tm, c] : d_monomial(lower[j])) cols[row.at(tm)][j] = Rat(c);
        if (candidate >= 0) cols[row.at(omega_mask[candidate])][lower.size()] = 1;
        RatVec rhs(here.size(), Rat(0));
        rhs[row.at(m)] = Rat(sign);
        auto sol = solve(cols, rhs);
        if (!sol)
            throw std::logic_error("cup product cocycle not reducible against the Kostant basis");
        if (candidate < 0) return {};
        Int coeff = to_int((*sol)[lower.size()]);
        if (coeff == 0) return {};
        return {coeff, candidate};
    }
};

// H^*(n, C) by exact rank computation, with the Kostant classes
// omega_w = det(n / (n cap n_w))^* checked as the distinguished basis.
inline TrivialCohomology cohomology_trivial(const RootDatum& datum, const WeylGroup& group) {
    TrivialCohomology out{datum, group, detail::build_nil_structure(datum), {}, {}, {}};
    int n = out.npos();

    std::map<Weight, std::map<long, std::vector<unsigned>>> blocks;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        blocks[out.mask_weight(mask)][__builtin_popcount(mask)].push_back(mask);

    for (const auto& [wt, by_deg] : blocks) {
        std::map<long, std::size_t> rank_d;  // rank of d: deg -> deg+1 at this weight
        for (const auto& [deg, masks] : by_deg) {
            auto next_it = by_deg.find(deg + 1);
            std::vector<unsigned> target =
                next_it == by_deg.end() ? std::vector<unsigned>{} : next_it->second;
            std::map<unsigned, std::size_t> row;
            for (std::size_t i = 0; i < target.size(); ++i) row[target[i]] = i;
            RatMatrix m(target.size(), RatVec(masks.size(), Rat(0)));
            for (std::size_t j = 0; j < masks.size(); ++j)
                for (const auto& [tm, c] : out.d_monomial(masks[j])) {
                    auto it = row.find(tm);
                    if (it == row.end())
                        throw std::logic_error("differential leaves the weight block");
                    m[it->second][j] = Rat(c);
                }
            rank_d[deg] = rank(std::move(m));
        }
        for (const auto& [deg, masks] : by_deg) {
            Int h = Int(masks.size()) - Int(rank_d[deg]) -
                    Int(deg > 0 && rank_d.count(deg - 1) ? rank_d[deg - 1] : 0);
            if (h < 0) throw std::logic_error("negative cohomology dimension");
            if (h > 0) out.table.dims[{deg, wt}] = h;
        }
    }

    // Kostant's theorem: the table must be exactly {(l(w), w.0) : w in W}.
    std::map<std::pair<long, Weight>, Int> expected;
    for (const auto& w : group.elements)
        expected[{w.length(), dot_finite(datum, w, Weight::zero(datum.rank))}] += 1;
    if (expected != out.table.dims)
        throw std::logic_error("H*(n,C) does not match Kostant's theorem for " + datum.name);

    // Distinguished cocycles.
    for (int k = 0; k < group.size(); ++k) {
        const auto& w = group.elements[k];
        WeylElement winv = group.inverse(w);
        unsigned mask = 0;
        for (int i = 0; i < n; ++i) {
            Weight img = winv.apply(datum.positive_roots[i]);
            if (datum.height(img) < 0) mask |= 1u << i;
        }
        if (__builtin_popcount(mask) != w.length())
            throw std::logic_error("inversion-set size does not match the length");
        if (out.mask_weight(mask) != dot_finite(datum, w, Weight::zero(datum.rank)))
            throw std::logic_error("omega_w has the wrong weight");
        if (!out.d_monomial(mask).empty()) throw std::logic_error("omega_w is not a cocycle");
        out.omega_mask.push_back(mask);
        out.omega_weight.push_back(out.mask_weight(mask));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Semi-induced coefficient modules.

// PBW straightening in U(n) with respect to a fixed generator order.
struct PbwAlgebra {
    NilStructure nil;
    std::vector<int> order;     // generator sequence: order[pos] = root index
    std::vector<int> position;  // inverse permutation
    using Monomial = std::vector<int>;  // exponents by position
    std::map<std::pair<int, Monomial>, std::map<Monomial, Int>> memo;

    PbwAlgebra() = default;
    PbwAlgebra(NilStructure s, std::vector<int> ord) : nil(std::move(s)), order(std::move(ord)) {
        position.assign(nil.npos, -1);
        for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<int>(p);
    }

    // e_{order[p]} * e^m in normal form.
    const std::map<Monomial, Int>& mul_gen(int p, const Monomial& m) {
        auto key = std::make_pair(p, m);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::map<Monomial, Int> out;
        int q = -1;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) {
                q = static_cast<int>(i);
                break;
            }
        if (q == -1 || p <= q) {
            Monomial r = m;
            r[p] += 1;
            out[r] = 1;
        } else {
            Monomial rest = m;
            rest[q] -= 1;
            // e_p e_q rest = e_q (e_p rest) + [e_p, e_q] rest
            for (const auto& [mono, c] : mul_gen(p, rest))
                for (const auto& [mono2, c2] : mul_gen(q, mono)) {
                    out[mono2] += c * c2;
                    if (out[mono2] == 0) out.erase(mono2);
                }
            auto [target, coeff] = nil.at(order[p], order[q]);
            if (coeff != 0) {
                for (const auto& [mono3, c3] : mul_gen(position[target], rest)) {
                    out[mono3] += coeff * c3;
                    if (out[mono3] == 0) out.erase(mono3);
                }
            }
        }
        return memo.emplace(key, std::move(out)).first->second;
    }

    // e^a * e^b in normal form.
    std::map<Monomial, Int> mul(const Monomial& a, const Monomial& b) {
        std::map<Monomial, Int> acc{{b, Int(1)}};
        for (int p = static_cast<int>(a.size()) - 1; p >= 0; --p)
            for (int rep = 0; rep < a[p]; ++rep) {
                std::map<Monomial, Int> next;
                for (const auto& [mono, c] : acc)
                    for (const auto& [mono2, c2] : mul_gen(p, mono)) {
                        next[mono2] += c * c2;
                        if (next[mono2] == 0) next.erase(mono2);
                    }
                acc = std::move(next);
            }
        return acc;
    }
};

// Weight-truncated model of Ind_{n cap n_w}^n Coind_0^{n cap n_w} C_tau.
// Basis vectors are pairs (b, a): an induction monomial over the roots moved
// out of n_w by w^{-1} and a dual (coinduction) monomial over the roots kept.
// The vector e^b (x) f_a has weight tau + sum b_i phi_i - sum a_j psi_j and
// depth ht(sum b_i phi_i) + ht(sum a_j psi_j); the model keeps depth <= D.
struct SemiInducedModule {
    RootDatum datum;
    WeylElement w;
    Weight tau;
    long depth = 0;

    NilStructure nil;
    std::vector<int> phi;  // root indices with w^{-1} alpha < 0 (induction side)
    std::vector<int> psi;  // root indices with w^{-1} alpha > 0 (coinduction side)
    PbwAlgebra pbw;        // adapted order: phi first, then psi

    std::vector<std::vector<int>> basis;  // adapted exponent monomials
    std::map<std::vector<int>, int> index_of;
    std::vector<Weight> weight_of;
    // action[g][i]: sparse result of e_g . basis[i], g a root index
    std::vector<std::vector<std::vector<std::pair<int, Int>>>> action;

    int dim() const { return static_cast<int>(basis.size()); }

    long monomial_depth(const std::vector<int>& m) const {
        long d = 0;
        for (std::size_t p = 0; p < m.size(); ++p) {
            long ht = 0;
            for (const auto& c : datum.positive_root_coords[pbw.order[p]])
                ht += static_cast<long>(c);
            d += m[p] * ht;
        }
        return d;
    }

    Weight monomial_weight(const std::vector<int>& m) const {
        Weight wt = tau;
        for (std::size_t p = 0; p < m.size(); ++p) {
            int root = pbw.order[p];
            bool induction = position_is_phi(static_cast<int>(p));
            Rat sgn = induction ? 1 : -1;
            wt = wt + (sgn * Rat(m[p])) * datum.positive_roots[root];
        }
        return wt;
    }

    bool position_is_phi(int p) const { return p < static_cast<int>(phi.size()); }
};

namespace detail {

// Right multiplication by a single psi-side generator on a dual monomial:
// e_psi . f_a = sum_c [coefficient of e^a in e^c e_psi] f_c.
// Implemented by scanning candidate c of the correct weight.
inline std::vector<std::pair<std::vector<int>, Int>> coinduction_action(
    SemiInducedModule& mod, int psi_pos, const std::vector<int>& a_part) {
    // candidates c: a_part with the exponent sum reduced so that
    // wt(c) = wt(a) - psi.  Enumerate c <= componentwise bound from weight.
    // Work only over psi positions.
    std::vector<std::pair<std::vector<int>, Int>> out;
    std::size_t start = mod.phi.size(), stop = a_part.size();
    // target exponent-weight: sum over psi positions of c_p * root_p = A - psi
    std::vector<long> target(mod.datum.rank, 0);
    for (std::size_t p = start; p < stop; ++p)
        for (int r = 0; r < mod.datum.rank; ++r)
            target[r] +=
                a_part[p] * static_cast<long>(mod.datum.positive_root_coords[mod.pbw.order[p]][r]);
    {
        int root = mod.pbw.order[psi_pos];
        for (int r = 0; r < mod.datum.rank; ++r)
            target[r] -= static_cast<long>(mod.datum.positive_root_coords[root][r]);
    }
    for (long t : target)
        if (t < 0) return out;

    std::vector<int> c(a_part.size(), 0);
    auto rec = [&](auto&& self, std::size_t p, std::vector<long> remaining) -> void {
        if (p == stop) {
            for (long t : remaining)
                if (t != 0) return;
            // coefficient of e^a in e^c e_psi
            std::vector<int> unit(a_part.size(), 0);
            unit[psi_pos] = 1;
            auto prod = mod.pbw.mul(c, unit);
            auto it = prod.find(a_part);
            if (it != prod.end() && it->second != 0) out.emplace_back(c, it->second);
            return;
        }
        const auto& rc = mod.datum.positive_root_coords[mod.pbw.order[p]];
        long bound = -1;
        for (int r = 0; r < mod.datum.rank; ++r) {
            if (rc[r] == 0) continue;
            long b = remaining[r] / static_cast<long>(rc[r]);
            bound = bound < 0 ? b : std::min(bound, b);
        }
        for (long v = 0; v <= bound; ++v) {
            c[p] = static_cast<int>(v);
            std::vector<long> rem = remaining;
            for (int r = 0; r < mod.datum.rank; ++r) rem[r] -= v * static_cast<long>(rc[r]);
            bool ok = true;
            for (long t : rem)
                if (t < 0) ok = false;
            if (ok) self(self, p + 1, rem);
        }
        c[p] = 0;
    };
    rec(rec, start, target);
    return out;
}

}  // namespace detail

// Builds the truncated semi-induced module for w at base weight tau.
// tau is the fiber weight of the delta module (w(-chi) for delta at wB).
inline SemiInducedModule build_semi_induced(const RootDatum& datum, const WeylGroup& group,
                                            const WeylElement& w, const Weight& tau, long depth) {
    if (depth < 1) throw std::domain_error("build_semi_induced: depth must be >= 1");
    NilStructure nil = detail::build_nil_structure(datum);
    WeylElement winv = group.inverse(w);
    std::vector<int> phi, psi;
    for (int i = 0; i < datum.num_positive_roots(); ++i) {
        if (datum.height(winv.apply(datum.positive_roots[i])) < 0)
            phi.push_back(i);
        else
            psi.push_back(i);
    }
    std::vector<int> order = phi;
    order.insert(order.end(), psi.begin(), psi.end());
    SemiInducedModule mod;
    mod.datum = datum;
    mod.w = w;
    mod.tau = tau;
    mod.depth = depth;
    mod.nil = nil;
    mod.phi = phi;
    mod.psi = psi;
    mod.pbw = PbwAlgebra(nil, order);

    // enumerate basis monomials of depth <= D
    std::vector<long> gen_height(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) {
        long h = 0;
        for (const auto& c : datum.positive_root_coords[order[p]]) h += static_cast<long>(c);
        gen_height[p] = h;
    }
    std::vector<int> cur(order.size(), 0);
    auto rec = [&](auto&& self, std::size_t p, long remaining) -> void {
        if (p == order.size()) {
            mod.index_of[cur] = static_cast<int>(mod.basis.size());
            mod.basis.push_back(cur);
            return;
        }
        for (long v = 0; v * gen_height[p] <= remaining; ++v) {
            cur[p] = static_cast<int>(v);
            self(self, p + 1, remaining - v * gen_height[p]);
        }
        cur[p] = 0;
    };
    rec(rec, 0, depth);
    for (const auto& m : mod.basis) mod.weight_of.push_back(mod.monomial_weight(m));

    // action of every root generator
    mod.action.assign(datum.num_positive_roots(),
                      std::vector<std::vector<std::pair<int, Int>>>(mod.dim()));
    for (int g = 0; g < datum.num_positive_roots(); ++g) {
        int gp = mod.pbw.position[g];
        for (int i = 0; i < mod.dim(); ++i) {
            // split e_g . e^b (x) f_a: first straighten e_g e^b in U(n)
            std::vector<int> b_part(order.size(), 0), a_part(order.size(), 0);
            for (std::size_t p = 0; p < order.size(); ++p)
                (p < phi.size() ? b_part[p] : a_part[p]) = mod.basis[i][p];
            std::map<std::vector<int>, Int> acc;
            for (const auto& [mono, c] : mod.pbw.mul_gen(gp, b_part)) {
                // mono = (b', a'): the psi tail acts on f_{a_part}
                std::vector<int> bp(order.size(), 0), ap(order.size(), 0);
                for (std::size_t p = 0; p < order.size(); ++p)
                    (p < phi.size() ? bp[p] : ap[p]) = mono[p];
                // apply the psi part of mono, highest position first
                std::vector<std::pair<std::vector<int>, Int>> states{{a_part, c}};
                for (int p = static_cast<int>(order.size()) - 1;
                     p >= static_cast<int>(phi.size()); --p) {
                    for (int rep = 0; rep < ap[p]; ++rep) {
                        std::vector<std::pair<std::vector<int>, Int>> next;
                        for (const auto& [av, cc] : states)
                            for (const auto& [cv, c2] : detail::coinduction_action(mod, p, av))
                                next.emplace_back(cv, cc * c2);
                        states = std::move(next);
                    }
                }
                for (const auto& [av, cc] : states) {
                    std::vector<int> full = bp;
                    for (std::size_t p = phi.size(); p < order.size(); ++p) full[p] = av[p];
                    acc[full] += cc;
                }
            }
            for (const auto& [mono, c] : acc) {
                if (c == 0) continue;
                auto it = mod.index_of.find(mono);
                if (it == mod.index_of.end()) continue;  // beyond the depth cutoff
                mod.action[g][i].emplace_back(it->second, c);
            }
        }
    }
    return mod;
}

// ---------------------------------------------------------------------------
// Cohomology and homology with semi-induced coefficients.

namespace detail {

// Maximum depth over all untruncated basis monomials with the given weight
// shift delta = weight - tau; -1 when the weight space is empty.
inline long max_depth_at_shift(const SemiInducedModule& mod, const WeylGroup& group,
                               const Weight& delta) {
    // transform by w^{-1}: every generator image is a negative root, so the
    // transformed target has nonnegative root coordinates and bounds the sum.
    WeylElement winv = group.inverse(mod.w);
    RatVec t = mod.datum.root_coords(winv.apply(delta));
    std::vector<long> target(mod.datum.rank);
    for (int r = 0; r < mod.datum.rank; ++r) {
        Rat v = -t[r];
        if (!is_integer(v)) return -1;
        Int vi = num(v);
        if (vi < 0) return -1;
        target[r] = static_cast<long>(vi);
    }
    std::vector<std::vector<long>> images;  // |w^{-1} root| coords per generator position
    std::vector<long> heights;              // original-root heights per position
    for (std::size_t p = 0; p < mod.pbw.order.size(); ++p) {
        int root = mod.pbw.order[p];
        RatVec img = mod.datum.root_coords(winv.apply(mod.datum.positive_roots[root]));
        std::vector<long> a(mod.datum.rank);
        for (int r = 0; r < mod.datum.rank; ++r) {
            Int v = to_int(img[r]);
            a[r] = static_cast<long>(v < 0 ? -v : v);
        }
        images.push_back(std::move(a));
        long h = 0;
        for (const auto& c : mod.datum.positive_root_coords[root]) h += static_cast<long>(c);
        heights.push_back(h);
    }
    long best = -1;
    std::function<void(std::size_t, std::vector<long>, long)> rec =
        [&](std::size_t p, std::vector<long> remv, long depth_acc) {
            if (p == images.size()) {
                for (long t2 : remv)
                    if (t2 != 0) return;
                best = std::max(best, depth_acc);
                return;
            }
            long bound = -1;
            for (int r = 0; r < mod.datum.rank; ++r)
                if (images[p][r] != 0) {
                    long b = remv[r] / images[p][r];
                    bound = bound < 0 ? b : std::min(bound, b);
                }
            if (bound < 0) throw std::logic_error("generator image is zero");
            for (long v = 0; v <= bound; ++v) {
                std::vector<long> nxt = remv;
                bool ok = true;
                for (int r = 0; r < mod.datum.rank; ++r) {
                    nxt[r] -= v * images[p][r];
                    if (nxt[r] < 0) ok = false;
                }
                if (ok) rec(p + 1, std::move(nxt), depth_acc + v * heights[p]);
            }
        };
    rec(0, target, 0);
    return best;
}

}  // namespace detail

enum class CoefficientComplexKind { cohomology, homology };

// Computes H^*(n, M) (or H_*(n, M), placed in negative degrees) for a
// truncated semi-induced module, per weight, with an exact trust certificate:
// a weight is trusted iff every chain space at that weight is fully
// represented inside the truncation.
inline CohomologyTable cohomology_with_coefficients(SemiInducedModule& mod, const WeylGroup& group,
                                                    CoefficientComplexKind kind) {
    const RootDatum& datum = mod.datum;
    int n = datum.num_positive_roots();
    bool homological = kind == CoefficientComplexKind::homology;

    auto mask_weight = [&](unsigned mask) {
        Weight w = Weight::zero(datum.rank);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) w = w + datum.positive_roots[i];
        return w;
    };

    // chain basis: (mask, module index); weight = wt(v) -+ sum_mask alpha
    struct Chain {
        unsigned mask;
        int vec;
    };
    std::map<Weight, std::map<long, std::vector<Chain>>> blocks;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Weight mw = mask_weight(mask);
        long deg = __builtin_popcount(mask);
        long chain_deg = homological ? -deg : deg;
        for (int i = 0; i < mod.dim(); ++i) {
            Weight wt = homological ? mod.weight_of[i] + mw : mod.weight_of[i] - mw;
            blocks[wt][chain_deg].push_back(Chain{mask, i});
        }
    }

    // trust certificate per weight
    CohomologyTable table;
    std::map<Weight, bool> trusted_cache;
    auto weight_trusted = [&](const Weight& wt) {
        auto it = trusted_cache.find(wt);
        if (it != trusted_cache.end()) return it->second;
        bool ok = true;
        for (unsigned mask = 0; mask < (1u << n) && ok; ++mask) {
            Weight needed =
                homological ? wt - mask_weight(mask) : wt + mask_weight(mask);
            long md = detail::max_depth_at_shift(mod, group, needed - mod.tau);
            if (md > mod.depth) ok = false;
        }
        trusted_cache[wt] = ok;
        return ok;
    };

    // differential of a single chain
    auto differential = [&](const Chain& c) {
        std::vector<std::pair<Chain, Int>> out;
        if (!homological) {
            // d(c_S (x) v) = sum_g (c^g ^ c_S) (x) e_g v + (d_K c_S) (x) v
            for (int g = 0; g < n; ++g) {
                if (c.mask >> g & 1u) continue;
                Int sign = Int(detail::merge_sign(1u << g, c.mask));
                for (const auto& [tv, cc] : mod.action[g][c.vec])
                    out.push_back({Chain{c.mask | (1u << g), tv}, sign * cc});
            }
            // d_K part: replace c^t by -f^t_{ab} c^a c^b
            int pos = 0;
            for (int t = 0; t < n; ++t) {
                if (!(c.mask >> t & 1u)) continue;
                Int outer = (pos % 2 == 0) ? 1 : -1;
                unsigned rest = c.mask & ~(1u << t);
                for (int a = 0; a < n; ++a)
                    for (int b = a + 1; b < n; ++b) {
                        auto [tt, cc] = mod.nil.at(a, b);
                        if (cc == 0 || tt != t) continue;
                        unsigned pm = (1u << a) | (1u << b);
                        if (pm & rest) continue;
                        Int s = Int(detail::merge_sign(pm, rest));
                        out.push_back({Chain{pm | rest, c.vec}, -cc * outer * s});
                    }
                ++pos;
            }
        } else {
            // del(x_S (x) v) = sum_t (-1)^{t+1} x_{S-t} (x) e_t v
            //                + sum_{s<t} (-1)^{s+t} [x_s,x_t] ^ x_{S-s-t} (x) v
            std::vector<int> elems;
            for (int i = 0; i < n; ++i)
                if (c.mask >> i & 1u) elems.push_back(i);
            for (std::size_t t = 0; t < elems.size(); ++t) {
                Int sign = (t % 2 == 0) ? 1 : -1;  // (-1)^{t+1} with 1-based t
                unsigned rest = c.mask & ~(1u << elems[t]);
                for (const auto& [tv, cc] : mod.action[elems[t]][c.vec])
                    out.push_back({Chain{rest, tv}, sign * cc});
            }
            for (std::size_t s = 0; s < elems.size(); ++s)
                for (std::size_t t = s + 1; t < elems.size(); ++t) {
                    auto [tt, cc] = mod.nil.at(elems[s], elems[t]);
                    if (cc == 0) continue;
                    unsigned rest = c.mask & ~(1u << elems[s]) & ~(1u << elems[t]);
                    if (rest >> tt & 1u) continue;
                    Int sign = ((s + t + 1) % 2 == 0) ? 1 : -1;  // (-1)^{s+t} 1-based
                    Int ms = Int(detail::merge_sign(1u << tt, rest));
                    out.push_back({Chain{rest | (1u << tt), c.vec}, sign * ms * cc});
                }
        }
        return out;
    };

    for (const auto& [wt, by_deg] : blocks) {
        if (!weight_trusted(wt)) {
            table.untrusted.insert(wt);
            continue;
        }
        // the differential raises the stored degree by one in both variants:
        // d: C^k -> C^{k+1} and del: C_{-k} -> C_{-k+1}
        const long step = 1;
        std::map<long, std::map<std::pair<unsigned, int>, std::size_t>> rows;
        for (const auto& [deg, chains] : by_deg) {
            auto& r = rows[deg];
            for (std::size_t i = 0; i < chains.size(); ++i) r[{chains[i].mask, chains[i].vec}] = i;
        }
        std::map<long, RatMatrix> d_of;
        for (const auto& [deg, chains] : by_deg) {
            auto tgt = by_deg.find(deg + step);
            std::size_t tdim = tgt == by_deg.end() ? 0 : tgt->second.size();
            RatMatrix m(tdim, RatVec(chains.size(), Rat(0)));
            for (std::size_t j = 0; j < chains.size(); ++j)
                for (const auto& [tc, cc] : differential(chains[j])) {
                    auto rit = rows.find(deg + step);
                    if (rit == rows.end()) {
                        if (cc != 0) throw std::logic_error("differential leaves trusted block");
                        continue;
                    }
                    auto pit = rit->second.find({tc.mask, tc.vec});
                    if (pit == rit->second.end())
                        throw std::logic_error("differential leaves trusted block");
                    m[pit->second][j] += Rat(cc);
                }
            d_of[deg] = std::move(m);
        }
        // d.d = 0 on every trusted block
        for (const auto& [deg, m1] : d_of) {
            auto m2 = d_of.find(deg + step);
            if (m2 == d_of.end() || m2->second.empty() || m1.empty()) continue;
            RatMatrix comp = mat_mul(m2->second, m1);
            for (const auto& rowv : comp)
                for (const auto& v : rowv)
                    if (v != 0) throw std::logic_error("d.d != 0 on a trusted block");
        }
        std::map<long, std::size_t> rank_d;
        for (const auto& [deg, m] : d_of) rank_d[deg] = rank(m);
        for (const auto& [deg, chains] : by_deg) {
            std::size_t incoming = rank_d.count(deg - step) ? rank_d[deg - step] : 0;
            Int h = Int(chains.size()) - Int(rank_d[deg]) - Int(incoming);
            if (h < 0) throw std::logic_error("negative coefficient cohomology dimension");
            if (h > 0) table.dims[{deg, wt}] = h;
        }
    }
    return table;
}

inline CohomologyTable homology_with_coefficients(SemiInducedModule& mod, const WeylGroup& group) {
    return cohomology_with_coefficients(mod, group, CoefficientComplexKind::homology);
}

}  // namespace chevalley
