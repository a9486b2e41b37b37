// Twisted commutative algebras: the lattice highest weight algebra with its
// sign cocycle, the cohomology algebra H*(n,C) as a degenerate example, the
// twisted tensor product, and the sign bookkeeping used by the main
// regrouping identity.
//
// A TwistedAlgebra is stored on a finite window of lattice points.  Products
// landing outside the window keep their coefficient but carry no target
// index; invariant checks quantify over in-window data only.
#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevalley/nilcoh.hpp"

namespace chevalley {

// r(lambda, chi) on an ordered lattice basis, extended bilinearly:
// r(b_i, b_j) = p(b_i) p(b_j) + (b_i, b_j) for i > j, else 0.
struct SignCocycle {
    int rank = 0;
    std::vector<int> basis_parity;         // p(b_i)
    std::vector<std::vector<Int>> basis_pairing;  // (b_i, b_j), integral

    Int r(const IntVec& x, const IntVec& y) const {
        Int total = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < i; ++j)  // only i > j contributes
                total += x[i] * y[j] * (Int(basis_parity[i] * basis_parity[j]) + basis_pairing[i][j]);
        return total;
    }
};

struct TwistedAlgebra {
    std::string name;
    int lattice_rank = 0;
    RatMatrix gram;                     // symmetric pairing on the lattice basis
    std::vector<IntVec> points;         // window of lattice points, sorted
    std::map<IntVec, int> index_of;
    std::vector<int> parity_of;         // p(lambda) in {0,1}
    std::vector<std::vector<std::string>> component_basis;  // explicit bases (1-dim here)
    // mult[i][j]: coefficient of the product of the basis vectors of
    // components i and j; target index, or -1 when the sum leaves the window.
    struct Entry {
        Int coeff;
        int target = -1;
    };
    std::vector<std::vector<Entry>> mult;
    int unit_index = -1;

    int size() const { return static_cast<int>(points.size()); }

    Rat pairing(int i, int j) const {
        Rat v = 0;
        for (int a = 0; a < lattice_rank; ++a)
            for (int b = 0; b < lattice_rank; ++b)
                v += Rat(points[i][a]) * gram[a][b] * Rat(points[j][b]);
        return v;
    }

    int point_index(const IntVec& p) const {
        auto it = index_of.find(p);
        return it == index_of.end() ? -1 : it->second;
    }
};

// Throws with the offending pair or triple when a section-4.2 invariant
// fails; quantifies over the stored window.
inline void verify_twisted_algebra(const TwistedAlgebra& a) {
    auto fail = [&](const std::string& what, int i, int j, int k = -1) {
        std::ostringstream os;
        os << a.name << ": " << what << " fails at (";
        for (const auto& c : a.points[i]) os << c << " ";
        os << ") (";
        for (const auto& c : a.points[j]) os << c << " ";
        os << ")";
        if (k >= 0) {
            os << " (";
            for (const auto& c : a.points[k]) os << c << " ";
            os << ")";
        }
        throw std::invalid_argument(os.str());
    };

    if (a.unit_index < 0) throw std::invalid_argument(a.name + ": no unit component");
    for (int i = 0; i < a.size(); ++i) {
        const auto& left = a.mult[a.unit_index][i];
        const auto& right = a.mult[i][a.unit_index];
        if (left.coeff != 1 || left.target != i || right.coeff != 1 || right.target != i)
            fail("unit law", a.unit_index, i);
    }

    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            const auto& e = a.mult[i][j];
            if (e.coeff == 0) {
                if (a.mult[j][i].coeff != 0) fail("twisted commutativity (vanishing)", i, j);
                continue;
            }
            Rat p = a.pairing(i, j);
            if (!is_integer(p)) fail("essential integrality", i, j);
            Int exponent = Int(a.parity_of[i] * a.parity_of[j]) + to_int(p);
            Int expect = (parity(exponent) == 0 ? e.coeff : -e.coeff);
            if (a.mult[j][i].coeff != expect) fail("twisted commutativity", i, j);
            if (i == j && parity(to_int(p)) != a.parity_of[i]) fail("parity compatibility", i, i);
        }

    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            const auto& ij = a.mult[i][j];
            if (ij.target < 0) continue;
            for (int k = 0; k < a.size(); ++k) {
                const auto& jk = a.mult[j][k];
                if (jk.target < 0) continue;
                const auto& l = a.mult[ij.target][k];
                const auto& r = a.mult[i][jk.target];
                Int lc = ij.coeff * l.coeff, rc = jk.coeff * r.coeff;
                if (lc != rc) fail("associativity", i, j, k);
                if (lc != 0 && l.target != r.target) fail("associativity (target)", i, j, k);
            }
        }
}

// Highest weight algebra of the lattice Heisenberg vertex algebra: the
// group algebra of the coroot lattice with multiplication twisted by
// (-1)^{r(lambda,chi)}.  The pairing is (.,.)_{level}; the basis for the
// sign cocycle is the simple coroots ordered by index.
inline TwistedAlgebra lattice_hwa(const RootDatum& datum, const Rat& level, long window_radius) {
    TwistedAlgebra a;
    a.name = "lattice_hwa(" + datum.name + ", level " + to_string(level) + ")";
    a.lattice_rank = datum.rank;
    a.gram.assign(datum.rank, RatVec(datum.rank, Rat(0)));
    SignCocycle r;
    r.rank = datum.rank;
    r.basis_pairing.assign(datum.rank, IntVec(datum.rank, Int(0)));
    for (int i = 0; i < datum.rank; ++i)
        for (int j = 0; j < datum.rank; ++j) {
            Rat v = level * datum.coweight_form[i][j];
            if (!is_integer(v))
                throw std::domain_error(a.name + ": level pairing is not integral on the lattice");
            a.gram[i][j] = v;
            r.basis_pairing[i][j] = to_int(v);
        }
    for (int i = 0; i < datum.rank; ++i) r.basis_parity.push_back(parity(r.basis_pairing[i][i]));

    std::vector<IntVec> pts;
    IntVec cur(datum.rank, Int(0));
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == datum.rank) {
            pts.push_back(cur);
            return;
        }
        for (long v = -window_radius; v <= window_radius; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    std::sort(pts.begin(), pts.end());
    a.points = pts;
    for (int i = 0; i < a.size(); ++i) a.index_of[a.points[i]] = i;
    a.unit_index = a.index_of.at(IntVec(datum.rank, Int(0)));
    for (int i = 0; i < a.size(); ++i) {
        a.parity_of.push_back(parity(to_int(a.pairing(i, i))));
        a.component_basis.push_back({"x^" + std::to_string(i)});
    }
    a.mult.assign(a.size(), std::vector<TwistedAlgebra::Entry>(a.size()));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            IntVec sum(datum.rank);
            for (int t = 0; t < datum.rank; ++t) sum[t] = a.points[i][t] + a.points[j][t];
            Int sign = r.r(a.points[i], a.points[j]);
            a.mult[i][j] = {parity(sign) == 0 ? Int(1) : Int(-1), a.point_index(sum)};
        }
    return a;
}

// H*(n, C) as a twisted commutative algebra: components C.omega_w at the
// lattice points w.0, pairing (.,.)_0 / level, parity the cohomological
// degree, product the cup product.
inline TwistedAlgebra cohomology_hwa(const RootDatum& datum, const Rat& level,
                                     const TrivialCohomology& coh) {
    if (level == 0) throw std::domain_error("cohomology_hwa: level must be nonzero");
    TwistedAlgebra a;
    a.name = "cohomology_hwa(" + datum.name + ", level " + to_string(level) + ")";
    a.lattice_rank = datum.rank;
    a.gram.assign(datum.rank, RatVec(datum.rank, Rat(0)));
    for (int i = 0; i < datum.rank; ++i)
        for (int j = 0; j < datum.rank; ++j) a.gram[i][j] = datum.weight_form[i][j] / level;

    int n = coh.group.size();
    std::vector<std::pair<IntVec, int>> pts;  // (coords of w.0, w index)
    for (int k = 0; k < n; ++k) {
        IntVec coords(datum.rank);
        for (int t = 0; t < datum.rank; ++t) coords[t] = to_int(coh.omega_weight[k].coords[t]);
        pts.emplace_back(coords, k);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<int> windex;  // point order -> Weyl index
    for (auto& [coords, k] : pts) {
        a.index_of[coords] = a.size();
        a.points.push_back(coords);
        windex.push_back(k);
        a.parity_of.push_back(coh.group.elements[k].length() % 2);
        std::string word = "omega_";
        for (int s : coh.group.elements[k].word) word += std::to_string(s);
        a.component_basis.push_back({word});
    }
    a.unit_index = a.index_of.at(IntVec(datum.rank, Int(0)));
    a.mult.assign(a.size(), std::vector<TwistedAlgebra::Entry>(a.size()));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            auto res = coh.cup(windex[i], windex[j]);
            if (res.coeff == 0) {
                a.mult[i][j] = {Int(0), -1};
            } else {
                IntVec coords(datum.rank);
                for (int t = 0; t < datum.rank; ++t)
                    coords[t] = to_int(coh.omega_weight[res.w_index].coords[t]);
                a.mult[i][j] = {res.coeff, a.index_of.at(coords)};
            }
        }
    return a;
}

// Twisted tensor product A (x)~ B.  cross[i][j] is the pairing between the
// i-th basis vector of Gamma_A and the j-th of Gamma_B; the product rule is
// (a (x) b)(a' (x) b') = (-1)^{p(lambda)p(chi) + (lambda,chi)} aa' (x) bb'
// for b in B^lambda, a' in A^chi.
inline TwistedAlgebra twisted_tensor(const TwistedAlgebra& a, const TwistedAlgebra& b,
                                     const RatMatrix& cross) {
    TwistedAlgebra t;
    t.name = a.name + " (x)~ " + b.name;
    t.lattice_rank = a.lattice_rank + b.lattice_rank;
    t.gram.assign(t.lattice_rank, RatVec(t.lattice_rank, Rat(0)));
    for (int i = 0; i < a.lattice_rank; ++i)
        for (int j = 0; j < a.lattice_rank; ++j) t.gram[i][j] = a.gram[i][j];
    for (int i = 0; i < b.lattice_rank; ++i)
        for (int j = 0; j < b.lattice_rank; ++j)
            t.gram[a.lattice_rank + i][a.lattice_rank + j] = b.gram[i][j];
    for (int i = 0; i < a.lattice_rank; ++i)
        for (int j = 0; j < b.lattice_rank; ++j) {
            t.gram[i][a.lattice_rank + j] = cross[i][j];
            t.gram[a.lattice_rank + j][i] = cross[i][j];
        }

    auto cross_pairing = [&](const IntVec& bpt, const IntVec& apt) {
        Rat v = 0;
        for (int i = 0; i < a.lattice_rank; ++i)
            for (int j = 0; j < b.lattice_rank; ++j) v += Rat(apt[i]) * cross[i][j] * Rat(bpt[j]);
        return v;
    };

    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            IntVec coords = a.points[i];
            coords.insert(coords.end(), b.points[j].begin(), b.points[j].end());
            t.index_of[coords] = t.size();
            t.points.push_back(coords);
            t.parity_of.push_back((a.parity_of[i] + b.parity_of[j]) % 2);
            t.component_basis.push_back(
                {a.component_basis[i][0] + " (x) " + b.component_basis[j][0]});
        }
    {
        IntVec zero(t.lattice_rank, Int(0));
        t.unit_index = t.index_of.at(zero);
    }
    t.mult.assign(t.size(), std::vector<TwistedAlgebra::Entry>(t.size()));
    for (int i1 = 0; i1 < a.size(); ++i1)
        for (int j1 = 0; j1 < b.size(); ++j1)
            for (int i2 = 0; i2 < a.size(); ++i2)
                for (int j2 = 0; j2 < b.size(); ++j2) {
                    int src = i1 * b.size() + j1, dst = i2 * b.size() + j2;
                    const auto& ea = a.mult[i1][i2];
                    const auto& eb = b.mult[j1][j2];
                    Int coeff = ea.coeff * eb.coeff;
                    if (coeff == 0) {
                        t.mult[src][dst] = {Int(0), -1};
                        continue;
                    }
                    Rat cp = cross_pairing(b.points[j1], a.points[i2]);
                    if (!is_integer(cp)) {
                        std::ostringstream os;
                        os << t.name << ": cross pairing not integral on a nonzero product at ("
                           << i1 << "," << j1 << ") x (" << i2 << "," << j2 << ")";
                        throw std::invalid_argument(os.str());
                    }
                    Int expnt = Int(b.parity_of[j1] * a.parity_of[i2]) + to_int(cp);
                    if (parity(expnt) == 1) coeff = -coeff;
                    int target = -1;
                    if (ea.target >= 0 && eb.target >= 0) target = ea.target * b.size() + eb.target;
                    t.mult[src][dst] = {coeff, target};
                }
    verify_twisted_algebra(t);
    return t;
}

// The sign (-1)^{l(w)(chi,chi) + w.0(chi)} from the regrouping computation;
// chi a coweight, the form taken at the given level.
inline Int maintheorem_sign(const RootDatum& datum, const WeylElement& w, const Coweight& chi,
                            const Rat& level) {
    Rat norm = level * datum.coform0(chi, chi);
    if (!is_integer(norm)) throw std::domain_error("maintheorem_sign: (chi,chi) not integral");
    Rat nat = pair(datum, chi, dot_finite(datum, w, Weight::zero(datum.rank)));
    if (!is_integer(nat)) throw std::domain_error("maintheorem_sign: w.0(chi) not integral");
    Int expnt = Int(w.length()) * to_int(norm) + to_int(nat);
    return parity(expnt) == 0 ? Int(1) : Int(-1);
}

// Leading power of the field attached to a_lambda acting on the chi
// component: the pairing (lambda, chi)_level, the locality order of the
// twisted algebra.
inline Int ope_leading_order(const RootDatum& datum, const Coweight& lambda, const Coweight& chi,
                             const Rat& level) {
    Rat v = level * datum.coform0(lambda, chi);
    if (!is_integer(v)) throw std::domain_error("ope_leading_order: pairing not integral");
    return to_int(v);
}

// Parity of the V_chi component of the chiral Hecke algebra:
// (chi,chi)_{kappa-kappa_c} mod 2.
inline int parity_hecke(const RootDatum& datum, const Weight& chi, const Rat& level) {
    Rat v = level * datum.form0(chi, chi);
    if (!is_integer(v)) throw std::domain_error("parity_hecke: (chi,chi) at this level is not integral");
    return parity(to_int(v));
}

// Natural cross pairing between the coroot lattice (basis: simple coroots)
// and the weight lattice (basis: fundamental weights): omega_j(H_i) = d_ij.
inline RatMatrix natural_cross_pairing(const RootDatum& datum) {
    return rat_identity(datum.rank);
}

}  // namespace chevalley
