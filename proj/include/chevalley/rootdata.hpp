// Root systems and invariant bilinear forms for the simple types of rank
// <= 3 (A1, A2, B2, A3, G2).
//
// Conventions.  Weights are stored in the fundamental-weight basis, so the
// i-th coordinate of a weight chi is chi(H_i), the value on the i-th simple
// coroot.  Coweights are stored in the fundamental-coweight basis; the
// coweight lattice Gamma of the simply connected form is the coroot lattice,
// whose members have integral coordinates in both the fundamental-coweight
// and the simple-coroot basis.  The Cartan matrix convention is
// a_ij = 2(alpha_i,alpha_j)_0/(alpha_i,alpha_i)_0, so the j-th simple root
// is the j-th *column* of the Cartan matrix in the fundamental-weight basis.
//
// The normalized invariant form (.,.)_0 satisfies (theta,theta)_0 = 2 for
// the highest root theta.  All data are generated from the stored Cartan
// matrix; nothing else is hand-entered, so the structural identities are
// checks rather than inputs.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevalley/linalg.hpp"
#include "chevalley/numeric.hpp"

namespace chevalley {

struct Weight {
    RatVec coords;  // fundamental-weight basis

    Weight() = default;
    explicit Weight(RatVec c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(RatVec(rank, Rat(0))); }
    static Weight from_ints(const IntVec& v) {
        RatVec c(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rat(v[i]);
        return Weight(std::move(c));
    }

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_integral() const {
        for (const auto& c : coords)
            if (!is_integer(c)) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
        return r;
    }
    friend Weight operator-(const Weight& a) {
        Weight r = a;
        for (auto& c : r.coords) c = -c;
        return r;
    }
    friend Weight operator*(const Rat& s, const Weight& a) {
        Weight r = a;
        for (auto& c : r.coords) c *= s;
        return r;
    }
    friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += to_string(coords[i]);
        }
        return s + ")";
    }
};

struct Coweight {
    IntVec coords;  // fundamental-coweight basis

    Coweight() = default;
    explicit Coweight(IntVec c) : coords(std::move(c)) {}
    static Coweight zero(int rank) { return Coweight(IntVec(rank, Int(0))); }

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }

    friend Coweight operator+(const Coweight& a, const Coweight& b) {
        Coweight r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }
    friend Coweight operator-(const Coweight& a, const Coweight& b) {
        Coweight r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
        return r;
    }
    friend Coweight operator-(const Coweight& a) {
        Coweight r = a;
        for (auto& c : r.coords) c = -c;
        return r;
    }
    friend bool operator==(const Coweight& a, const Coweight& b) { return a.coords == b.coords; }
    friend bool operator!=(const Coweight& a, const Coweight& b) { return !(a == b); }
    friend bool operator<(const Coweight& a, const Coweight& b) { return a.coords < b.coords; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += to_string(coords[i]);
        }
        return s + ")";
    }
};

// Level kappa and the scaled form (.,.)_kappa = kappa * (.,.)_0.
struct Level {
    Rat kappa;
    explicit Level(Rat k) : kappa(std::move(k)) {}
};

struct RootDatum {
    std::string name;
    int rank = 0;
    std::vector<IntVec> cartan;    // rows: cartan[i][j] = a_ij
    RatMatrix cartan_inv;
    RatVec half_lengths;           // d_i = (alpha_i,alpha_i)_0 / 2
    RatMatrix weight_form;         // Gram of (.,.)_0 on h* in the omega basis
    RatMatrix coweight_form;       // Gram of (.,.)_0 on h in the simple-coroot basis
    std::vector<Weight> simple_roots;
    std::vector<Weight> positive_roots;        // ordered by (height, root-coord lex)
    std::vector<IntVec> positive_root_coords;  // simple-root coordinates, same order
    Weight rho;
    Weight theta;
    IntVec theta_root_coords;
    Int dual_coxeter_number;

    int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }

    // chi in the simple-root basis (rational in general).
    RatVec root_coords(const Weight& chi) const { return mat_vec(cartan_inv, chi.coords); }

    // Height of a weight: coordinate sum in the simple-root basis.
    Rat height(const Weight& chi) const {
        Rat h = 0;
        for (const auto& c : root_coords(chi)) h += c;
        return h;
    }

    // lambda in the simple-coroot basis (rational outside the coroot lattice).
    RatVec coroot_coords(const Coweight& lambda) const {
        // coords = A^T u  =>  u = (A^T)^{-1} coords = (A^{-1})^T coords
        RatVec u(rank, Rat(0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) u[i] += cartan_inv[j][i] * Rat(lambda.coords[j]);
        return u;
    }

    Coweight coweight_from_coroot(const IntVec& u) const {
        IntVec c(rank, Int(0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) c[i] += cartan[j][i] * u[j];
        return Coweight(std::move(c));
    }

    bool in_coroot_lattice(const Coweight& lambda) const {
        for (const auto& u : coroot_coords(lambda))
            if (!is_integer(u)) return false;
        return true;
    }

    // ht(lambda): coordinate sum in the simple-coroot basis, i.e. rho(lambda).
    Rat coweight_height(const Coweight& lambda) const {
        Rat h = 0;
        for (const auto& u : coroot_coords(lambda)) h += u;
        return h;
    }

    Weight fundamental_weight(int i) const {
        RatVec c(rank, Rat(0));
        c[i] = 1;
        return Weight(std::move(c));
    }

    // chi(H_alpha) for the coroot of the positive root with index root_idx.
    Rat eval_on_coroot(const Weight& chi, int root_idx) const {
        const Weight& alpha = positive_roots[root_idx];
        return 2 * form0(chi, alpha) / form0(alpha, alpha);
    }

    Rat form0(const Weight& x, const Weight& y) const {
        Rat v = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) v += x.coords[i] * weight_form[i][j] * y.coords[j];
        return v;
    }

    Rat coform0(const Coweight& x, const Coweight& y) const {
        RatVec u = coroot_coords(x), v = coroot_coords(y);
        Rat out = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) out += u[i] * coweight_form[i][j] * v[j];
        return out;
    }
};

namespace detail {

inline void check_same_rank(const RootDatum& datum, int r, const char* what) {
    if (r != datum.rank) {
        throw std::invalid_argument(std::string(what) + ": rank mismatch against datum " +
                                    datum.name);
    }
}

// Generates all positive roots from the Cartan matrix by root strings.
inline std::vector<IntVec> generate_positive_roots(const std::vector<IntVec>& cartan) {
    int rank = static_cast<int>(cartan.size());
    std::set<IntVec> roots;
    std::vector<IntVec> frontier;
    for (int i = 0; i < rank; ++i) {
        IntVec e(rank, Int(0));
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    auto pairing_with_simple_coroot = [&](const IntVec& b, int i) {
        Int v = 0;
        for (int j = 0; j < rank; ++j) v += cartan[i][j] * b[j];
        return v;
    };
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < rank; ++i) {
                // beta + alpha_i is a root iff r - <beta,alpha_i^vee> > 0 where
                // r counts how far the string beta - k alpha_i extends.
                Int r = 0;
                IntVec down = beta;
                while (true) {
                    down[i] -= 1;
                    bool neg_simple = false;
                    {  // allow the string to pass through -alpha_i? it cannot for beta>0
                        bool all_zero = true, any_neg = false;
                        for (const auto& c : down) {
                            if (c != 0) all_zero = false;
                            if (c < 0) any_neg = true;
                        }
                        if (all_zero || any_neg) neg_simple = true;
                    }
                    if (neg_simple || !roots.count(down)) break;
                    ++r;
                }
                if (r - pairing_with_simple_coroot(beta, i) > 0) {
                    IntVec up = beta;
                    up[i] += 1;
                    if (roots.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<IntVec> out(roots.begin(), roots.end());
    auto ht = [](const IntVec& b) {
        Int h = 0;
        for (const auto& c : b) h += c;
        return h;
    };
    std::sort(out.begin(), out.end(), [&](const IntVec& a, const IntVec& b) {
        Int ha = ht(a), hb = ht(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

inline RootDatum build_from_cartan(std::string name, std::vector<IntVec> cartan) {
    RootDatum d;
    d.name = std::move(name);
    d.rank = static_cast<int>(cartan.size());
    d.cartan = std::move(cartan);

    RatMatrix a(d.rank, RatVec(d.rank));
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) a[i][j] = Rat(d.cartan[i][j]);
    d.cartan_inv = invert(a);

    // Symmetrize: d_i a_ij = d_j a_ji, connected diagram => determined up to
    // scale.  Normalized below so that (theta,theta)_0 = 2.
    d.half_lengths.assign(d.rank, Rat(0));
    d.half_lengths[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < d.rank; ++j) {
                if (i == j || d.cartan[i][j] == 0) continue;
                if (d.half_lengths[i] != 0 && d.half_lengths[j] == 0) {
                    d.half_lengths[j] = d.half_lengths[i] * Rat(d.cartan[i][j]) / Rat(d.cartan[j][i]);
                    changed = true;
                }
            }
    }
    for (const auto& hl : d.half_lengths)
        if (hl == 0) throw std::invalid_argument("Cartan matrix has disconnected diagram");

    auto make_forms = [&d]() {
        RatMatrix dm(d.rank, RatVec(d.rank, Rat(0)));
        RatMatrix dinv(d.rank, RatVec(d.rank, Rat(0)));
        for (int i = 0; i < d.rank; ++i) {
            dm[i][i] = d.half_lengths[i];
            dinv[i][i] = Rat(1) / d.half_lengths[i];
        }
        d.weight_form = mat_mul(dm, d.cartan_inv);
        RatMatrix a2(d.rank, RatVec(d.rank));
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < d.rank; ++j) a2[i][j] = Rat(d.cartan[i][j]);
        d.coweight_form = mat_mul(a2, dinv);
    };
    make_forms();

    d.positive_root_coords = detail::generate_positive_roots(d.cartan);
    auto weight_of_root = [&d](const IntVec& b) {
        RatVec c(d.rank, Rat(0));
        for (int i = 0; i < d.rank; ++i)
            for (int j = 0; j < d.rank; ++j) c[i] += Rat(d.cartan[i][j] * b[j]);
        return Weight(std::move(c));
    };
    for (const auto& b : d.positive_root_coords) d.positive_roots.push_back(weight_of_root(b));
    for (int i = 0; i < d.rank; ++i) {
        IntVec e(d.rank, Int(0));
        e[i] = 1;
        d.simple_roots.push_back(weight_of_root(e));
    }

    d.theta_root_coords = d.positive_root_coords.back();
    d.theta = d.positive_roots.back();

    // Rescale the form so the highest root has square length 2.
    Rat tt = d.form0(d.theta, d.theta);
    Rat scale = Rat(2) / tt;
    for (auto& hl : d.half_lengths) hl *= scale;
    make_forms();

    d.rho = Weight(RatVec(d.rank, Rat(1)));
    d.dual_coxeter_number = to_int(1 + d.form0(d.rho, d.theta));
    return d;
}

}  // namespace detail

inline RootDatum build_root_datum(const std::string& type_label) {
    if (type_label == "A1") return detail::build_from_cartan("A1", {{Int(2)}});
    if (type_label == "A2")
        return detail::build_from_cartan("A2", {{Int(2), Int(-1)}, {Int(-1), Int(2)}});
    if (type_label == "B2")
        return detail::build_from_cartan("B2", {{Int(2), Int(-1)}, {Int(-2), Int(2)}});
    if (type_label == "A3")
        return detail::build_from_cartan("A3", {{Int(2), Int(-1), Int(0)},
                                                {Int(-1), Int(2), Int(-1)},
                                                {Int(0), Int(-1), Int(2)}});
    if (type_label == "G2")
        return detail::build_from_cartan("G2", {{Int(2), Int(-1)}, {Int(-3), Int(2)}});
    throw std::invalid_argument("unsupported root datum type: " + type_label);
}

// Langlands dual datum (transposed Cartan matrix).  Weight multiplicities of
// the dual group are computed here with coweights of the original datum read
// as weights of the dual one.
inline RootDatum dual_datum(const RootDatum& datum) {
    std::vector<IntVec> t(datum.rank, IntVec(datum.rank));
    for (int i = 0; i < datum.rank; ++i)
        for (int j = 0; j < datum.rank; ++j) t[i][j] = datum.cartan[j][i];
    return detail::build_from_cartan(datum.name + "v", std::move(t));
}

inline Int dual_coxeter(const RootDatum& datum) { return datum.dual_coxeter_number; }

inline Rat critical_level(const RootDatum& datum) { return Rat(-datum.dual_coxeter_number); }

// Paper convention: chi is dominant iff (chi+rho)(H_alpha) avoids the
// negative integers for every positive coroot H_alpha.
inline bool is_dominant(const RootDatum& datum, const Weight& chi) {
    detail::check_same_rank(datum, chi.rank(), "is_dominant");
    for (int r = 0; r < datum.num_positive_roots(); ++r) {
        Rat v = datum.eval_on_coroot(chi + datum.rho, r);
        if (is_integer(v) && v < 0) return false;
    }
    return true;
}

inline bool is_dominant_regular(const RootDatum& datum, const Weight& chi) {
    return is_dominant(datum, chi - datum.rho);
}

// Dominance in the unshifted sense: chi(H_alpha) >= 0 for all alpha > 0.
// Used for highest weights of finite-dimensional irreducibles.
inline bool is_hw_dominant(const RootDatum& datum, const Weight& chi) {
    if (!chi.is_integral()) return false;
    for (int i = 0; i < datum.rank; ++i)
        if (chi.coords[i] < 0) return false;
    return true;
}

// Natural pairing <lambda, chi> = chi(lambda).
inline Rat pair(const RootDatum& datum, const Coweight& lambda, const Weight& chi) {
    detail::check_same_rank(datum, lambda.rank(), "pair");
    detail::check_same_rank(datum, chi.rank(), "pair");
    RatVec u = datum.coroot_coords(lambda);
    Rat v = 0;
    for (int i = 0; i < datum.rank; ++i) v += u[i] * chi.coords[i];
    return v;
}

inline Rat form_value(const RootDatum& datum, const Level& level, const Weight& x, const Weight& y) {
    return level.kappa * datum.form0(x, y);
}

inline Rat coform_value(const RootDatum& datum, const Level& level, const Coweight& x,
                        const Coweight& y) {
    return level.kappa * datum.coform0(x, y);
}

// The image of a coweight under (.,.)_level: the weight mu with
// mu(H) = (lambda, H)_level for every coweight H.
inline Weight coweight_to_weight(const RootDatum& datum, const Level& level,
                                 const Coweight& lambda) {
    detail::check_same_rank(datum, lambda.rank(), "coweight_to_weight");
    RatVec u = datum.coroot_coords(lambda);
    RatVec mu(datum.rank, Rat(0));
    for (int j = 0; j < datum.rank; ++j) {
        for (int i = 0; i < datum.rank; ++i) mu[j] += datum.coweight_form[j][i] * u[i];
        mu[j] *= level.kappa;
    }
    return Weight(std::move(mu));
}

}  // namespace chevalley
