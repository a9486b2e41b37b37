// Exact multi-graded characters: Weyl characters by exact division, weight
// multiplicities by two independent algorithms (Freudenthal recursion and
// the Kostant multiplicity formula), Heisenberg Fock q-characters, and the
// Jacobi triple product check.
//
// A GradedCharacter is a sparse map (h*-weight, energy degree q, cohomological
// degree t) -> nonzero integer.  Truncations are explicit: operations
// propagate the minimum cutoff and flag mixed-cutoff inputs.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chevalley/weyl.hpp"

namespace chevalley {

struct CharKey {
    Weight weight;
    long q = 0;
    long t = 0;

    friend bool operator<(const CharKey& a, const CharKey& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        if (a.q != b.q) return a.q < b.q;
        return a.t < b.t;
    }
    friend bool operator==(const CharKey& a, const CharKey& b) {
        return a.weight == b.weight && a.q == b.q && a.t == b.t;
    }
};

struct Cutoffs {
    std::optional<long> q_max;
    std::optional<long> weight_window;  // l-infinity bound on weight coordinates
    bool mixed = false;

    static std::optional<long> min_opt(const std::optional<long>& a, const std::optional<long>& b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }
    static Cutoffs combine(const Cutoffs& a, const Cutoffs& b) {
        Cutoffs c;
        c.q_max = min_opt(a.q_max, b.q_max);
        c.weight_window = min_opt(a.weight_window, b.weight_window);
        c.mixed = a.mixed || b.mixed || a.q_max != b.q_max || a.weight_window != b.weight_window;
        return c;
    }
    friend bool operator==(const Cutoffs& a, const Cutoffs& b) {
        return a.q_max == b.q_max && a.weight_window == b.weight_window;
    }
};

struct GradedCharacter {
    int rank = 0;
    std::map<CharKey, Int> terms;
    Cutoffs cutoffs;

    GradedCharacter() = default;
    explicit GradedCharacter(int r) : rank(r) {}

    bool inside(const CharKey& k) const {
        if (cutoffs.q_max && k.q > *cutoffs.q_max) return false;
        if (cutoffs.weight_window) {
            for (const auto& c : k.weight.coords) {
                Rat a = c < 0 ? -c : c;
                if (a > *cutoffs.weight_window) return false;
            }
        }
        return true;
    }

    void add_term(const Weight& w, long q, long t, const Int& coeff) {
        if (coeff == 0) return;
        CharKey k{w, q, t};
        if (!inside(k)) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }

    Int coefficient(const Weight& w, long q, long t) const {
        auto it = terms.find(CharKey{w, q, t});
        return it == terms.end() ? Int(0) : it->second;
    }

    bool is_zero() const { return terms.empty(); }

    GradedCharacter& operator+=(const GradedCharacter& other) {
        Cutoffs c = Cutoffs::combine(cutoffs, other.cutoffs);
        cutoffs = c;
        std::map<CharKey, Int> merged;
        for (const auto& [k, v] : terms)
            if (inside(k)) merged[k] = v;
        terms = std::move(merged);
        for (const auto& [k, v] : other.terms) add_term(k.weight, k.q, k.t, v);
        return *this;
    }
    friend GradedCharacter operator+(GradedCharacter a, const GradedCharacter& b) { return a += b; }

    friend GradedCharacter operator*(const GradedCharacter& a, const GradedCharacter& b) {
        GradedCharacter out(a.rank);
        out.cutoffs = Cutoffs::combine(a.cutoffs, b.cutoffs);
        for (const auto& [ka, va] : a.terms)
            for (const auto& [kb, vb] : b.terms)
                out.add_term(ka.weight + kb.weight, ka.q + kb.q, ka.t + kb.t, va * vb);
        return out;
    }

    GradedCharacter scaled(const Int& s) const {
        GradedCharacter out(rank);
        out.cutoffs = cutoffs;
        if (s == 0) return out;
        for (const auto& [k, v] : terms) out.terms[k] = v * s;
        return out;
    }

    // [n] shift convention: shift_coh(n) realizes C[-n], adding n to every
    // cohomological degree.
    GradedCharacter shift_coh(long n) const {
        GradedCharacter out(rank);
        out.cutoffs = cutoffs;
        for (const auto& [k, v] : terms) out.terms[CharKey{k.weight, k.q, k.t + n}] = v;
        return out;
    }

    GradedCharacter twist_weight(const Weight& mu) const {
        GradedCharacter out(rank);
        out.cutoffs = cutoffs;
        for (const auto& [k, v] : terms) out.add_term(k.weight + mu, k.q, k.t, v);
        return out;
    }

    friend bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
        return a.terms == b.terms;
    }
};

enum class MultiplicityAlgorithm { freudenthal, kostant };

namespace detail {

// Kostant partition function: number of ways to write nu (simple-root
// coordinates) as a nonnegative integer combination of positive roots.
// Memoized per datum.
struct PartitionCounter {
    const RootDatum& datum;
    std::map<std::pair<int, IntVec>, Int> memo;

    explicit PartitionCounter(const RootDatum& d) : datum(d) {}

    Int count(const IntVec& nu) { return count_from(0, nu); }

    Int count_from(int idx, const IntVec& nu) {
        bool all_zero = true;
        for (const auto& c : nu) {
            if (c < 0) return 0;
            if (c != 0) all_zero = false;
        }
        if (all_zero) return 1;
        if (idx >= datum.num_positive_roots()) return 0;
        auto key = std::make_pair(idx, nu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int total = 0;
        IntVec rest = nu;
        const IntVec& root = datum.positive_root_coords[idx];
        while (true) {
            total += count_from(idx + 1, rest);
            bool ok = true;
            for (int i = 0; i < datum.rank; ++i) {
                rest[i] -= root[i];
                if (rest[i] < 0) ok = false;
            }
            if (!ok) break;
        }
        memo[key] = total;
        return total;
    }
};

inline PartitionCounter& partition_counter(const RootDatum& datum) {
    static std::map<std::string, PartitionCounter> cache;
    auto it = cache.find(datum.name);
    if (it == cache.end()) it = cache.emplace(datum.name, PartitionCounter(datum)).first;
    return it->second;
}

inline IntVec integral_root_coords(const RootDatum& datum, const Weight& w) {
    RatVec rc = datum.root_coords(w);
    IntVec out(rc.size());
    for (std::size_t i = 0; i < rc.size(); ++i) {
        if (!is_integer(rc[i])) return {};  // not in the root lattice
        out[i] = num(rc[i]);
    }
    return out;
}

// Full weight diagram of the irreducible V_chi via Freudenthal, memoized.
inline const std::map<Weight, Int>& weight_diagram(const RootDatum& datum, const WeylGroup& g,
                                                   const Weight& chi) {
    static std::map<std::pair<std::string, Weight>, std::map<Weight, Int>> cache;
    auto key = std::make_pair(datum.name, chi);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::map<Weight, Int> mult;
    Weight lowest = g.longest_element().apply(chi);
    Rat drop = datum.height(chi - lowest);
    long max_drop = static_cast<long>(to_int(drop));
    Rat norm_top = datum.form0(chi + datum.rho, chi + datum.rho);

    // Candidates chi - sum c_i alpha_i grouped by height drop, processed top down.
    IntVec cur(datum.rank, Int(0));
    std::vector<std::vector<IntVec>> by_level(max_drop + 1);
    auto rec = [&](auto&& self, int pos, long remaining) -> void {
        if (pos == datum.rank) {
            long lvl = 0;
            for (const auto& c : cur) lvl += static_cast<long>(c);
            by_level[lvl].push_back(cur);
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            cur[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, max_drop);

    for (long lvl = 0; lvl <= max_drop; ++lvl) {
        for (const auto& c : by_level[lvl]) {
            Weight mu = chi;
            for (int i = 0; i < datum.rank; ++i)
                mu = mu - Rat(c[i]) * datum.simple_roots[i];
            if (lvl == 0) {
                mult[mu] = 1;
                continue;
            }
            Rat denom = norm_top - datum.form0(mu + datum.rho, mu + datum.rho);
            if (denom == 0) continue;  // strictly below chi yet on the shell: not a weight
            Rat numer = 0;
            for (int r = 0; r < datum.num_positive_roots(); ++r) {
                const Weight& alpha = datum.positive_roots[r];
                Weight shifted = mu;
                while (true) {
                    shifted = shifted + alpha;
                    if (datum.height(chi - shifted) < 0) break;
                    auto mit = mult.find(shifted);
                    if (mit == mult.end()) continue;
                    numer += 2 * Rat(mit->second) * datum.form0(shifted, alpha);
                }
            }
            Rat m = numer / denom;
            Int mi = to_int(m);
            if (mi < 0) throw std::logic_error("Freudenthal produced a negative multiplicity");
            if (mi > 0) mult[mu] = mi;
        }
    }
    return cache.emplace(key, std::move(mult)).first->second;
}

}  // namespace detail

// dim V_chi(lambda) for chi dominant (in the highest-weight sense).
inline Int weight_multiplicity(const RootDatum& datum, const WeylGroup& g, const Weight& chi,
                               const Weight& lambda, MultiplicityAlgorithm algorithm) {
    if (!is_hw_dominant(datum, chi))
        throw std::domain_error("weight_multiplicity: chi is not dominant integral");
    if (algorithm == MultiplicityAlgorithm::freudenthal) {
        const auto& diagram = detail::weight_diagram(datum, g, chi);
        auto it = diagram.find(lambda);
        return it == diagram.end() ? Int(0) : it->second;
    }
    // Kostant: sum over W of (-1)^l(w) P(w(chi+rho) - (lambda+rho)).
    auto& counter = detail::partition_counter(datum);
    Int total = 0;
    for (const auto& w : g.elements) {
        Weight arg = w.apply(chi + datum.rho) - (lambda + datum.rho);
        IntVec rc = detail::integral_root_coords(datum, arg);
        if (rc.empty() && !arg.is_zero()) continue;
        if (rc.empty()) rc.assign(datum.rank, Int(0));
        Int p = counter.count(rc);
        total += (w.length() % 2 == 0) ? p : -p;
    }
    if (total < 0) throw std::logic_error("Kostant formula produced a negative multiplicity");
    return total;
}

// Weyl dimension formula (independent of the multiplicity algorithms).
inline Int weyl_dimension(const RootDatum& datum, const Weight& chi) {
    if (!is_hw_dominant(datum, chi))
        throw std::domain_error("weyl_dimension: chi is not dominant integral");
    Rat dim = 1;
    for (const auto& alpha : datum.positive_roots)
        dim *= datum.form0(chi + datum.rho, alpha) / datum.form0(datum.rho, alpha);
    return to_int(dim);
}

// Character of the irreducible V_chi by exact division of the shifted
// antisymmetrized sums: char * sum_w (-1)^l x^{w rho - rho} =
// sum_w (-1)^l x^{w(chi+rho) - rho}.
inline GradedCharacter weyl_character(const RootDatum& datum, const WeylGroup& g, const Weight& chi,
                                      std::optional<long> weight_window = std::nullopt) {
    if (!is_hw_dominant(datum, chi))
        throw std::domain_error("weyl_character: chi is not dominant integral");

    auto higher = [&datum](const Weight& a, const Weight& b) {
        Rat ha = datum.height(a), hb = datum.height(b);
        if (ha != hb) return ha > hb;
        return b < a;
    };
    using Poly = std::map<Weight, Int, decltype(higher)>;
    Poly numer(higher), denom(higher);
    for (const auto& w : g.elements) {
        Int sign = (w.length() % 2 == 0) ? 1 : -1;
        numer[w.apply(chi + datum.rho) - datum.rho] += sign;
        denom[w.apply(datum.rho) - datum.rho] += sign;
    }
    if (denom.begin()->first != Weight::zero(datum.rank) || denom.begin()->second != 1)
        throw std::logic_error("Weyl denominator does not lead with 1 at weight 0");

    Poly quotient(higher), remainder = numer;
    while (!remainder.empty()) {
        auto [mu, c] = *remainder.begin();
        if (c == 0) {
            remainder.erase(remainder.begin());
            continue;
        }
        quotient[mu] += c;
        for (const auto& [nu, dcoeff] : denom) {
            Weight target = mu + nu;
            auto it = remainder.find(target);
            if (it == remainder.end())
                remainder.emplace(target, -c * dcoeff);
            else
                it->second -= c * dcoeff;
            if (remainder[target] == 0) remainder.erase(target);
        }
    }

    GradedCharacter out(datum.rank);
    out.cutoffs.weight_window = weight_window;
    for (const auto& [mu, c] : quotient)
        if (c != 0) out.add_term(mu, 0, 0, c);
    return out;
}

// Character of the Fock module pi_alpha: x^alpha * prod_{n>=1}(1-q^n)^{-rank},
// highest-weight vector normalized to q^0.
inline GradedCharacter fock_character(const RootDatum& datum, const Weight& alpha, long q_max) {
    if (q_max < 0) throw std::invalid_argument("fock_character: q_max must be >= 0");
    std::vector<Int> series(q_max + 1, Int(0));
    series[0] = 1;
    // rank-fold partition generating function, truncated
    for (int copy = 0; copy < datum.rank; ++copy) {
        for (long part = 1; part <= q_max; ++part)
            for (long n = part; n <= q_max; ++n) series[n] += series[n - part];
    }
    GradedCharacter out(datum.rank);
    out.cutoffs.q_max = q_max;
    for (long n = 0; n <= q_max; ++n) out.add_term(alpha, n, 0, series[n]);
    return out;
}

struct JacobiReport {
    bool ok = true;
    long first_m = 0;
    long first_q = 0;
    long q_max = 0;
    long z_window = 0;
};

// Verifies, coefficient by coefficient, the Jacobi triple product identity
//   prod_{n>=1} (1+z q^n)(1+z^{-1} q^{n-1})
//     = sum_m z^m q^{m(m+1)/2} * prod_{n>=1}(1-q^n)^{-1}
// for q-degree <= q_max and |z-degree| <= z_window.
inline JacobiReport jacobi_triple_check(long q_max, long z_window) {
    if (q_max < 0) throw std::invalid_argument("jacobi_triple_check: q_max must be >= 1");
    using ZQ = std::pair<long, long>;  // (z degree, q degree)
    long z_keep = z_window + q_max + 1;

    std::map<ZQ, Int> fermionic{{{0, 0}, Int(1)}};
    auto mul_factor = [&](long zdeg, long qdeg) {
        // multiply by (1 + z^zdeg q^qdeg)
        std::map<ZQ, Int> next = fermionic;
        for (const auto& [k, v] : fermionic) {
            long m = k.first + zdeg, n = k.second + qdeg;
            if (n > q_max || m > z_keep || m < -z_keep) continue;
            next[{m, n}] += v;
            if (next[{m, n}] == 0) next.erase({m, n});
        }
        fermionic = std::move(next);
    };
    for (long n = 1; n <= q_max + 1; ++n) {
        if (n <= q_max) mul_factor(+1, n);
        if (n - 1 <= q_max) mul_factor(-1, n - 1);
    }

    std::vector<Int> partitions(q_max + 1, Int(0));
    partitions[0] = 1;
    for (long part = 1; part <= q_max; ++part)
        for (long n = part; n <= q_max; ++n) partitions[n] += partitions[n - part];

    std::map<ZQ, Int> bosonic;
    for (long m = -z_keep; m <= z_keep; ++m) {
        long base = m * (m + 1) / 2;
        if (base > q_max || base < 0) continue;
        for (long n = 0; base + n <= q_max; ++n) {
            if (partitions[n] == 0) continue;
            bosonic[{m, base + n}] += partitions[n];
        }
    }

    JacobiReport rep;
    rep.q_max = q_max;
    rep.z_window = z_window;
    for (long m = -z_window; m <= z_window; ++m)
        for (long n = 0; n <= q_max; ++n) {
            auto f = fermionic.find({m, n});
            auto b = bosonic.find({m, n});
            Int fv = f == fermionic.end() ? Int(0) : f->second;
            Int bv = b == bosonic.end() ? Int(0) : b->second;
            if (fv != bv) {
                rep.ok = false;
                rep.first_m = m;
                rep.first_q = n;
                return rep;
            }
        }
    return rep;
}

}  // namespace chevalley
