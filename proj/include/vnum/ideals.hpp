#ifndef VNUM_IDEALS_HPP
#define VNUM_IDEALS_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "vnum/bits.hpp"
#include "vnum/complex.hpp"

namespace vnum {

// Exponent vector of a monomial x^a. Entries may be negative only where a
// signed multidegree is meant (Takayama degree queries).
using Exps = std::vector<int>;

inline Mask supp_plus(const Exps& a) {
    Mask m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0) m |= Mask{1} << i;
    return m;
}

inline Mask supp_minus(const Exps& a) {
    Mask m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0) m |= Mask{1} << i;
    return m;
}

inline bool divides(const Exps& g, const Exps& a) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] > a[i]) return false;
    return true;
}

// Monomial prime ideal (x_j : j in support).
struct MonomialPrime {
    Mask support = 0;

    int height() const { return popcount(support); }
    bool operator==(const MonomialPrime& o) const { return support == o.support; }
    bool operator<(const MonomialPrime& o) const { return support < o.support; }
};

// Squarefree monomial ideal given by the antichain of generator supports.
// The zero ideal has no generators; the unit ideal is the single generator 1
// (mask 0), which can arise from colon computations.
class SquarefreeIdeal {
public:
    SquarefreeIdeal() = default;

    SquarefreeIdeal(VertexSet vertices, const std::vector<Mask>& generators)
        : vertices_(std::move(vertices)) {
        const Mask full = vertices_.full();
        for (Mask g : generators)
            if (!subset_of(g, full))
                throw std::invalid_argument("generator mask uses a bit outside the vertex set");
        gens_ = antichain_min(generators);
    }

    const VertexSet& vertices() const { return vertices_; }
    int n() const { return vertices_.size(); }
    const std::vector<Mask>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0] == 0; }
    bool is_proper() const { return !is_zero() && !is_unit(); }

    bool contains(Mask monomial) const {
        for (Mask g : gens_)
            if (subset_of(g, monomial)) return true;
        return false;
    }

    int indeg() const {
        int d = std::numeric_limits<int>::max();
        for (Mask g : gens_) d = std::min(d, popcount(g));
        return d;
    }

    bool operator==(const SquarefreeIdeal& o) const {
        return vertices_ == o.vertices_ && gens_ == o.gens_;
    }

private:
    VertexSet vertices_;
    std::vector<Mask> gens_;
};

inline SquarefreeIdeal prime_ideal(const VertexSet& vertices, MonomialPrime p) {
    std::vector<Mask> gens;
    for (int b : mask_bits(p.support)) gens.push_back(Mask{1} << b);
    return SquarefreeIdeal(vertices, gens);
}

inline SquarefreeIdeal stanley_reisner_ideal(const SimplicialComplex& c) {
    return SquarefreeIdeal(c.vertices(), minimal_nonfaces(c));
}

// Faces are the monomial supports avoiding every generator; facets found by
// a 2^n maximality scan.
inline SimplicialComplex complex_of_ideal(const SquarefreeIdeal& ideal) {
    if (ideal.is_unit()) throw std::invalid_argument("complex_of_ideal: unit ideal");
    const int n = ideal.n();
    check_guard("complex-of-ideal n", kSubsetScanCap, n);
    const Mask full = full_mask(n);
    std::vector<Mask> facets;
    for (Mask m = 0;; ++m) {
        if (!ideal.contains(m)) {
            bool maximal = true;
            for (Mask rest = full & ~m; rest; rest &= rest - 1) {
                if (!ideal.contains(m | (rest & -rest))) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) facets.push_back(m);
        }
        if (m == full) break;
    }
    return SimplicialComplex(ideal.vertices(), facets);
}

struct AssociatedPrimes {
    std::vector<MonomialPrime> primes;  // sorted by support mask
    int ht = 0;
    int bight = 0;
    int arith_deg = 0;
    int indeg = 0;
};

// Minimal prime decomposition I = cap P_F over facets F, with P_F generated
// by the variables outside F.
inline AssociatedPrimes associated_primes(const SquarefreeIdeal& ideal) {
    if (!ideal.is_proper())
        throw std::invalid_argument("associated_primes: ideal must be proper");
    SimplicialComplex c = complex_of_ideal(ideal);
    const Mask full = ideal.vertices().full();
    AssociatedPrimes out;
    for (Mask f : c.facets()) out.primes.push_back({full & ~f});
    std::sort(out.primes.begin(), out.primes.end());
    out.ht = std::numeric_limits<int>::max();
    for (const auto& p : out.primes) {
        out.ht = std::min(out.ht, p.height());
        out.bight = std::max(out.bight, p.height());
    }
    out.arith_deg = static_cast<int>(out.primes.size());
    out.indeg = ideal.indeg();
    return out;
}

inline bool is_associated(const SquarefreeIdeal& ideal, MonomialPrime p) {
    // P_F is associated iff the complement of its support is a facet.
    return complex_of_ideal(ideal).is_facet(ideal.vertices().full() & ~p.support);
}

// Generators of the dual are the complements of the facets of the complex.
inline SquarefreeIdeal dual_ideal(const SquarefreeIdeal& ideal) {
    if (!ideal.is_proper()) throw std::invalid_argument("dual_ideal: ideal must be proper");
    SimplicialComplex c = complex_of_ideal(ideal);
    const Mask full = ideal.vertices().full();
    std::vector<Mask> gens;
    for (Mask f : c.facets()) gens.push_back(full & ~f);
    return SquarefreeIdeal(ideal.vertices(), gens);
}

// (I : x_C) for a squarefree monomial x_C.
inline SquarefreeIdeal colon(const SquarefreeIdeal& ideal, Mask c) {
    if (ideal.contains(c)) {
        return SquarefreeIdeal(ideal.vertices(), {Mask{0}});  // unit
    }
    std::vector<Mask> gens;
    for (Mask g : ideal.generators()) gens.push_back(g & ~c);
    return SquarefreeIdeal(ideal.vertices(), gens);
}

inline bool equals_prime(const SquarefreeIdeal& ideal, Mask c, MonomialPrime p) {
    return colon(ideal, c) == prime_ideal(ideal.vertices(), p);
}

// General monomial ideal as an antichain of exponent vectors.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    MonomialIdeal(VertexSet vertices, std::vector<Exps> generators)
        : vertices_(std::move(vertices)) {
        const std::size_t n = static_cast<std::size_t>(vertices_.size());
        for (const Exps& g : generators) {
            if (g.size() != n)
                throw std::invalid_argument("exponent vector has wrong length");
            for (int e : g)
                if (e < 0) throw std::invalid_argument("generator exponent is negative");
        }
        gens_ = minimalize(std::move(generators));
    }

    static std::vector<Exps> minimalize(std::vector<Exps> gens) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Exps> out;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (i != j && divides(gens[j], gens[i]) && gens[i] != gens[j]) {
                    dominated = true;
                    break;
                }
            if (!dominated) out.push_back(gens[i]);
        }
        return out;
    }

    const VertexSet& vertices() const { return vertices_; }
    int n() const { return vertices_.size(); }
    const std::vector<Exps>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    bool contains(const Exps& a) const {
        for (const Exps& g : gens_)
            if (divides(g, a)) return true;
        return false;
    }

    bool operator==(const MonomialIdeal& o) const {
        return vertices_ == o.vertices_ && gens_ == o.gens_;
    }

private:
    VertexSet vertices_;
    std::vector<Exps> gens_;
};

inline MonomialIdeal to_monomial_ideal(const SquarefreeIdeal& ideal) {
    std::vector<Exps> gens;
    for (Mask g : ideal.generators()) {
        Exps e(ideal.n(), 0);
        for (int b : mask_bits(g)) e[b] = 1;
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(ideal.vertices(), std::move(gens));
}

namespace detail {

// Monomials of degree exactly `deg` in the variables of `support`.
inline void power_generators(Mask support, int deg, int n, std::vector<Exps>& out) {
    std::vector<int> vars = mask_bits(support);
    Exps cur(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i + 1 == vars.size()) {
            cur[vars[i]] = remaining;
            out.push_back(cur);
            cur[vars[i]] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[vars[i]] = e;
            self(self, i + 1, remaining - e);
        }
        cur[vars[i]] = 0;
    };
    if (!vars.empty()) rec(rec, 0, deg);
}

inline std::vector<Exps> intersect_gens(const std::vector<Exps>& a, const std::vector<Exps>& b) {
    std::vector<Exps> out;
    out.reserve(a.size() * b.size());
    for (const Exps& u : a)
        for (const Exps& v : b) {
            Exps w(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::max(u[i], v[i]);
            out.push_back(std::move(w));
        }
    return MonomialIdeal::minimalize(std::move(out));
}

}  // namespace detail

// I^(l) = cap of P^l over the associated primes. Computed by pairwise
// intersection of the P^l with minimalization after each step.
inline MonomialIdeal symbolic_power(const SquarefreeIdeal& ideal, int ell) {
    if (ell < 1) throw std::invalid_argument("symbolic_power: l must be >= 1");
    if (ell == 1) return to_monomial_ideal(ideal);
    AssociatedPrimes ass = associated_primes(ideal);
    std::vector<Exps> cur;
    bool first = true;
    for (const auto& p : ass.primes) {
        std::vector<Exps> pw;
        detail::power_generators(p.support, ell, ideal.n(), pw);
        cur = first ? pw : detail::intersect_gens(cur, pw);
        first = false;
        check_guard("symbolic-power generator count", 200000, cur.size());
    }
    return MonomialIdeal(ideal.vertices(), std::move(cur));
}

// x^a in I S_F, where the variables of F are inverted. Negative entries of
// `a` are only allowed inside F.
inline bool localized_membership(const MonomialIdeal& ideal, const Exps& a, Mask f) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 && !(f & (Mask{1} << i)))
            throw std::invalid_argument("localized_membership: negative degree outside F");
    for (const Exps& g : ideal.generators()) {
        bool ok = true;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (f & (Mask{1} << i)) continue;
            if (g[i] > a[i]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace vnum

#endif
