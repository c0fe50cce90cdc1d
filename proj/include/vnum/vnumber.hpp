#ifndef VNUM_VNUMBER_HPP
#define VNUM_VNUMBER_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "vnum/complex.hpp"
#include "vnum/ideals.hpp"

namespace vnum {

// Marker for v_i when no associated prime of height i exists.
inline constexpr int kVInfinity = std::numeric_limits<int>::max();

// Proof object for a v_P value: colon(I, x_C) = P and |C| = value.
struct VWitness {
    MonomialPrime prime;
    Mask monomial = 0;
    int value = 0;
};

// v_P(I) by cardinality-ascending search over squarefree monomials x_C with
// (I : x_C) = P. This is the oracle path; the dual formula below is the
// production path.
inline VWitness v_p_definitional(const SquarefreeIdeal& ideal, MonomialPrime p) {
    if (!is_associated(ideal, p))
        throw std::invalid_argument("v_p_definitional: prime is not associated");
    const int n = ideal.n();
    check_guard("v-definitional n", kSubsetScanCap, n);
    for (int m = 0; m <= n; ++m) {
        VWitness found;
        bool ok = false;
        detail::for_each_subset_of_size(full_mask(n), m, [&](Mask c) {
            if (ok) return;
            if (equals_prime(ideal, c, p)) {
                found = {p, c, m};
                ok = true;
            }
        });
        if (ok) return found;
    }
    throw std::logic_error("v_p_definitional: no witness found for an associated prime");
}

namespace detail {

// Max |F_1 cap ... cap F_h| over h-tuples of facets of `dual` where F_j
// must contain all of P except its j-th vertex. Intersections are explored
// with antichain pruning. Also reports one optimal intersection mask.
inline std::pair<int, Mask> best_dual_intersection(const SimplicialComplex& dual, Mask p_support) {
    std::vector<int> pbits = mask_bits(p_support);
    std::vector<Mask> cur{~Mask{0}};
    for (int b : pbits) {
        const Mask required = p_support & ~(Mask{1} << b);
        std::vector<Mask> next;
        for (Mask c : cur)
            for (Mask f : dual.facets())
                if (subset_of(required, f)) next.push_back(c & f);
        cur = antichain_max(next);
        if (cur.empty()) return {-1, 0};
    }
    int best = -1;
    Mask best_mask = 0;
    for (Mask c : cur)
        if (popcount(c) > best) {
            best = popcount(c);
            best_mask = c;
        }
    return {best, best_mask};
}

}  // namespace detail

// v_P(I_Delta) = n - h - max |cap F_j| over facets F_j of Delta* with
// (P minus its j-th vertex) inside F_j. `dual` must be Delta*.
inline int v_p_dual_formula_with(const SimplicialComplex& delta, const SimplicialComplex& dual,
                                 MonomialPrime p) {
    if (!delta.is_facet(delta.vertices().full() & ~p.support))
        throw std::invalid_argument("v_p_dual_formula: prime is not associated");
    auto [best, ignored] = detail::best_dual_intersection(dual, p.support);
    (void)ignored;
    if (best < 0) throw std::logic_error("v_p_dual_formula: no admissible facet tuple");
    return delta.n() - p.height() - best;
}

inline int v_p_dual_formula(const SimplicialComplex& delta, MonomialPrime p) {
    return v_p_dual_formula_with(delta, alexander_dual(delta), p);
}

struct VReport {
    int v = kVInfinity;
    std::vector<VWitness> per_prime;      // ordered by prime support mask
    std::map<int, int> per_height;        // height -> v_h, kVInfinity marker
    VWitness best;                        // witness of the minimizing prime
};

// v(I) = min over associated primes, computed through the Alexander dual
// formula. Ties are broken by the smallest prime support mask, which is the
// order of `per_prime`.
inline VReport v_number(const SquarefreeIdeal& ideal) {
    if (!ideal.is_proper()) throw std::invalid_argument("v_number: ideal must be proper");
    SimplicialComplex delta = complex_of_ideal(ideal);
    SimplicialComplex dual = alexander_dual(delta);
    const Mask full = ideal.vertices().full();
    AssociatedPrimes ass = associated_primes(ideal);

    VReport out;
    for (const auto& p : ass.primes) {
        auto [best, gmask] = detail::best_dual_intersection(dual, p.support);
        if (best < 0) throw std::logic_error("v_number: no admissible facet tuple");
        const int value = ideal.n() - p.height() - best;
        // The optimal tuple yields the witness C = V \ (G u P) with
        // G = cap F_j, so |C| = n - h - |G|.
        VWitness w{p, full & ~(gmask | p.support), value};
        out.per_prime.push_back(w);
        if (value < out.v) {
            out.v = value;
            out.best = w;
        }
        auto it = out.per_height.find(p.height());
        if (it == out.per_height.end() || value < it->second)
            out.per_height[p.height()] = value;
    }
    for (int h = ass.ht; h <= ass.bight; ++h)
        if (!out.per_height.count(h)) out.per_height[h] = kVInfinity;
    return out;
}

// Neighbor set of an independent set A of the clutter whose edges are the
// generator supports.
inline Mask clutter_neighbor_set(const SquarefreeIdeal& ideal, Mask a) {
    Mask nb = 0;
    for (int v = 0; v < ideal.n(); ++v) {
        const Mask vb = Mask{1} << v;
        if (vb & a) continue;
        for (Mask e : ideal.generators())
            if (subset_of(e, a | vb) && (e & vb)) {
                nb |= vb;
                break;
            }
    }
    return nb;
}

inline bool is_clutter_independent(const SquarefreeIdeal& ideal, Mask a) {
    return !ideal.contains(a);
}

inline bool is_vertex_cover(const SquarefreeIdeal& ideal, Mask w) {
    for (Mask e : ideal.generators())
        if ((e & w) == 0) return false;
    return true;
}

inline bool is_minimal_vertex_cover(const SquarefreeIdeal& ideal, Mask w) {
    if (!is_vertex_cover(ideal, w)) return false;
    for (Mask rest = w; rest; rest &= rest - 1)
        if (is_vertex_cover(ideal, w & ~(rest & -rest))) return false;
    return true;
}

// v(I) = min{|A| : A independent, N(A) a minimal vertex cover} for the
// clutter of generator supports.
inline int v_via_clutter(const SquarefreeIdeal& ideal) {
    if (!ideal.is_proper()) throw std::invalid_argument("v_via_clutter: ideal must be proper");
    const int n = ideal.n();
    check_guard("v-clutter n", kSubsetScanCap, n);
    for (int m = 0; m <= n; ++m) {
        int found = -1;
        detail::for_each_subset_of_size(full_mask(n), m, [&](Mask a) {
            if (found >= 0) return;
            if (is_clutter_independent(ideal, a) &&
                is_minimal_vertex_cover(ideal, clutter_neighbor_set(ideal, a)))
                found = m;
        });
        if (found >= 0) return found;
    }
    throw std::logic_error("v_via_clutter: no admissible independent set");
}

// Prop-6.2-style witness: exists W inside the facet F, |W| = m, with W not
// contained in any other facet.
inline bool v_p_bound_witness(const SimplicialComplex& delta, Mask facet, int m) {
    if (!delta.is_facet(facet)) throw std::invalid_argument("v_p_bound_witness: not a facet");
    AssociatedPrimes ass = associated_primes(stanley_reisner_ideal(delta));
    if (m < 1 || m > delta.n() - ass.bight)
        throw std::invalid_argument("v_p_bound_witness: m out of range");
    bool found = false;
    detail::for_each_subset_of_size(facet, m, [&](Mask w) {
        if (found) return;
        for (Mask g : delta.facets())
            if (g != facet && subset_of(w, g)) return;
        found = true;
    });
    return found;
}

// Exact value of v_{P_F} as the smallest subset of F contained in no other
// facet. The m = 1 case is the free-vertex criterion.
inline int v_p_exact_by_witness(const SimplicialComplex& delta, Mask facet) {
    if (!delta.is_facet(facet)) throw std::invalid_argument("v_p_exact_by_witness: not a facet");
    if (delta.facet_count() == 1) return 0;  // I is the prime itself, C = {}
    for (int m = 1; m <= popcount(facet); ++m) {
        bool found = false;
        detail::for_each_subset_of_size(facet, m, [&](Mask w) {
            if (found) return;
            for (Mask g : delta.facets())
                if (g != facet && subset_of(w, g)) return;
            found = true;
        });
        if (found) return m;
    }
    throw std::logic_error("v_p_exact_by_witness: facet distinguishes itself");
}

}  // namespace vnum

#endif
