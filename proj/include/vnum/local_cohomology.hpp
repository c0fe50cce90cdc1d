#ifndef VNUM_LOCAL_COHOMOLOGY_HPP
#define VNUM_LOCAL_COHOMOLOGY_HPP

#include <algorithm>
#include <map>
#include <unordered_set>
#include <vector>

#include "vnum/complex.hpp"
#include "vnum/gf.hpp"
#include "vnum/homology.hpp"
#include "vnum/ideals.hpp"

namespace vnum {

// dim K^i = -infinity when K^i = 0.
inline constexpr int kDimNegInfinity = std::numeric_limits<int>::min();

// Cap on the vertex count for the Takayama (F, a) scans.
inline constexpr int kTakayamaCap = 16;

// Takayama degree complex Delta_a(I) = {F \ supp_-a : supp_-a subset F,
// x^a not in I S_F}, by scanning F over the supersets of supp_-a.
inline SimplicialComplex degree_complex(const MonomialIdeal& ideal, const Exps& a) {
    const int n = ideal.n();
    check_guard("degree-complex n", kSubsetScanCap, n);
    const Mask neg = supp_minus(a);
    const Mask rest = full_mask(n) & ~neg;
    std::vector<char> in(std::size_t{1} << n, 0);
    for_each_submask(rest, [&](Mask g) {
        if (!localized_membership(ideal, a, g | neg)) in[g] = 1;
    });
    std::vector<Mask> facets;
    for_each_submask(rest, [&](Mask g) {
        if (!in[g]) return;
        for (Mask r = rest & ~g; r; r &= r - 1)
            if (in[g | (r & -r)]) return;
        facets.push_back(g);
    });
    return SimplicialComplex(ideal.vertices(), facets);
}

// dim_k [H^i_m(S/I)]_a via Takayama's formula.
inline int local_cohomology_piece(const MonomialIdeal& ideal, int i, const Exps& a, PrimeField k) {
    SimplicialComplex dc = degree_complex(ideal, a);
    return homology_dim(dc, i - popcount(supp_minus(a)) - 1, k);
}

// Nonvanishing profile of H^i_m(S/I^(l)) for a squarefree I: for each
// homological index i, the largest |F| of a face contributing a nonzero
// graded piece (the pole order of the Hilbert series of K^i at t = 1).
// One nonzero graded piece of H^i_m: a representative signed degree and the
// k-dimension there.
struct LcPiece {
    Exps degree;
    int dim = 0;
};

inline constexpr int kLcPieceCap = 50;  // stored pieces per homological index

struct LcProfile {
    std::vector<int> canonical_dim;  // index i = 0..n; kDimNegInfinity when K^i = 0
    std::vector<std::vector<LcPiece>> pieces;  // pieces[i], capped at kLcPieceCap
    int depth = 0;
    int dim = 0;
};

namespace detail {

struct MaskVecHash {
    std::size_t operator()(const std::vector<Mask>& v) const {
        std::size_t h = v.size();
        for (Mask m : v) h = h * 1000003u + std::hash<Mask>{}(m);
        return h;
    }
};

}  // namespace detail

// Scans all signed degrees a with supp_-a a face F of the complex and the
// positive part capped at l (sound: generators of I^(l) have entries <= l).
// For symbolic powers the degree complex at such a degree is generated by
// the complements V \ F \ P of the "deficient" associated primes P, those
// avoiding F with sum_{i in P} a_i < l, so the scan groups degrees by their
// deficiency pattern and computes each homology once.
inline LcProfile lc_profile(const SquarefreeIdeal& ideal, int ell, PrimeField k) {
    if (!ideal.is_proper()) throw std::invalid_argument("lc_profile: ideal must be proper");
    if (ell < 1) throw std::invalid_argument("lc_profile: l must be >= 1");
    const int n = ideal.n();
    check_guard("takayama-scan n", kTakayamaCap, n);
    SimplicialComplex delta = complex_of_ideal(ideal);
    AssociatedPrimes ass = associated_primes(ideal);
    const Mask full = full_mask(n);

    LcProfile out;
    out.dim = delta.dim() + 1;
    out.canonical_dim.assign(n + 1, kDimNegInfinity);
    out.pieces.assign(n + 1, {});

    // Memo across faces: homology of a complex given by its facet masks.
    std::unordered_map<std::vector<Mask>, std::vector<int>, detail::MaskVecHash> homology_memo;

    auto faces = delta.faces_by_size();
    for (const auto& level : faces)
        for (Mask f : level) {
            std::vector<Mask> rel;  // primes avoiding F
            for (const auto& p : ass.primes)
                if ((p.support & f) == 0) rel.push_back(p.support);
            if (rel.empty()) continue;
            Mask u = 0;
            for (Mask p : rel) u |= p;

            // Enumerate positive parts a in {0..l}^U, tracking per-prime sums.
            std::vector<int> vars = mask_bits(u);
            std::vector<std::vector<int>> primes_of_var(vars.size());
            for (std::size_t vi = 0; vi < vars.size(); ++vi)
                for (std::size_t pi = 0; pi < rel.size(); ++pi)
                    if (rel[pi] & (Mask{1} << vars[vi])) primes_of_var[vi].push_back(static_cast<int>(pi));
            std::vector<int> sums(rel.size(), 0);
            std::vector<int> chosen(vars.size(), 0);
            // pattern -> a representative signed degree realizing it
            std::unordered_map<std::vector<Mask>, Exps, detail::MaskVecHash> patterns;
            auto rec = [&](auto&& self, std::size_t vi) -> void {
                if (vi == vars.size()) {
                    std::vector<Mask> deficient;
                    for (std::size_t pi = 0; pi < rel.size(); ++pi)
                        if (sums[pi] < ell) deficient.push_back(rel[pi]);
                    if (deficient.empty()) return;
                    std::vector<Mask> key = antichain_min(std::move(deficient));
                    if (patterns.count(key)) return;
                    Exps a(n, 0);
                    for (int b : mask_bits(f)) a[b] = -1;
                    for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = chosen[i];
                    patterns.emplace(std::move(key), std::move(a));
                    return;
                }
                for (int e = 0; e <= ell; ++e) {
                    if (e > 0)
                        for (int pi : primes_of_var[vi]) ++sums[pi];
                    chosen[vi] = e;
                    self(self, vi + 1);
                }
                chosen[vi] = 0;
                for (int pi : primes_of_var[vi]) sums[pi] -= ell;
            };
            rec(rec, 0);

            const int fsize = popcount(f);
            for (const auto& [deficient, degree] : patterns) {
                std::vector<Mask> gens;
                for (Mask p : deficient) gens.push_back(full & ~f & ~p);
                std::vector<Mask> key = antichain_max(gens);
                auto it = homology_memo.find(key);
                if (it == homology_memo.end()) {
                    SimplicialComplex dc(ideal.vertices(), key);
                    it = homology_memo.emplace(key, reduced_homology_dims(dc, k)).first;
                }
                const auto& dims = it->second;
                for (int idx = 0; idx < static_cast<int>(dims.size()); ++idx) {
                    if (dims[idx] == 0) continue;
                    const int i = (idx - 1) + fsize + 1;
                    if (i >= 0 && i <= n) {
                        out.canonical_dim[i] = std::max(out.canonical_dim[i], fsize);
                        if (static_cast<int>(out.pieces[i].size()) < kLcPieceCap)
                            out.pieces[i].push_back({degree, dims[idx]});
                    }
                }
            }
        }

    out.depth = out.dim;
    for (int i = 0; i <= n; ++i)
        if (out.canonical_dim[i] != kDimNegInfinity) {
            out.depth = i;
            break;
        }
    return out;
}

inline int depth_symbolic(const SquarefreeIdeal& ideal, int ell, PrimeField k) {
    return lc_profile(ideal, ell, k).depth;
}

inline int canonical_dim(const SquarefreeIdeal& ideal, int ell, int i, PrimeField k) {
    LcProfile pr = lc_profile(ideal, ell, k);
    if (i < 0 || i > ideal.n()) return kDimNegInfinity;
    return pr.canonical_dim[i];
}

inline bool is_unmixed(const SquarefreeIdeal& ideal) {
    AssociatedPrimes ass = associated_primes(ideal);
    return ass.ht == ass.bight;
}

// S_r-depth = min{j : dim K^j >= j - r + 1}; equals dim S/I^(l) exactly
// when (S_r) holds.
inline int serre_depth(const SquarefreeIdeal& ideal, int ell, int r, PrimeField k) {
    if (r < 2) throw std::invalid_argument("serre_depth: r must be >= 2");
    if (!is_unmixed(ideal)) throw std::invalid_argument("serre_depth: ideal must be unmixed");
    LcProfile pr = lc_profile(ideal, ell, k);
    for (int j = 0; j <= ideal.n(); ++j) {
        if (pr.canonical_dim[j] == kDimNegInfinity) continue;
        if (pr.canonical_dim[j] >= j - r + 1) return j;
    }
    return pr.dim;
}

// Independent l = 1 route: dim K^i = max{|F| : H~_{i-|F|-1}(link F) != 0}.
inline int canonical_dim_via_links(const SimplicialComplex& delta, int i, PrimeField k) {
    int best = kDimNegInfinity;
    auto faces = delta.faces_by_size();
    for (const auto& level : faces)
        for (Mask f : level)
            if (homology_dim(link(delta, f), i - popcount(f) - 1, k) != 0)
                best = std::max(best, popcount(f));
    return best;
}

}  // namespace vnum

#endif
