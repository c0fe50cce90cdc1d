#ifndef VNUM_HOMOLOGY_HPP
#define VNUM_HOMOLOGY_HPP

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "vnum/complex.hpp"
#include "vnum/gf.hpp"
#include "vnum/ideals.hpp"

namespace vnum {

// Dimensions of the reduced homology groups over GF(p), indexed from -1:
// result[i + 1] = dim H~_i(c; k) for i = -1 .. dim(c). Empty for the void
// complex. Ranks of the boundary matrices come from Gaussian elimination;
// GF(2) uses bit-packed rows.
inline std::vector<int> reduced_homology_dims(const SimplicialComplex& c, PrimeField k) {
    if (c.is_void()) return {};
    auto faces = c.faces_by_size();  // faces[s] = faces of cardinality s
    const int top = static_cast<int>(faces.size()) - 1;  // top = dim + 1

    std::vector<std::unordered_map<Mask, int>> index(faces.size());
    for (std::size_t s = 0; s < faces.size(); ++s)
        for (std::size_t j = 0; j < faces[s].size(); ++j) index[s][faces[s][j]] = static_cast<int>(j);

    // ranks[s] = rank of the boundary map from cardinality-s faces to
    // cardinality-(s-1) faces, s = 1 .. top.
    std::vector<int> ranks(faces.size() + 1, 0);
    for (int s = 1; s <= top; ++s) {
        const std::size_t nrows = faces[s].size();
        const std::size_t ncols = faces[s - 1].size();
        if (nrows == 0 || ncols == 0) continue;
        if (k.p == 2) {
            std::vector<std::vector<std::uint64_t>> rows(nrows,
                std::vector<std::uint64_t>((ncols + 63) / 64, 0));
            for (std::size_t r = 0; r < nrows; ++r) {
                Mask f = faces[s][r];
                for (Mask rest = f; rest; rest &= rest - 1) {
                    int col = index[s - 1].at(f & ~(rest & -rest));
                    rows[r][col >> 6] ^= std::uint64_t{1} << (col & 63);
                }
            }
            ranks[s] = gf::rank_packed2(std::move(rows), ncols);
        } else {
            std::vector<std::vector<std::uint32_t>> rows(nrows, std::vector<std::uint32_t>(ncols, 0));
            for (std::size_t r = 0; r < nrows; ++r) {
                Mask f = faces[s][r];
                int pos = 0;
                for (Mask rest = f; rest; rest &= rest - 1, ++pos) {
                    int col = index[s - 1].at(f & ~(rest & -rest));
                    rows[r][col] = (pos % 2 == 0) ? 1 : k.p - 1;
                }
            }
            ranks[s] = gf::rank_dense(std::move(rows), k.p);
        }
    }

    std::vector<int> dims(faces.size(), 0);
    for (int s = 0; s <= top; ++s)
        dims[s] = static_cast<int>(faces[s].size()) - ranks[s] - ranks[s + 1];
    return dims;
}

// dim H~_i for a single index; 0 outside the stored range.
inline int homology_dim(const SimplicialComplex& c, int i, PrimeField k) {
    auto dims = reduced_homology_dims(c, k);
    int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
    return dims[idx];
}

struct BettiTable {
    // entries[(i, j)] = beta_{i,j}(S/I), only nonzero entries stored.
    std::map<std::pair<int, int>, int> entries;
    int n = 0;
    PrimeField field{2};
    int reg = 0;    // reg(S/I)
    int pd = 0;     // projective dimension of S/I
    int depth = 0;  // n - pd (Auslander-Buchsbaum)
    int dim = 0;    // dim S/I = dim(complex) + 1

    int beta(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

// Hochster's formula: beta_{i,j}(S/I_Delta) = sum over |W| = j of
// dim H~_{j-i-1}(Delta_W; k). Full 2^n scan of the vertex subsets.
inline BettiTable hochster_betti(const SquarefreeIdeal& ideal, PrimeField k) {
    SimplicialComplex c = complex_of_ideal(ideal);
    const int n = ideal.n();
    check_guard("hochster n", kSubsetScanCap, n);
    BettiTable out;
    out.n = n;
    out.field = k;
    const Mask full = full_mask(n);
    for (Mask w = 0;; ++w) {
        const int j = popcount(w);
        auto dims = reduced_homology_dims(induced(c, w), k);
        for (int idx = 0; idx < static_cast<int>(dims.size()); ++idx) {
            if (dims[idx] == 0) continue;
            const int d = idx - 1;  // homology index
            const int i = j - d - 1;
            out.entries[{i, j}] += dims[idx];
        }
        if (w == full) break;
    }
    for (const auto& [ij, b] : out.entries) {
        if (b == 0) continue;
        out.reg = std::max(out.reg, ij.second - ij.first);
        out.pd = std::max(out.pd, ij.first);
    }
    out.depth = n - out.pd;
    out.dim = c.dim() + 1;
    return out;
}

inline int depth_via_hochster(const SquarefreeIdeal& ideal, PrimeField k) {
    return hochster_betti(ideal, k).depth;
}

// Reisner's criterion: H~_i(link F; k) = 0 for every face F and every
// i < dim link F. The complex is taken on its support.
inline bool is_cohen_macaulay(const SimplicialComplex& c0, PrimeField k) {
    if (c0.is_void()) return false;
    SimplicialComplex c = normalize(c0);
    if (c.is_irrelevant()) return true;
    auto faces = c.faces_by_size();
    for (const auto& level : faces)
        for (Mask f : level) {
            SimplicialComplex lk = link(c, f);
            auto dims = reduced_homology_dims(lk, k);
            const int d = lk.dim();
            for (int i = -1; i < d; ++i)
                if (dims[i + 1] != 0) return false;
        }
    return true;
}

// Duval's criterion: every pure i-skeleton is Cohen-Macaulay.
inline bool is_sequentially_cm(const SimplicialComplex& c0, PrimeField k) {
    if (!c0.is_proper()) return !c0.is_void();
    SimplicialComplex c = normalize(c0);
    for (int i = 0; i <= c.dim(); ++i)
        if (!is_cohen_macaulay(pure_skeleton(c, i), k)) return false;
    return true;
}

struct RingClassification {
    bool is_cm = false;
    bool is_2cm = false;
    bool is_level = false;
    bool is_gorenstein = false;
    bool is_seq_cm = false;
};

inline RingClassification classify(const SimplicialComplex& c0, PrimeField k) {
    if (!c0.is_proper()) throw std::invalid_argument("classify: degenerate complex");
    SimplicialComplex c = normalize(c0);
    RingClassification out;
    out.is_cm = is_cohen_macaulay(c, k);
    if (out.is_cm) {
        out.is_2cm = true;
        const int d = c.dim();
        const Mask full = c.vertices().full();
        for (int x = 0; x < c.n() && out.is_2cm; ++x) {
            SimplicialComplex del = induced(c, full & ~(Mask{1} << x));
            if (del.dim() != d || !is_cohen_macaulay(del, k)) out.is_2cm = false;
        }
    }
    BettiTable betti = hochster_betti(stanley_reisner_ideal(c), k);
    int top_entries = 0;
    int top_total = 0;
    for (const auto& [ij, b] : betti.entries)
        if (ij.first == betti.pd && b != 0) {
            ++top_entries;
            top_total += b;
        }
    out.is_level = top_entries == 1;
    out.is_gorenstein = out.is_cm && top_total == 1;
    out.is_seq_cm = is_sequentially_cm(c, k);
    return out;
}

// Both sides of the local Alexander duality isomorphism
// H~_{i-2}(link_Delta(V\W)) = H~_{|W|-i-1}((Delta*)_W).
inline std::pair<int, int> lad_check(const SimplicialComplex& c, Mask w, int i, PrimeField k) {
    const Mask full = c.vertices().full();
    if (!c.is_face(full & ~w)) throw std::invalid_argument("lad_check: V\\W is not a face");
    int left = homology_dim(link(c, full & ~w), i - 2, k);
    int right = homology_dim(induced(alexander_dual(c), w), popcount(w) - i - 1, k);
    return {left, right};
}

}  // namespace vnum

#endif
