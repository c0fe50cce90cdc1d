#ifndef VNUM_GRAPHS_HPP
#define VNUM_GRAPHS_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "vnum/complex.hpp"
#include "vnum/ideals.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {

// Finite simple graph: labelled vertices, edges as 2-element masks.
class Graph {
public:
    Graph() = default;

    Graph(VertexSet vertices, std::vector<Mask> edges) : vertices_(std::move(vertices)) {
        for (Mask e : edges) {
            if (popcount(e) != 2) throw std::invalid_argument("edge must join two distinct vertices");
            if (!subset_of(e, vertices_.full()))
                throw std::invalid_argument("edge uses a vertex outside the vertex set");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
    }

    const VertexSet& vertices() const { return vertices_; }
    int n() const { return vertices_.size(); }
    const std::vector<Mask>& edges() const { return edges_; }

    bool has_edge(Mask e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    Mask neighbors(int v) const {
        Mask nb = 0;
        for (Mask e : edges_)
            if (e & (Mask{1} << v)) nb |= e;
        return nb & ~(Mask{1} << v);
    }

    Mask neighbors_of_set(Mask a) const {
        Mask nb = 0;
        for (int b : mask_bits(a)) nb |= neighbors(b);
        return nb & ~a;
    }

    Mask isolated_vertices() const {
        Mask touched = 0;
        for (Mask e : edges_) touched |= e;
        return vertices_.full() & ~touched;
    }

private:
    VertexSet vertices_;
    std::vector<Mask> edges_;
};

inline SquarefreeIdeal edge_ideal(const Graph& g) {
    if (g.edges().empty())
        throw std::invalid_argument("edge_ideal: graph has no edges (zero ideal)");
    return SquarefreeIdeal(g.vertices(), g.edges());
}

inline SimplicialComplex independence_complex(const Graph& g) {
    if (g.edges().empty()) return full_simplex(g.vertices());
    return complex_of_ideal(edge_ideal(g));
}

// J(G), generated by the minimal vertex covers; equals the Alexander dual
// of the edge ideal.
inline SquarefreeIdeal cover_ideal(const Graph& g) {
    return dual_ideal(edge_ideal(g));
}

struct CoverStats {
    std::vector<Mask> minimal_vertex_covers;
    std::vector<Mask> maximal_independent_sets;
    int independence_domination = 0;  // i(G)
    int induced_matching = 0;         // im(G)
    bool is_well_covered = false;
    bool is_very_well_covered = false;
};

// Induced matching number by exhaustive search over edge subsets.
inline int induced_matching_number(const Graph& g) {
    const int m = static_cast<int>(g.edges().size());
    check_guard("induced-matching edges", kSubsetScanCap, m);
    int best = 0;
    for (Mask pick = 1; pick < (Mask{1} << m); ++pick) {
        Mask verts = 0;
        bool matching = true;
        for (int j = 0; j < m && matching; ++j)
            if (pick & (Mask{1} << j)) {
                if (verts & g.edges()[j]) matching = false;
                verts |= g.edges()[j];
            }
        if (!matching) continue;
        // Induced: no extra edge of G inside the matched vertex set.
        bool induced_ok = true;
        for (int j = 0; j < m && induced_ok; ++j)
            if (!(pick & (Mask{1} << j)) && subset_of(g.edges()[j], verts)) induced_ok = false;
        if (induced_ok) best = std::max(best, popcount(pick));
    }
    return best;
}

inline CoverStats cover_stats(const Graph& g) {
    check_guard("cover-stats n", kSubsetScanCap, g.n());
    CoverStats out;
    SimplicialComplex ind = independence_complex(g);
    out.maximal_independent_sets = ind.facets();
    const Mask full = g.vertices().full();
    for (Mask f : ind.facets()) out.minimal_vertex_covers.push_back(full & ~f);
    std::sort(out.minimal_vertex_covers.begin(), out.minimal_vertex_covers.end());
    int minf = g.n(), maxf = 0;
    for (Mask f : ind.facets()) {
        minf = std::min(minf, popcount(f));
        maxf = std::max(maxf, popcount(f));
    }
    out.independence_domination = minf;
    out.induced_matching = g.edges().empty() ? 0 : induced_matching_number(g);
    out.is_well_covered = (minf == maxf);
    const int ht = g.n() - maxf;  // ht I(G) = size of a minimum vertex cover
    out.is_very_well_covered =
        out.is_well_covered && g.isolated_vertices() == 0 && g.n() == 2 * ht;
    return out;
}

// Cor-4.3-style formula: v(J(G)) = |V| - max |F cap F'| - 2 over distinct
// maximal independent sets.
inline int v_cover_formula(const Graph& g) {
    if (g.edges().empty()) throw std::invalid_argument("v_cover_formula: graph has no edges");
    SimplicialComplex ind = independence_complex(g);
    int best = -1;
    for (std::size_t i = 0; i < ind.facet_count(); ++i)
        for (std::size_t j = i + 1; j < ind.facet_count(); ++j)
            best = std::max(best, popcount(ind.facets()[i] & ind.facets()[j]));
    if (best < 0) throw std::logic_error("v_cover_formula: fewer than two maximal independent sets");
    return g.n() - best - 2;
}

// G_0[n_1..n_h]: attach n_i pendant vertices y<i>_<j> to the i-th vertex.
inline Graph multi_whisker(const Graph& base, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != base.n())
        throw std::invalid_argument("multi_whisker: need one count per base vertex");
    for (int c : counts)
        if (c < 1) throw std::invalid_argument("multi_whisker: counts must be >= 1");
    std::vector<std::string> labels = base.vertices().labels();
    std::vector<Mask> edges = base.edges();
    for (int i = 0; i < base.n(); ++i)
        for (int j = 1; j <= counts[i]; ++j) {
            int w = static_cast<int>(labels.size());
            labels.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(j));
            edges.push_back((Mask{1} << i) | (Mask{1} << w));
        }
    return Graph(VertexSet(std::move(labels)), std::move(edges));
}

// H(n_1..n_d0): replace each perfect-matching edge x_i y_i of a
// Cohen-Macaulay very well-covered graph by K_{n_i,n_i}, replicating all
// other incident edges across the copies. `matching[i]` = (x-side, y-side)
// vertex indices of the i-th matching edge.
inline Graph bipartite_expansion(const Graph& h, const std::vector<std::pair<int, int>>& matching,
                                 const std::vector<int>& counts) {
    const int d0 = static_cast<int>(matching.size());
    if (2 * d0 != h.n() || static_cast<int>(counts.size()) != d0)
        throw std::invalid_argument("bipartite_expansion: matching must be perfect with one count per edge");
    Mask covered = 0;
    std::vector<int> pair_of(h.n(), -1), side_of(h.n(), -1);
    for (int i = 0; i < d0; ++i) {
        auto [x, y] = matching[i];
        Mask e = (Mask{1} << x) | (Mask{1} << y);
        if (popcount(e) != 2 || !h.has_edge(e) || (covered & e))
            throw std::invalid_argument("bipartite_expansion: matching not of the required form");
        covered |= e;
        pair_of[x] = pair_of[y] = i;
        side_of[x] = 0;
        side_of[y] = 1;
        if (counts[i] < 1) throw std::invalid_argument("bipartite_expansion: counts must be >= 1");
    }
    std::vector<std::string> labels;
    std::vector<std::vector<int>> copy_index(h.n());
    for (int i = 0; i < d0; ++i)
        for (int side = 0; side < 2; ++side) {
            int v = side == 0 ? matching[i].first : matching[i].second;
            for (int a = 1; a <= counts[i]; ++a) {
                copy_index[v].push_back(static_cast<int>(labels.size()));
                labels.push_back((side == 0 ? "x" : "y") + std::to_string(i + 1) + "_" +
                                 std::to_string(a));
            }
        }
    std::vector<Mask> edges;
    for (int i = 0; i < d0; ++i)  // the K_{n_i,n_i} blocks
        for (int xa : copy_index[matching[i].first])
            for (int yb : copy_index[matching[i].second])
                edges.push_back((Mask{1} << xa) | (Mask{1} << yb));
    for (Mask e : h.edges()) {
        auto bits = mask_bits(e);
        if (pair_of[bits[0]] == pair_of[bits[1]]) continue;  // a matching edge
        for (int ua : copy_index[bits[0]])
            for (int vb : copy_index[bits[1]])
                edges.push_back((Mask{1} << ua) | (Mask{1} << vb));
    }
    return Graph(VertexSet(std::move(labels)), std::move(edges));
}

// Canonical label of an edge for the nerve/line-graph vertex sets.
inline std::string edge_label(const Graph& g, Mask e) {
    auto bits = mask_bits(e);
    return g.vertices().label(bits[0]) + "-" + g.vertices().label(bits[1]);
}

// Complex on E(G) whose faces are edge families sharing a common vertex.
inline SimplicialComplex nerve_complex(const Graph& g) {
    if (g.edges().empty()) throw std::invalid_argument("nerve_complex: graph has no edges");
    check_guard("nerve edges", kSubsetScanCap, g.edges().size());
    std::vector<std::string> labels;
    for (Mask e : g.edges()) labels.push_back(edge_label(g, e));
    std::vector<Mask> gens;
    for (int v = 0; v < g.n(); ++v) {
        Mask star = 0;
        for (std::size_t j = 0; j < g.edges().size(); ++j)
            if (g.edges()[j] & (Mask{1} << v)) star |= Mask{1} << j;
        if (star) gens.push_back(star);
    }
    return SimplicialComplex(VertexSet(std::move(labels)), gens);
}

namespace detail {

// Smallest admissible family from `candidates`: `disjoint` requires the
// chosen sets to be pairwise disjoint; every ground element must lie in a
// chosen set or be adjacent to one via `adjacent`.
template <typename Adjacent>
std::optional<int> min_dominating_family(const std::vector<Mask>& candidates, int ground_size,
                                         bool disjoint, Adjacent&& adjacent) {
    const int m = static_cast<int>(candidates.size());
    for (int k = 1; k <= m; ++k) {
        bool found = false;
        for_each_subset_of_size(full_mask(m), k, [&](Mask pick) {
            if (found) return;
            Mask chosen_union = 0;
            if (disjoint) {
                Mask seen = 0;
                for (int j : mask_bits(pick)) {
                    if (seen & candidates[j]) return;
                    seen |= candidates[j];
                }
            }
            for (int j : mask_bits(pick)) chosen_union |= candidates[j];
            for (int e = 0; e < ground_size; ++e) {
                const Mask eb = Mask{1} << e;
                if (chosen_union & eb) continue;
                bool dominated = false;
                for (int j : mask_bits(pick))
                    if (adjacent(e, candidates[j])) {
                        dominated = true;
                        break;
                    }
                if (!dominated) return;
            }
            found = true;
        });
        if (found) return k;
    }
    return std::nullopt;
}

}  // namespace detail

// c(Nerve(G)): smallest family of pairwise disjoint nerve facets such that
// every edge is in one or shares an endpoint with an edge of one. Reports
// nullopt when no admissible family exists.
inline std::optional<int> c_nerve(const Graph& g) {
    SimplicialComplex nerve = nerve_complex(g);
    const int m = static_cast<int>(g.edges().size());
    auto adjacent = [&](int e, Mask family) {
        for (int j : mask_bits(family))
            if (g.edges()[e] & g.edges()[j]) return true;
        return false;
    };
    return detail::min_dominating_family(nerve.facets(), m, /*disjoint=*/true, adjacent);
}

inline Graph line_graph(const Graph& g) {
    if (g.edges().empty()) throw std::invalid_argument("line_graph: graph has no edges");
    std::vector<std::string> labels;
    for (Mask e : g.edges()) labels.push_back(edge_label(g, e));
    std::vector<Mask> edges;
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        for (std::size_t j = i + 1; j < g.edges().size(); ++j)
            if (g.edges()[i] & g.edges()[j])
                edges.push_back((Mask{1} << i) | (Mask{1} << j));
    return Graph(VertexSet(std::move(labels)), std::move(edges));
}

namespace detail {

inline void bron_kerbosch(Mask r, Mask p, Mask x, const std::vector<Mask>& adj,
                          std::vector<Mask>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    Mask pivot_nb = 0;
    Mask px = p | x;
    if (px) pivot_nb = adj[lowest_bit(px)];
    Mask cand = p & ~pivot_nb;
    for (int v : mask_bits(cand)) {
        Mask vb = Mask{1} << v;
        bron_kerbosch(r | vb, p & adj[v], x & adj[v], adj, out);
        p &= ~vb;
        x |= vb;
    }
}

}  // namespace detail

// c(L(G)) as originally stated: the minimum number of cliques of the line
// graph (not necessarily disjoint) whose vertices dominate every vertex of
// L(G). Kept to exhibit where that count diverges from c(Nerve(G)).
inline std::optional<int> c_line(const Graph& g) {
    Graph lg = line_graph(g);
    const int m = lg.n();
    check_guard("c-line edges", kSubsetScanCap, m);
    std::vector<Mask> adj(m);
    for (int v = 0; v < m; ++v) adj[v] = lg.neighbors(v);
    std::vector<Mask> cliques;
    detail::bron_kerbosch(0, full_mask(m), 0, adj, cliques);
    auto adjacent = [&](int e, Mask clique) { return (adj[e] & clique) != 0; };
    return detail::min_dominating_family(cliques, m, /*disjoint=*/false, adjacent);
}

}  // namespace vnum

#endif
