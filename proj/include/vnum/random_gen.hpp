#ifndef VNUM_RANDOM_GEN_HPP
#define VNUM_RANDOM_GEN_HPP

#include <random>
#include <vector>

#include "vnum/complex.hpp"
#include "vnum/graphs.hpp"
#include "vnum/ideals.hpp"

namespace vnum {
namespace rnd {

using Rng = std::mt19937_64;

inline Mask random_nonempty_subset(Rng& rng, int n) {
    std::uniform_int_distribution<Mask> dist(1, full_mask(n));
    return dist(rng);
}

// A proper complex on x1..xn: random facet generators, rejecting the rare
// degenerate outcomes.
inline SimplicialComplex random_proper_complex(Rng& rng, int n) {
    std::uniform_int_distribution<int> count_dist(1, n + 2);
    while (true) {
        std::vector<Mask> gens;
        int count = count_dist(rng);
        for (int i = 0; i < count; ++i) gens.push_back(random_nonempty_subset(rng, n));
        SimplicialComplex c(VertexSet::standard(n), gens);
        if (c.is_proper()) return c;
    }
}

// A complex whose Stanley-Reisner ideal is proper (not the full simplex).
inline SimplicialComplex random_proper_ideal_complex(Rng& rng, int n) {
    while (true) {
        SimplicialComplex c = random_proper_complex(rng, n);
        if (c.facets().size() > 1 || c.facets()[0] != full_mask(n)) return c;
    }
}

inline SquarefreeIdeal random_squarefree_ideal(Rng& rng, int n) {
    return stanley_reisner_ideal(random_proper_ideal_complex(rng, n));
}

inline Graph random_graph(Rng& rng, int n, double edge_prob) {
    std::bernoulli_distribution flip(edge_prob);
    std::vector<Mask> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (flip(rng)) edges.push_back((Mask{1} << i) | (Mask{1} << j));
    return Graph(VertexSet::standard(n), edges);
}

inline Graph random_graph_with_edges(Rng& rng, int n, double edge_prob) {
    while (true) {
        Graph g = random_graph(rng, n, edge_prob);
        if (!g.edges().empty()) return g;
    }
}

// A connected graph, via rejection. The 1-skeleton of the complex generated
// by the edges is the graph itself, so `diameter` doubles as the test.
inline Graph random_connected_graph(Rng& rng, int n, double edge_prob) {
    while (true) {
        Graph g = random_graph(rng, n, edge_prob);
        if (g.edges().empty() || g.isolated_vertices() != 0) continue;
        if (diameter(SimplicialComplex(g.vertices(), g.edges())) != kInfiniteDiameter) return g;
    }
}

// Pure complex with ht I_Delta = 2: facets are the complements of the edges
// of a random graph with at least two edges.
inline SimplicialComplex random_pure_height2(Rng& rng, int n, double edge_prob = 0.4) {
    while (true) {
        Graph g = random_graph(rng, n, edge_prob);
        if (g.edges().size() < 2) continue;
        const Mask full = full_mask(n);
        std::vector<Mask> facets;
        for (Mask e : g.edges()) facets.push_back(full & ~e);
        return SimplicialComplex(VertexSet::standard(n), facets);
    }
}

// Pure complex whose Stanley-Reisner ideal has every associated prime of
// height h: facets are complements of random h-subsets.
inline SimplicialComplex random_pure_height(Rng& rng, int n, int h, int facet_count) {
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    while (true) {
        std::vector<Mask> facets;
        for (int t = 0; t < facet_count; ++t) {
            std::shuffle(verts.begin(), verts.end(), rng);
            Mask m = 0;
            for (int i = 0; i < h; ++i) m |= Mask{1} << verts[i];
            facets.push_back(full_mask(n) & ~m);
        }
        facets = antichain_max(facets);
        if (facets.size() >= 2) return SimplicialComplex(VertexSet::standard(n), facets);
    }
}

// Random multi-whisker instance: base graph G_0 on h vertices with edges,
// pendant counts in 1..max_count.
struct WhiskerInstance {
    Graph base;
    std::vector<int> counts;
    Graph graph;
};

inline WhiskerInstance random_multi_whisker(Rng& rng, int max_h, int max_count,
                                            double edge_prob = 0.5) {
    std::uniform_int_distribution<int> h_dist(2, max_h);
    while (true) {
        int h = h_dist(rng);
        Graph base = random_graph(rng, h, edge_prob);
        if (base.edges().empty()) continue;
        std::vector<int> counts(h);
        std::uniform_int_distribution<int> c_dist(1, max_count);
        int total = h;
        for (int& c : counts) {
            c = c_dist(rng);
            total += c;
        }
        if (total > 12) continue;  // keep Hochster scans cheap
        return {base, counts, multi_whisker(base, counts)};
    }
}

// Random very well-covered expansion H(n_1..n_d0) of a whiskered graph,
// which is Cohen-Macaulay very well-covered by construction.
struct ExpansionInstance {
    Graph h;                                    // the CM very well-covered seed
    std::vector<std::pair<int, int>> matching;  // its distinguished matching
    std::vector<int> counts;
    Graph graph;
};

inline ExpansionInstance random_expansion(Rng& rng, int max_d0, int max_count,
                                          double edge_prob = 0.5) {
    std::uniform_int_distribution<int> d_dist(2, max_d0);
    while (true) {
        int d0 = d_dist(rng);
        Graph base = random_graph(rng, d0, edge_prob);
        if (base.edges().empty()) continue;
        Graph h = multi_whisker(base, std::vector<int>(d0, 1));
        std::vector<std::pair<int, int>> matching;
        for (int i = 0; i < d0; ++i) matching.push_back({i, d0 + i});
        std::vector<int> counts(d0);
        std::uniform_int_distribution<int> c_dist(1, max_count);
        int total = 0;
        for (int& c : counts) {
            c = c_dist(rng);
            total += 2 * c;
        }
        if (total > 12) continue;
        return {h, matching, counts, bipartite_expansion(h, matching, counts)};
    }
}

}  // namespace rnd
}  // namespace vnum

#endif
