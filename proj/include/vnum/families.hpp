#ifndef VNUM_FAMILIES_HPP
#define VNUM_FAMILIES_HPP

#include <string>
#include <vector>

#include "vnum/complex.hpp"
#include "vnum/graphs.hpp"
#include "vnum/homology.hpp"

namespace vnum {
namespace families {

inline Mask m1(std::initializer_list<int> verts_1based) {
    Mask m = 0;
    for (int v : verts_1based) m |= Mask{1} << (v - 1);
    return m;
}

// The 6-vertex triangulation of the real projective plane. Consumers must
// gate on the homology signature (H~_1 = H~_2 = k over GF(2), zero over
// GF(3)) before relying on it.
inline SimplicialComplex rp2() {
    std::vector<Mask> facets;
    for (auto t : std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6},
                                                {1, 5, 6}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6},
                                                {3, 4, 5}, {3, 4, 6}})
        facets.push_back(m1({t[0], t[1], t[2]}));
    return SimplicialComplex(VertexSet::standard(6), facets);
}

inline bool rp2_signature_ok() {
    SimplicialComplex c = rp2();
    auto h2 = reduced_homology_dims(c, PrimeField(2));
    auto h3 = reduced_homology_dims(c, PrimeField(3));
    return h2[0] == 0 && h2[1] == 0 && h2[2] == 1 && h2[3] == 1 &&
           h3[0] == 0 && h3[1] == 0 && h3[2] == 0 && h3[3] == 0;
}

// Gamma = <F_1, F_2, {x_{p-r+3}}, ..., {x_{p+2}}> on p+2 vertices with
// F_1 = {x_1..x_{p-r+1}}, F_2 = {x_1..x_{p-q}, x_{p-r+2}}. The target
// complex is Delta = Gamma*, a pure height-2 complex with
// reg I_Delta = p+1, v(I_Delta) = q, indeg I_Delta = r+1.
inline SimplicialComplex range_gamma(int p, int q, int r) {
    if (!(1 <= r && r <= q && q <= p))
        throw std::invalid_argument("range construction needs p >= q >= r >= 1");
    const int n = p + 2;
    std::vector<Mask> facets;
    Mask f1 = 0;
    for (int i = 1; i <= p - r + 1; ++i) f1 |= Mask{1} << (i - 1);
    facets.push_back(f1);
    Mask f2 = 0;
    for (int i = 1; i <= p - q; ++i) f2 |= Mask{1} << (i - 1);
    f2 |= Mask{1} << (p - r + 2 - 1);
    facets.push_back(f2);
    for (int i = p - r + 3; i <= p + 2; ++i) facets.push_back(Mask{1} << (i - 1));
    return SimplicialComplex(VertexSet::standard(n), facets);
}

inline SimplicialComplex range_complex(int p, int q, int r) {
    return alexander_dual(range_gamma(p, q, r));
}

// Delta = <F_1, F_2, F_3> on 3m-l vertices: the pure flag complex with
// v(I_{Delta*}) = 3m-2l-2 exceeding bight I_Delta - 1 = 2m-l-1 for m > l+1.
inline SimplicialComplex bight_example(int m, int ell) {
    if (!(ell >= 1 && m > ell + 1))
        throw std::invalid_argument("bight example needs m > l+1 >= 2");
    const int n = 3 * m - ell;
    Mask f1 = 0, f2 = 0, f3 = 0;
    for (int i = 1; i <= m; ++i) f1 |= Mask{1} << (i - 1);
    for (int i = 1; i <= ell; ++i) f2 |= Mask{1} << (i - 1);
    for (int i = m + 1; i <= 2 * m - ell; ++i) f2 |= Mask{1} << (i - 1);
    for (int i = 2 * m - ell + 1; i <= 3 * m - ell; ++i) f3 |= Mask{1} << (i - 1);
    return SimplicialComplex(VertexSet::standard(n), {f1, f2, f3});
}

// <{x1,x2,x3},{x4}>: v(I_Delta) = 1 while dim - depth = 2.
inline SimplicialComplex example_8_4() {
    return SimplicialComplex(VertexSet::standard(4), {m1({1, 2, 3}), m1({4})});
}

// The 10-vertex counter-example graph with c(L(G)) = 2 but v(I(G)) = 3.
inline Graph example_5_12_graph() {
    std::vector<std::pair<int, int>> e = {{1, 2}, {2, 5}, {4, 5}, {3, 4}, {5, 6},
                                          {6, 7}, {7, 8}, {6, 9}, {9, 10}};
    std::vector<Mask> edges;
    for (auto [u, v] : e) edges.push_back(m1({u, v}));
    return Graph(VertexSet::standard(10), edges);
}

inline Graph path_graph(int n) {
    std::vector<Mask> edges;
    for (int i = 1; i < n; ++i) edges.push_back(m1({i, i + 1}));
    return Graph(VertexSet::standard(n), edges);
}

inline Graph cycle_graph(int n) {
    std::vector<Mask> edges;
    for (int i = 1; i < n; ++i) edges.push_back(m1({i, i + 1}));
    edges.push_back(m1({n, 1}));
    return Graph(VertexSet::standard(n), edges);
}

inline Graph complete_graph(int n) {
    std::vector<Mask> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.push_back(m1({i, j}));
    return Graph(VertexSet::standard(n), edges);
}

inline Graph star_graph(int leaves) {
    std::vector<Mask> edges;
    for (int i = 2; i <= leaves + 1; ++i) edges.push_back(m1({1, i}));
    return Graph(VertexSet::standard(leaves + 1), edges);
}

// Whisker graph G_0[1,...,1] together with the perfect matching that
// exhibits it as a Cohen-Macaulay very well-covered graph in condition (*).
inline std::pair<Graph, std::vector<std::pair<int, int>>> whiskered_with_matching(const Graph& base) {
    Graph w = multi_whisker(base, std::vector<int>(base.n(), 1));
    std::vector<std::pair<int, int>> matching;
    for (int i = 0; i < base.n(); ++i) matching.push_back({i, base.n() + i});
    return {w, matching};
}

}  // namespace families
}  // namespace vnum

#endif
