#ifndef VNUM_COMPLEX_HPP
#define VNUM_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vnum/bits.hpp"

namespace vnum {

// Enumeration cap for operations that scan all 2^n subsets of the vertex set.
inline constexpr int kSubsetScanCap = 20;

// Labelled vertex set of size at most 64.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty() || labels_.size() > 64)
            throw std::invalid_argument("vertex count must be in 1..64, got " +
                                        std::to_string(labels_.size()));
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            auto [it, fresh] = index_.emplace(labels_[i], static_cast<int>(i));
            if (!fresh) throw std::invalid_argument("duplicate vertex label: " + labels_[i]);
        }
    }

    // x1..xn
    static VertexSet standard(int n) {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
        return VertexSet(std::move(labels));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }

    int index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw std::invalid_argument("unknown vertex label: " + label);
        return it->second;
    }

    bool has_label(const std::string& label) const { return index_.count(label) > 0; }

    Mask full() const { return full_mask(size()); }

    bool operator==(const VertexSet& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

enum class ComplexKind { Void, Irrelevant, Proper };

// Keeps the inclusion-maximal masks, deduplicated and sorted ascending.
inline std::vector<Mask> antichain_max(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> out;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < masks.size(); ++j) {
            if (i != j && subset_of(masks[i], masks[j]) &&
                (masks[i] != masks[j] || j > i)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(masks[i]);
    }
    return out;
}

// Keeps the inclusion-minimal masks, deduplicated and sorted ascending.
inline std::vector<Mask> antichain_min(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Mask> out;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < masks.size(); ++j) {
            if (i != j && subset_of(masks[j], masks[i])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(masks[i]);
    }
    return out;
}

// Simplicial complex given by its facet antichain. The void complex (no
// faces at all) and the irrelevant complex {emptyset} are first-class so
// that Alexander duality is a total involution.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Facets become the inclusion-maximal elements of `generators`.
    SimplicialComplex(VertexSet vertices, const std::vector<Mask>& generators)
        : vertices_(std::move(vertices)) {
        const Mask full = vertices_.full();
        for (Mask g : generators)
            if (!subset_of(g, full))
                throw std::invalid_argument("face mask uses a bit outside the vertex set");
        facets_ = antichain_max(generators);
    }

    const VertexSet& vertices() const { return vertices_; }
    int n() const { return vertices_.size(); }
    const std::vector<Mask>& facets() const { return facets_; }

    ComplexKind kind() const {
        if (facets_.empty()) return ComplexKind::Void;
        if (facets_.size() == 1 && facets_[0] == 0) return ComplexKind::Irrelevant;
        return ComplexKind::Proper;
    }

    bool is_void() const { return kind() == ComplexKind::Void; }
    bool is_irrelevant() const { return kind() == ComplexKind::Irrelevant; }
    bool is_proper() const { return kind() == ComplexKind::Proper; }

    // dim(void) = -2 and dim({emptyset}) = -1 by convention.
    int dim() const {
        if (is_void()) return -2;
        int d = -1;
        for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
        return d;
    }

    Mask support() const {
        Mask s = 0;
        for (Mask f : facets_) s |= f;
        return s;
    }

    bool is_face(Mask f) const {
        for (Mask g : facets_)
            if (subset_of(f, g)) return true;
        return false;
    }

    bool is_facet(Mask f) const {
        return std::binary_search(facets_.begin(), facets_.end(), f);
    }

    std::size_t facet_count() const { return facets_.size(); }

    // All faces, grouped by cardinality: result[k] = faces of size k.
    // Guarded: materializes up to 2^|support| masks.
    std::vector<std::vector<Mask>> faces_by_size() const {
        check_guard("face-enumeration n", kSubsetScanCap, popcount(support()));
        std::vector<std::vector<Mask>> out;
        if (is_void()) return out;
        std::vector<Mask> all;
        for (Mask f : facets_) for_each_submask(f, [&](Mask s) { all.push_back(s); });
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        out.resize(static_cast<std::size_t>(dim()) + 2);
        for (Mask f : all) out[popcount(f)].push_back(f);
        return out;
    }

    bool operator==(const SimplicialComplex& o) const {
        return vertices_ == o.vertices_ && facets_ == o.facets_;
    }

private:
    VertexSet vertices_;
    std::vector<Mask> facets_;
};

inline SimplicialComplex build_complex(VertexSet vertices, const std::vector<Mask>& generators) {
    return SimplicialComplex(std::move(vertices), generators);
}

inline SimplicialComplex void_complex(VertexSet vertices) {
    return SimplicialComplex(std::move(vertices), {});
}

inline SimplicialComplex irrelevant_complex(VertexSet vertices) {
    return SimplicialComplex(std::move(vertices), {Mask{0}});
}

inline SimplicialComplex full_simplex(VertexSet vertices) {
    Mask f = vertices.full();
    return SimplicialComplex(std::move(vertices), {f});
}

// Inclusion-minimal subsets of V that are not faces. These are the supports
// of the minimal generators of the Stanley-Reisner ideal. The void complex
// has the empty set as its unique minimal non-face.
inline std::vector<Mask> minimal_nonfaces(const SimplicialComplex& c) {
    const int n = c.n();
    check_guard("minimal-nonfaces n", kSubsetScanCap, n);
    std::vector<Mask> out;
    const Mask full = full_mask(n);
    for (Mask m = 0; m <= full; ++m) {
        if (c.is_face(m)) continue;
        bool minimal = true;
        for (Mask rest = m; rest; rest &= rest - 1) {
            Mask sub = m & ~(rest & -rest);
            if (!c.is_face(sub)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(m);
        if (full == ~Mask{0} && m == full) break;
    }
    return out;
}

// Delta* = {F : V\F not in Delta}. Facets are the complements of the
// minimal non-faces; in particular the full simplex dualizes to the void
// complex and vice versa.
inline SimplicialComplex alexander_dual(const SimplicialComplex& c) {
    const Mask full = c.vertices().full();
    std::vector<Mask> facets;
    for (Mask nf : minimal_nonfaces(c)) facets.push_back(full & ~nf);
    return SimplicialComplex(c.vertices(), facets);
}

inline SimplicialComplex link(const SimplicialComplex& c, Mask f) {
    if (!c.is_face(f)) throw std::invalid_argument("link: not a face of the complex");
    std::vector<Mask> facets;
    for (Mask g : c.facets())
        if (subset_of(f, g)) facets.push_back(g & ~f);
    return SimplicialComplex(c.vertices(), facets);
}

inline SimplicialComplex star(const SimplicialComplex& c, Mask f) {
    if (!c.is_face(f)) throw std::invalid_argument("star: not a face of the complex");
    std::vector<Mask> facets;
    for (Mask g : c.facets())
        if (subset_of(f, g)) facets.push_back(g);
    return SimplicialComplex(c.vertices(), facets);
}

inline SimplicialComplex induced(const SimplicialComplex& c, Mask w) {
    std::vector<Mask> gens;
    for (Mask g : c.facets()) gens.push_back(g & w);
    return SimplicialComplex(c.vertices(), gens);
}

namespace detail {

template <typename F>
void for_each_subset_of_size(Mask m, int k, F&& f) {
    std::vector<int> bits = mask_bits(m);
    if (k > static_cast<int>(bits.size())) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask s = 0;
        for (int i : idx) s |= Mask{1} << bits[i];
        f(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == static_cast<int>(bits.size()) - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

// Faces of dimension <= i.
inline SimplicialComplex skeleton(const SimplicialComplex& c, int i) {
    if (i < 0 || i > c.dim()) throw std::invalid_argument("skeleton: index out of range");
    std::vector<Mask> gens;
    for (Mask g : c.facets()) {
        if (popcount(g) <= i + 1) {
            gens.push_back(g);
        } else {
            detail::for_each_subset_of_size(g, i + 1, [&](Mask s) { gens.push_back(s); });
        }
    }
    return SimplicialComplex(c.vertices(), gens);
}

// Subcomplex generated by the faces of dimension exactly i.
inline SimplicialComplex pure_skeleton(const SimplicialComplex& c, int i) {
    if (i < -1 || i > c.dim()) throw std::invalid_argument("pure_skeleton: index out of range");
    std::vector<Mask> gens;
    for (Mask g : c.facets())
        if (popcount(g) >= i + 1)
            detail::for_each_subset_of_size(g, i + 1, [&](Mask s) { gens.push_back(s); });
    return SimplicialComplex(c.vertices(), gens);
}

// Restricts the vertex set to the support, so every remaining vertex is a
// face. This recovers the textbook notion of a complex "on" its vertex set.
inline SimplicialComplex normalize(const SimplicialComplex& c) {
    Mask supp = c.support();
    if (supp == 0 || supp == c.vertices().full()) return c;
    std::vector<int> old_bits = mask_bits(supp);
    std::vector<std::string> labels;
    for (int b : old_bits) labels.push_back(c.vertices().label(b));
    std::vector<Mask> facets;
    for (Mask g : c.facets()) {
        Mask m = 0;
        for (std::size_t i = 0; i < old_bits.size(); ++i)
            if (g & (Mask{1} << old_bits[i])) m |= Mask{1} << i;
        facets.push_back(m);
    }
    return SimplicialComplex(VertexSet(std::move(labels)), facets);
}

inline bool is_pure(const SimplicialComplex& c) {
    for (Mask f : c.facets())
        if (popcount(f) != popcount(c.facets().front())) return false;
    return true;
}

// Pure, and still pure of the same dimension after deleting any one vertex.
inline bool is_2_pure(const SimplicialComplex& c) {
    if (!c.is_proper() || !is_pure(c)) return false;
    const int d = c.dim();
    const Mask full = c.vertices().full();
    for (int x = 0; x < c.n(); ++x) {
        SimplicialComplex del = induced(c, full & ~(Mask{1} << x));
        if (!is_pure(del) || del.dim() != d) return false;
    }
    return true;
}

// Every induced subcomplex is pure. Exhaustive over subsets of the support.
inline bool is_matroid(const SimplicialComplex& c) {
    Mask supp = c.support();
    check_guard("matroid-check n", kSubsetScanCap, popcount(supp));
    bool ok = true;
    for_each_submask(supp, [&](Mask w) {
        if (!ok) return;
        if (!is_pure(induced(c, w))) ok = false;
    });
    return ok;
}

inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

// Diameter of the 1-skeleton on the support; kInfiniteDiameter when the
// support is disconnected.
inline int diameter(const SimplicialComplex& c) {
    std::vector<int> verts = mask_bits(c.support());
    const int m = static_cast<int>(verts.size());
    if (m == 0) return 0;
    std::unordered_map<int, int> pos;
    for (int i = 0; i < m; ++i) pos[verts[i]] = i;
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Mask e = (Mask{1} << verts[i]) | (Mask{1} << verts[j]);
            if (c.is_face(e)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    int diam = 0;
    for (int s = 0; s < m; ++s) {
        std::vector<int> dist(m, -1);
        dist[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
        }
        for (int v = 0; v < m; ++v) {
            if (dist[v] < 0) return kInfiniteDiameter;
            diam = std::max(diam, dist[v]);
        }
    }
    return diam;
}

struct StructuralFlags {
    bool is_pure = false;
    bool is_2_pure = false;
    int dim = -2;
    // free_vertex_map[i] = free vertices of facet i (vertices lying in no
    // other facet).
    std::vector<Mask> free_vertex_map;
    bool is_matroid = false;
    int diameter = 0;
};

inline StructuralFlags structural_flags(const SimplicialComplex& c) {
    if (!c.is_proper()) throw std::invalid_argument("structural_flags: degenerate complex");
    StructuralFlags out;
    out.is_pure = is_pure(c);
    out.is_2_pure = is_2_pure(c);
    out.dim = c.dim();
    out.free_vertex_map.reserve(c.facet_count());
    for (std::size_t i = 0; i < c.facet_count(); ++i) {
        Mask others = 0;
        for (std::size_t j = 0; j < c.facet_count(); ++j)
            if (j != i) others |= c.facets()[j];
        out.free_vertex_map.push_back(c.facets()[i] & ~others);
    }
    out.is_matroid = is_matroid(c);
    out.diameter = diameter(c);
    return out;
}

}  // namespace vnum

#endif
