#ifndef VNUM_TESTS_HELPERS_HPP
#define VNUM_TESTS_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "vnum/complex.hpp"
#include "vnum/ideals.hpp"

namespace tests {

using vnum::Mask;

// Mask from 1-based vertex numbers.
inline Mask m(std::initializer_list<int> verts) {
    Mask out = 0;
    for (int v : verts) out |= Mask{1} << (v - 1);
    return out;
}

inline vnum::SimplicialComplex cx(int n, std::initializer_list<Mask> facets) {
    return vnum::SimplicialComplex(vnum::VertexSet::standard(n), std::vector<Mask>(facets));
}

inline vnum::SquarefreeIdeal ideal(int n, std::initializer_list<Mask> gens) {
    return vnum::SquarefreeIdeal(vnum::VertexSet::standard(n), std::vector<Mask>(gens));
}

// The path complex on 4 vertices: <12, 23, 34>.
inline vnum::SimplicialComplex path4() {
    return cx(4, {m({1, 2}), m({2, 3}), m({3, 4})});
}

}  // namespace tests

#endif
