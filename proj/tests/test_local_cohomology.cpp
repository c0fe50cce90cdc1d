#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "vnum/families.hpp"
#include "vnum/homology.hpp"
#include "vnum/local_cohomology.hpp"
#include "vnum/random_gen.hpp"
#include "vnum/vnumber.hpp"

using namespace vnum;
using tests::cx;
using tests::ideal;
using tests::m;

TEST_CASE("degree complexes of a principal ideal") {
    MonomialIdeal i(VertexSet::standard(2), {{1, 1}});
    REQUIRE(degree_complex(i, {1, 1}).is_void());
    REQUIRE(degree_complex(i, {-1, 0}) == irrelevant_complex(VertexSet::standard(2)));
}

TEST_CASE("degree complex at degree zero recovers the complex") {
    rnd::Rng rng(307);
    for (int t = 0; t < 200; ++t) {
        auto c = rnd::random_proper_ideal_complex(rng, 3 + static_cast<int>(rng() % 6));
        auto i = to_monomial_ideal(stanley_reisner_ideal(c));
        REQUIRE(degree_complex(i, Exps(c.n(), 0)) == c);
    }
}

TEST_CASE("local cohomology piece of S/(x1x2)") {
    MonomialIdeal i(VertexSet::standard(2), {{1, 1}});
    REQUIRE(local_cohomology_piece(i, 1, {-1, 0}, PrimeField(2)) == 1);
    REQUIRE(local_cohomology_piece(i, 1, {0, -1}, PrimeField(2)) == 1);
    REQUIRE(local_cohomology_piece(i, 1, {1, 0}, PrimeField(2)) == 0);
}

TEST_CASE("capping soundness of degree complexes") {
    rnd::Rng rng(311);
    for (int t = 0; t < 150; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        auto i = rnd::random_squarefree_ideal(rng, n);
        for (int ell = 1; ell <= 2; ++ell) {
            auto ip = symbolic_power(i, ell);
            Exps a(n, 0), capped(n, 0);
            for (int v = 0; v < n; ++v) {
                int e = static_cast<int>(rng() % (3 * ell + 2)) - 1;  // -1 .. 3l
                a[v] = e;
                capped[v] = std::min(e, ell);
            }
            if (!complex_of_ideal(i).is_face(supp_minus(a))) continue;
            REQUIRE(degree_complex(ip, a) == degree_complex(ip, capped));
        }
    }
}

TEST_CASE("depth at l = 1 matches the Hochster depth") {
    rnd::Rng rng(313);
    for (int t = 0; t < 300; ++t) {
        auto c = rnd::random_proper_ideal_complex(rng, 3 + static_cast<int>(rng() % 5));
        auto i = stanley_reisner_ideal(c);
        for (auto p : {2u, 3u}) {
            auto b = hochster_betti(i, PrimeField(p));
            REQUIRE(depth_symbolic(i, 1, PrimeField(p)) == b.depth);
        }
    }
}

TEST_CASE("second symbolic power of the P3 cover ideal stays Cohen-Macaulay") {
    auto j = ideal(3, {m({2}), m({1, 3})});  // covers of the path on three vertices
    auto pr = lc_profile(j, 2, PrimeField(2));
    REQUIRE(pr.dim == 1);
    REQUIRE(pr.depth == 1);
    REQUIRE(serre_depth(j, 2, 2, PrimeField(2)) == 1);
}

TEST_CASE("projective-plane triangulation depth by characteristic") {
    auto i = stanley_reisner_ideal(families::rp2());
    REQUIRE(depth_symbolic(i, 1, PrimeField(2)) == 2);
    REQUIRE(depth_symbolic(i, 1, PrimeField(3)) == 3);
}

TEST_CASE("canonical module dimensions") {
    // two disjoint edges: H^1 is finite length, so dim K^1 = 0
    auto c = cx(4, {m({1, 2}), m({3, 4})});
    auto i = stanley_reisner_ideal(c);
    REQUIRE(canonical_dim(i, 1, 1, PrimeField(2)) == 0);
    REQUIRE(canonical_dim(i, 1, 2, PrimeField(2)) == 2);  // top: dim K^dim = dim

    rnd::Rng rng(317);
    for (int t = 0; t < 120; ++t) {
        auto cc = rnd::random_proper_ideal_complex(rng, 3 + static_cast<int>(rng() % 5));
        auto ii = stanley_reisner_ideal(cc);
        auto pr = lc_profile(ii, 1, PrimeField(2));
        REQUIRE(pr.canonical_dim[pr.dim] == pr.dim);
        // below the depth every K^i vanishes
        for (int idx = 0; idx < pr.depth; ++idx)
            REQUIRE(pr.canonical_dim[idx] == kDimNegInfinity);
    }
}

TEST_CASE("pole-order reading agrees with the link formula at l = 1") {
    rnd::Rng rng(331);
    for (int t = 0; t < 150; ++t) {
        auto c = rnd::random_proper_ideal_complex(rng, 3 + static_cast<int>(rng() % 5));
        auto i = stanley_reisner_ideal(c);
        for (auto p : {2u, 3u}) {
            auto pr = lc_profile(i, 1, PrimeField(p));
            for (int idx = 0; idx <= i.n(); ++idx)
                REQUIRE(pr.canonical_dim[idx] == canonical_dim_via_links(c, idx, PrimeField(p)));
        }
    }
}

TEST_CASE("link consistency of the symbolic-power pieces") {
    // The graded piece at a signed degree (-1 on a face F, a >= 0 off F)
    // coincides with the homology of the degree complex of the symbolic
    // power of the link's ideal, evaluated at the restricted degree.
    rnd::Rng rng(337);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        auto c = rnd::random_proper_ideal_complex(rng, n);
        auto i = stanley_reisner_ideal(c);
        const int ell = 1 + static_cast<int>(rng() % 2);
        auto ip = symbolic_power(i, ell);

        // random face F and positive part supported off F
        auto faces = c.faces_by_size();
        const auto& level = faces[rng() % faces.size()];
        if (level.empty()) continue;
        Mask f = level[rng() % level.size()];
        auto lk = normalize(link(c, f));
        if (!lk.is_proper() || lk.facets() == std::vector<Mask>{lk.vertices().full()}) continue;

        Exps a(n, 0);
        for (int v = 0; v < n; ++v)
            if (f & (Mask{1} << v))
                a[v] = -1;
            else
                a[v] = static_cast<int>(rng() % (ell + 1));
        // restrict the positive part to the link's vertex set; entries on
        // vertices outside the link are irrelevant only if zero, so force
        // them to zero
        Exps a_link(lk.n(), 0);
        for (int w = 0; w < lk.n(); ++w)
            a_link[w] = a[c.vertices().index_of(lk.vertices().label(w))];
        for (int v = 0; v < n; ++v)
            if (a[v] > 0 && !lk.vertices().has_label(c.vertices().label(v))) a[v] = 0;

        auto link_power = symbolic_power(stanley_reisner_ideal(lk), ell);
        auto dc_link = degree_complex(link_power, a_link);
        const int fsize = popcount(f);
        for (int idx = fsize - 1; idx <= n; ++idx) {
            int lhs = local_cohomology_piece(ip, idx, a, PrimeField(2));
            int rhs = homology_dim(dc_link, idx - fsize - 1, PrimeField(2));
            REQUIRE(lhs == rhs);
        }
        ++checked;
    }
    REQUIRE(checked > 40);
}

TEST_CASE("serre depth of Cohen-Macaulay quotients equals the dimension") {
    rnd::Rng rng(347);
    int seen = 0;
    for (int t = 0; t < 200; ++t) {
        auto c = rnd::random_proper_ideal_complex(rng, 3 + static_cast<int>(rng() % 5));
        auto i = stanley_reisner_ideal(c);
        if (!is_unmixed(i) || !is_cohen_macaulay(c, PrimeField(2))) continue;
        ++seen;
        auto pr = lc_profile(i, 1, PrimeField(2));
        for (int r = 2; r <= 3; ++r) REQUIRE(serre_depth(i, 1, r, PrimeField(2)) == pr.dim);
    }
    REQUIRE(seen > 20);
    REQUIRE_THROWS_AS(serre_depth(ideal(4, {m({1, 4}), m({2, 4}), m({3, 4})}), 1, 2, PrimeField(2)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(serre_depth(ideal(3, {m({1, 2})}), 1, 1, PrimeField(2)),
                      std::invalid_argument);
}

TEST_CASE("height-2 depth bound for v_P") {
    // pure height-2: every v_P(I_Delta) <= n - depth S/I_{Delta*}^{(2)} - 1,
    // and the depth >= 2 criterion is equivalent to v_P <= n - 3 for all P
    rnd::Rng rng(349);
    int fired = 0;
    for (int t = 0; t < 150; ++t) {
        int n = 4 + static_cast<int>(rng() % 5);  // n <= 8
        auto c = rnd::random_pure_height2(rng, n);
        auto i = stanley_reisner_ideal(c);
        auto dual = dual_ideal(i);
        if (!dual.is_proper()) continue;
        ++fired;
        const int depth2 = depth_symbolic(dual, 2, PrimeField(2));
        auto rep = v_number(i);
        bool all_small = true;
        for (const auto& w : rep.per_prime) {
            REQUIRE(w.value <= c.n() - depth2 - 1);
            all_small = all_small && w.value <= c.n() - 3;
        }
        REQUIRE(all_small == (depth2 >= 2));
    }
    REQUIRE(fired > 100);
}

TEST_CASE("serre condition S2 pins v_P at indeg minus one") {
    rnd::Rng rng(353);
    int fired = 0;
    for (int t = 0; t < 700; ++t) {
        int n = 4 + static_cast<int>(rng() % 5);
        auto c = rnd::random_pure_height2(rng, n);
        auto i = stanley_reisner_ideal(c);
        auto dual = dual_ideal(i);
        if (!dual.is_proper() || !is_unmixed(dual)) continue;
        auto pr = lc_profile(dual, 2, PrimeField(2));
        if (serre_depth(dual, 2, 2, PrimeField(2)) != pr.dim) continue;  // needs (S_2)
        ++fired;
        for (const auto& w : v_number(i).per_prime) REQUIRE(w.value == i.indeg() - 1);
    }
    REQUIRE(fired > 10);
}

TEST_CASE("serre depth bound in arbitrary height") {
    rnd::Rng rng(359);
    int fired = 0;
    for (int t = 0; t < 250; ++t) {
        int h = 2 + static_cast<int>(rng() % 2);  // height 2 or 3
        int n = h + 3 + static_cast<int>(rng() % 3);
        auto c = rnd::random_pure_height(rng, n, h, 2 + static_cast<int>(rng() % 4));
        auto i = stanley_reisner_ideal(c);
        if (associated_primes(i).ht != h) continue;
        auto dual = dual_ideal(i);
        if (!dual.is_proper() || !is_unmixed(dual)) continue;
        ++fired;
        const int sh = serre_depth(dual, 2, h, PrimeField(2));
        for (const auto& w : v_number(i).per_prime) REQUIRE(w.value <= c.n() - sh - 1);
    }
    REQUIRE(fired > 30);
}
