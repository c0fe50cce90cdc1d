#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "vnum/families.hpp"
#include "vnum/io.hpp"
#include "vnum/random_gen.hpp"

using namespace vnum;
using tests::cx;
using tests::ideal;
using tests::m;
using tests::path4;

TEST_CASE("complex text round trip") {
    auto c = path4();
    REQUIRE(io::parse_complex_text(io::complex_to_text(c)) == c);

    auto parsed = io::parse_complex_text("a b\nb c  # a comment\n");
    REQUIRE(parsed.n() == 3);
    REQUIRE(parsed.vertices().labels() == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(parsed.facets() == std::vector<Mask>{m({1, 2}), m({2, 3})});

    auto with_directive = io::parse_complex_text("vertices: x1 x2 x3 x4\nx1 x2\n");
    REQUIRE(with_directive.n() == 4);
    REQUIRE(with_directive.facets() == std::vector<Mask>{m({1, 2})});

    rnd::Rng rng(401);
    for (int t = 0; t < 100; ++t) {
        auto rc = rnd::random_proper_complex(rng, 3 + static_cast<int>(rng() % 6));
        REQUIRE(io::parse_complex_text(io::complex_to_text(rc)) == rc);
        REQUIRE(io::parse_complex_json(io::complex_to_json(rc)) == rc);
    }
}

TEST_CASE("complex parse errors carry line numbers") {
    try {
        io::parse_complex_text("vertices: x1 x2\nx1 x2\nx1 x9\n");
        FAIL("expected parse_error");
    } catch (const io::parse_error& e) {
        REQUIRE(std::string(e.what()) == "line 3: unknown vertex label: x9");
    }
    REQUIRE_THROWS_AS(io::parse_complex_text("# only comments\n"), io::parse_error);
}

TEST_CASE("ideal text and json round trips") {
    auto i = ideal(4, {m({1, 3}), m({2, 4})});
    auto mi = to_monomial_ideal(i);
    REQUIRE(io::to_squarefree(io::parse_ideal_text(io::ideal_to_text(i))) == i);
    REQUIRE(io::parse_ideal_json(io::ideal_to_json(mi)) == mi);

    auto parsed = io::parse_ideal_text("x1*x2^2\nx3\n");
    REQUIRE(parsed.generators() == std::vector<Exps>{{0, 0, 1}, {1, 2, 0}});
    REQUIRE_THROWS_AS(io::to_squarefree(parsed), io::parse_error);

    try {
        io::parse_ideal_text("x1*x2\nx1^0\n");
        FAIL("expected parse_error");
    } catch (const io::parse_error& e) {
        REQUIRE(std::string(e.what()).find("line 2") == 0);
    }

    rnd::Rng rng(409);
    for (int t = 0; t < 100; ++t) {
        auto ri = rnd::random_squarefree_ideal(rng, 3 + static_cast<int>(rng() % 6));
        auto sp = symbolic_power(ri, 2);
        REQUIRE(io::parse_ideal_text(io::ideal_to_text(sp)) == sp);
        REQUIRE(io::parse_ideal_json(io::ideal_to_json(sp)) == sp);
    }
}

TEST_CASE("graph text and json round trips") {
    auto g = families::example_5_12_graph();
    auto back = io::parse_graph_text(io::graph_to_text(g));
    REQUIRE(back.vertices() == g.vertices());
    REQUIRE(back.edges() == g.edges());
    auto back_json = io::parse_graph_json(io::graph_to_json(g));
    REQUIRE(back_json.edges() == g.edges());

    try {
        io::parse_graph_text("a b\nc\n");
        FAIL("expected parse_error");
    } catch (const io::parse_error& e) {
        REQUIRE(std::string(e.what()) == "line 2: expected one edge 'u v' per line");
    }
    REQUIRE_THROWS_AS(io::parse_graph_text("a a\n"), io::parse_error);
}

TEST_CASE("betti grid golden output") {
    auto b = hochster_betti(ideal(2, {m({1, 2})}), PrimeField(2));
    REQUIRE(io::betti_to_text(b) ==
            "        0  1\n"
            "total:  1  1\n"
            "    0:  1  .\n"
            "    1:  .  1\n"
            "reg: 1\npd: 1\ndepth: 1\ndim: 1\n");

    auto b3 = hochster_betti(stanley_reisner_ideal(families::rp2()), PrimeField(3));
    auto j = io::betti_to_json(b3);
    REQUIRE(j["char"] == 3);
    REQUIRE(j["n"] == 6);
    REQUIRE(j["dim"] == 3);
    REQUIRE(j["reg"] == b3.reg);
    REQUIRE(j["pd"] == b3.pd);
    for (const auto& e : j["entries"]) REQUIRE(e["beta"].get<int>() > 0);
}

TEST_CASE("v-report json shape") {
    auto i = ideal(4, {m({1, 4}), m({2, 4}), m({3, 4})});
    auto rep = v_number(i);
    auto j = io::v_report_to_json(rep, i.vertices());
    REQUIRE(j["v"] == 1);
    REQUIRE(j["per_prime"].size() == 2);
    REQUIRE(j["per_height"]["1"] == 1);
    REQUIRE(j["per_height"]["2"] == "inf");
    REQUIRE(j["per_height"]["3"] == 1);
    REQUIRE(j["best"]["value"] == 1);
    // the recorded witness actually colons down to the reported prime
    for (const auto& w : rep.per_prime) REQUIRE(equals_prime(i, w.monomial, w.prime));
}

TEST_CASE("lc-report json shape") {
    auto c = cx(4, {m({1, 2}), m({3, 4})});
    auto i = stanley_reisner_ideal(c);
    auto pr = lc_profile(i, 1, PrimeField(2));
    auto j = io::lc_report_to_json(pr, i.vertices(), 1, 2);
    REQUIRE(j["ell"] == 1);
    REQUIRE(j["char"] == 2);
    REQUIRE(j["depth"] == 1);
    REQUIRE(j["dim"] == 2);
    REQUIRE(j["canonical_dim"][0] == "-inf");
    REQUIRE(j["canonical_dim"][1] == 0);
    REQUIRE(j["canonical_dim"][2] == 2);
    REQUIRE(j["pieces"].contains("1"));
    REQUIRE(j["pieces"].contains("2"));
    for (const auto& piece : j["pieces"]["1"]) REQUIRE(piece["dim"].get<int>() >= 1);
}

TEST_CASE("serialization is byte-deterministic") {
    rnd::Rng rng(419);
    for (int t = 0; t < 50; ++t) {
        auto c = rnd::random_proper_ideal_complex(rng, 3 + static_cast<int>(rng() % 6));
        REQUIRE(io::complex_to_text(c) == io::complex_to_text(c));
        REQUIRE(io::complex_to_json(c).dump() == io::complex_to_json(c).dump());
        auto i = stanley_reisner_ideal(c);
        auto rep1 = io::v_report_to_json(v_number(i), i.vertices()).dump();
        auto rep2 = io::v_report_to_json(v_number(i), i.vertices()).dump();
        REQUIRE(rep1 == rep2);
    }
}
