// Command-line frontend: exact v-number computations for squarefree monomial
// ideals and simplicial complexes, family generators, and the theorem-check
// suite.
//
// Exit codes: 0 success, 1 parse/usage error, 2 size-guard refusal.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "vnum/families.hpp"
#include "vnum/io.hpp"
#include "vnum/suite.hpp"

namespace {

using namespace vnum;

struct Options {
    std::string input;
    unsigned p = 2;
    std::uint64_t seed = 1;
    int cap_n = 9;
    bool json = false;
    int ell = 1;
    int serre_r = 2;
    int trial_scale = 100;
    bool inject_off_by_one = false;
    std::string family;
    std::vector<int> params;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw io::parse_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Inputs are facet lists by default ("x1 x2 x3" per line); lines using
// monomial syntax ('*' or '^') are read as ideal generators instead.
SquarefreeIdeal load_ideal(const std::string& path) {
    const std::string text = read_input(path);
    if (text.find('*') != std::string::npos || text.find('^') != std::string::npos)
        return io::to_squarefree(io::parse_ideal_text(text));
    return stanley_reisner_ideal(io::parse_complex_text(text));
}

void emit(const io::Json& j, const std::string& text, bool json) {
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_dual(const Options& o) {
    auto ideal = load_ideal(o.input);
    auto dual = dual_ideal(ideal);
    auto dual_complex = complex_of_ideal(dual);
    io::Json j;
    j["dual_complex"] = io::complex_to_json(dual_complex);
    j["dual_ideal"] = io::ideal_to_json(to_monomial_ideal(dual));
    emit(j, io::complex_to_text(dual_complex), o.json);
    return 0;
}

int cmd_v(const Options& o) {
    auto ideal = load_ideal(o.input);
    auto rep = v_number(ideal);
    std::ostringstream out;
    out << "v: " << rep.v << "\n";
    for (const auto& w : rep.per_prime) {
        out << "  prime (";
        bool first = true;
        for (const auto& l : io::labels_of(ideal.vertices(), w.prime.support)) {
            if (!first) out << ", ";
            out << l;
            first = false;
        }
        out << "): value " << w.value << ", witness "
            << io::monomial_string(ideal.vertices(), w.monomial) << "\n";
    }
    emit(io::v_report_to_json(rep, ideal.vertices()), out.str(), o.json);
    return 0;
}

int cmd_betti(const Options& o) {
    auto ideal = load_ideal(o.input);
    auto b = hochster_betti(ideal, PrimeField(o.p));
    emit(io::betti_to_json(b), io::betti_to_text(b), o.json);
    return 0;
}

int cmd_depth(const Options& o) {
    auto ideal = load_ideal(o.input);
    auto pr = lc_profile(ideal, o.ell, PrimeField(o.p));
    std::ostringstream out;
    out << "depth: " << pr.depth << "\ndim: " << pr.dim << "\n";
    emit(io::lc_report_to_json(pr, ideal.vertices(), o.ell, static_cast<int>(o.p)), out.str(),
         o.json);
    return 0;
}

int cmd_serre(const Options& o) {
    auto ideal = load_ideal(o.input);
    const int sd = serre_depth(ideal, o.ell, o.serre_r, PrimeField(o.p));
    auto pr = lc_profile(ideal, o.ell, PrimeField(o.p));
    io::Json j = io::lc_report_to_json(pr, ideal.vertices(), o.ell, static_cast<int>(o.p));
    j["serre_r"] = o.serre_r;
    j["serre_depth"] = sd;
    std::ostringstream out;
    out << "serre-depth (r=" << o.serre_r << ", ell=" << o.ell << "): " << sd << "\n"
        << "dim: " << pr.dim << "\n";
    emit(j, out.str(), o.json);
    return 0;
}

int cmd_classify(const Options& o) {
    auto ideal = load_ideal(o.input);
    auto c = complex_of_ideal(ideal);
    auto cls = classify(c, PrimeField(o.p));
    io::Json j;
    j["char"] = o.p;
    j["pure"] = is_pure(c);
    j["two_pure"] = is_2_pure(c);
    j["matroid"] = is_matroid(c);
    j["cohen_macaulay"] = cls.is_cm;
    j["two_cohen_macaulay"] = cls.is_2cm;
    j["level"] = cls.is_level;
    j["gorenstein"] = cls.is_gorenstein;
    j["sequentially_cohen_macaulay"] = cls.is_seq_cm;
    std::ostringstream out;
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "char")
            out << it.key() << ": " << (it.value().get<bool>() ? "yes" : "no") << "\n";
    emit(j, out.str(), o.json);
    return 0;
}

int cmd_generate(const Options& o) {
    auto need = [&](std::size_t k, const std::string& what) {
        if (o.params.size() != k)
            throw CLI::ValidationError("generate", o.family + " needs --params " + what);
    };
    auto emit_complex = [&](const SimplicialComplex& c) {
        emit(io::complex_to_json(c), io::complex_to_text(c), o.json);
    };
    auto emit_graph = [&](const Graph& g) {
        emit(io::graph_to_json(g), io::graph_to_text(g), o.json);
    };
    if (o.family == "rp2") {
        emit_complex(families::rp2());
    } else if (o.family == "range") {
        need(3, "p,q,r");
        emit_complex(families::range_complex(o.params[0], o.params[1], o.params[2]));
    } else if (o.family == "bight-example") {
        need(2, "m,l");
        emit_complex(families::bight_example(o.params[0], o.params[1]));
    } else if (o.family == "example-8-4") {
        emit_complex(families::example_8_4());
    } else if (o.family == "example-5-12") {
        emit_graph(families::example_5_12_graph());
    } else if (o.family == "multi-whisker") {
        rnd::Rng rng(o.seed);
        emit_graph(rnd::random_multi_whisker(rng, 4, 3).graph);
    } else if (o.family == "vwc-expansion") {
        rnd::Rng rng(o.seed);
        emit_graph(rnd::random_expansion(rng, 4, 3).graph);
    } else {
        throw CLI::ValidationError("generate", "unknown family: " + o.family);
    }
    return 0;
}

int cmd_suite(const Options& o) {
    suite::Caps caps;
    caps.max_n = o.cap_n;
    caps.trial_scale = o.trial_scale;
    caps.inject_off_by_one = o.inject_off_by_one;
    int threads = 1;
    if (const char* env = std::getenv("VNUM_THREADS")) threads = std::max(1, std::atoi(env));
    auto results = suite::run_all(o.seed, caps, threads);
    if (o.json) {
        io::Json j;
        j["seed"] = o.seed;
        io::Json items = io::Json::array();
        for (const auto& r : results)
            items.push_back(io::Json{{"label", r.label},
                                     {"passed", r.passed},
                                     {"checked", r.checked},
                                     {"skipped", r.skipped},
                                     {"message", r.message}});
        j["items"] = items;
        j["passed"] = suite::all_passed(results);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.label << "  (checked "
                      << r.checked << ", skipped " << r.skipped << ")";
            if (!r.passed) std::cout << "  " << r.message;
            std::cout << "\n";
        }
    }
    return suite::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact v-numbers of squarefree monomial ideals"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input)
            sub->add_option("--input", o.input, "facet list or monomial file ('-' for stdin)")
                ->required();
        sub->add_option("--char", o.p, "field characteristic (prime)")->default_val(2);
        sub->add_flag("--json", o.json, "machine-readable output");
        return sub;
    };

    add_common(app.add_subcommand("dual", "Alexander dual of the input"), true);
    add_common(app.add_subcommand("v", "v-number report"), true);
    add_common(app.add_subcommand("betti", "graded Betti table of S/I"), true);
    auto* depth = add_common(app.add_subcommand("depth", "depth of S/I^(l)"), true);
    depth->add_option("--ell", o.ell, "symbolic power exponent")->default_val(1);
    auto* serre = add_common(app.add_subcommand("serre", "Serre-depth of S/I^(l)"), true);
    serre->add_option("--ell", o.ell, "symbolic power exponent")->default_val(2);
    serre->add_option("--r", o.serre_r, "Serre condition index (>= 2)")->default_val(2);
    add_common(app.add_subcommand("classify", "ring-theoretic classification"), true);

    auto* gen = add_common(app.add_subcommand("generate", "emit a named family instance"), false);
    gen->add_option("family", o.family,
                    "rp2 | range | bight-example | example-8-4 | example-5-12 | "
                    "multi-whisker | vwc-expansion")
        ->required();
    gen->add_option("--params", o.params, "family parameters, e.g. --params 4 3 2");
    gen->add_option("--seed", o.seed, "seed for the random families")->default_val(1);

    auto* st = add_common(app.add_subcommand("suite", "run the theorem-check suite"), false);
    st->add_option("--seed", o.seed, "suite seed")->default_val(1);
    st->add_option("--cap-n", o.cap_n, "vertex cap for random instances")->default_val(9);
    st->add_option("--trial-scale", o.trial_scale, "percent of default trial counts")
        ->default_val(100);
    st->add_flag("--inject-off-by-one", o.inject_off_by_one,
                 "sensitivity self-test: plant a bug; the suite must fail");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("dual")) return cmd_dual(o);
        if (app.got_subcommand("v")) return cmd_v(o);
        if (app.got_subcommand("betti")) return cmd_betti(o);
        if (app.got_subcommand("depth")) return cmd_depth(o);
        if (app.got_subcommand("serre")) return cmd_serre(o);
        if (app.got_subcommand("classify")) return cmd_classify(o);
        if (app.got_subcommand("generate")) return cmd_generate(o);
        if (app.got_subcommand("suite")) return cmd_suite(o);
    } catch (const guard_error& e) {
        std::cerr << "guard refusal: " << e.what() << "\n";
        return 2;
    } catch (const io::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
