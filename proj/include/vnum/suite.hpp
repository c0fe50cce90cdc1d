#ifndef VNUM_SUITE_HPP
#define VNUM_SUITE_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "vnum/families.hpp"
#include "vnum/graphs.hpp"
#include "vnum/homology.hpp"
#include "vnum/local_cohomology.hpp"
#include "vnum/random_gen.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {
namespace suite {

struct Caps {
    int max_n = 9;            // vertex cap for randomly drawn complexes
    int trial_scale = 100;    // percentage applied to the default trial counts
    bool inject_off_by_one = false;  // sensitivity mutation; the suite must fail
};

struct ItemResult {
    std::string label;
    bool passed = true;
    int checked = 0;  // instances verified
    int skipped = 0;  // degenerate instances skipped (logged, not failures)
    std::string message;  // first failure, empty when passed
};

class ItemCtx {
public:
    ItemCtx(std::uint64_t seed, const Caps& caps, std::string label) : rng_(seed), caps_(caps) {
        result_.label = std::move(label);
    }

    rnd::Rng& rng() { return rng_; }
    const Caps& caps() const { return caps_; }
    int trials(int base) const { return std::max(1, base * caps_.trial_scale / 100); }
    int cap_n(int want) const { return std::min(want, caps_.max_n); }
    // Mutation point for the sensitivity self-test: shifts every v-value
    // comparison by one, which must make the affected items fail.
    int adjust(int v) const { return v + (caps_.inject_off_by_one ? 1 : 0); }

    void check(bool cond, const std::string& msg) {
        if (cond)
            ++result_.checked;
        else
            fail(msg);
    }
    void skip() { ++result_.skipped; }
    void fail(const std::string& msg) {
        if (result_.passed) {
            result_.passed = false;
            result_.message = msg;
        }
    }
    const ItemResult& result() const { return result_; }

private:
    rnd::Rng rng_;
    Caps caps_;
    ItemResult result_;
};

struct Item {
    std::string label;
    std::function<void(ItemCtx&)> body;
};

namespace detail {

inline int random_n(ItemCtx& ctx, int lo, int hi) {
    hi = ctx.cap_n(hi);
    if (hi < lo) hi = lo;
    std::uniform_int_distribution<int> d(lo, hi);
    return d(ctx.rng());
}

inline void projective_plane_item(ItemCtx& ctx) {
    ctx.check(families::rp2_signature_ok(), "triangulation homology signature is wrong");
    auto c = families::rp2();
    auto i = stanley_reisner_ideal(c);
    ctx.check(v_number(i).v == 3, "v != 3");
    ctx.check(is_2_pure(c), "complex is not 2-pure");
    auto b2 = hochster_betti(i, PrimeField(2));
    auto b3 = hochster_betti(i, PrimeField(3));
    ctx.check(b2.reg == 3 && b2.depth == 2, "char-2 reg/depth wrong");
    ctx.check(b3.reg == 2 && b3.depth == 3, "char-3 reg/depth wrong");
}

inline void indeg_bound_item(ItemCtx& ctx) {
    for (int t = 0; t < ctx.trials(200); ++t) {
        auto c = rnd::random_proper_ideal_complex(ctx.rng(), random_n(ctx, 3, 8));
        auto i = stanley_reisner_ideal(c);
        ctx.check(v_number(i).v >= i.indeg() - 1, "v < indeg - 1");
    }
}

inline void dual_formula_item(ItemCtx& ctx) {
    for (int t = 0; t < ctx.trials(120); ++t) {
        auto c = rnd::random_proper_ideal_complex(ctx.rng(), random_n(ctx, 3, 8));
        auto i = stanley_reisner_ideal(c);
        auto dual = alexander_dual(c);
        for (const auto& p : associated_primes(i).primes) {
            int via_dual = v_p_dual_formula_with(c, dual, p);
            int via_colon = v_p_definitional(i, p).value;
            ctx.check(ctx.adjust(via_dual) == via_colon,
                      "dual facet formula disagrees with the colon search");
        }
    }
}

inline void pure_height2_item(ItemCtx& ctx) {
    for (int t = 0; t < ctx.trials(120); ++t) {
        auto c = rnd::random_pure_height2(ctx.rng(), random_n(ctx, 4, 9));
        auto i = stanley_reisner_ideal(c);
        if (!i.is_proper()) {
            ctx.skip();
            continue;
        }
        auto rep = v_number(i);
        for (auto p : {2u, 3u}) {
            auto b = hochster_betti(i, PrimeField(p));
            int law = -1;
            for (int j = 0; law < 0 && j <= b.n; ++j)
                if (b.beta(2, 2 + j) != 0) law = j;
            ctx.check(ctx.adjust(rep.v) == law, "v != first column-2 syzygy shift");
            ctx.check(rep.v <= b.reg, "v exceeds the regularity");
            if (rep.per_height.count(2) && rep.per_height.at(2) == rep.v)
                ctx.check(b.beta(2, 2 + rep.v) != 0, "attained height-2 value misses beta_2");
        }
    }
}

inline void height1_item(ItemCtx& ctx) {
    for (int t = 0; t < ctx.trials(150); ++t) {
        int n = random_n(ctx, 3, 8);
        auto base = rnd::random_squarefree_ideal(ctx.rng(), n);
        std::vector<Mask> gens;
        for (Mask g : base.generators()) gens.push_back(g | Mask{1});
        SquarefreeIdeal i(base.vertices(), gens);
        if (!i.is_proper() || associated_primes(i).ht != 1) {
            ctx.skip();
            continue;
        }
        auto b = hochster_betti(i, PrimeField(2));
        int law = -1;
        for (int j = 0; law < 0 && j <= b.n; ++j)
            if (b.beta(1, j) != 0) law = j;
        ctx.check(v_number(i).v == law - 1, "height-1 v != first syzygy degree - 1");
    }
}

inline void facet_count_item(ItemCtx& ctx) {
    for (int t = 0; t < ctx.trials(150); ++t) {
        auto c = rnd::random_proper_ideal_complex(ctx.rng(), random_n(ctx, 3, 8));
        for (Mask f : c.facets())
            ctx.check(v_p_exact_by_witness(c, f) <= c.facet_count() - 1,
                      "facet v exceeds the number of associated primes minus one");
    }
}

inline void two_pure_item(ItemCtx& ctx) {
    for (int t = 0; t < ctx.trials(150); ++t) {
        auto c = rnd::random_proper_ideal_complex(ctx.rng(), random_n(ctx, 3, 8));
        auto i = stanley_reisner_ideal(c);
        const int v = v_number(i).v;
        ctx.check((v == c.dim() + 1) == is_2_pure(c), "v = dim fails to match 2-purity");
        for (auto p : {2u, 3u}) {
            auto cls = classify(c, PrimeField(p));
            if (cls.is_2cm || cls.is_gorenstein || is_matroid(c))
                ctx.check(v == hochster_betti(i, PrimeField(p)).reg,
                          "distinguished class with v != reg");
        }
    }
}

inline void seq_cm_item(ItemCtx& ctx) {
    int fired = 0;
    for (int t = 0; t < ctx.trials(300) && fired < ctx.trials(40); ++t) {
        int n = random_n(ctx, 3, 8);
        auto gamma = independence_complex(rnd::random_graph(ctx.rng(), n, 0.5));
        auto gn = normalize(gamma);
        if (!gn.is_proper() || gn.facet_count() < 2) {
            ctx.skip();
            continue;
        }
        auto sizes_desc = [&] {
            std::vector<int> s;
            for (Mask f : gn.facets()) s.push_back(popcount(f));
            std::sort(s.rbegin(), s.rend());
            return s;
        }();
        for (auto p : {2u, 3u}) {
            if (!is_sequentially_cm(gn, PrimeField(p))) continue;
            ++fired;
            auto dual = dual_ideal(stanley_reisner_ideal(gn));
            ctx.check(v_number(dual).v == gn.n() - sizes_desc[1] - 1,
                      "flag sequentially-CM second-facet formula fails");
        }
    }
}

inline void multi_whisker_item(ItemCtx& ctx) {
    for (int t = 0; t < ctx.trials(60); ++t) {
        auto inst = rnd::random_multi_whisker(ctx.rng(), 4, 3);
        const int expected =
            inst.base.n() + *std::min_element(inst.counts.begin(), inst.counts.end()) - 2;
        ctx.check(v_cover_formula(inst.graph) == expected, "whisker cover formula wrong");
        ctx.check(v_number(cover_ideal(inst.graph)).v == expected,
                  "whisker cover oracle disagrees");
    }
}

inline void expansion_item(ItemCtx& ctx) {
    for (int t = 0; t < ctx.trials(60); ++t) {
        auto inst = rnd::random_expansion(ctx.rng(), 4, 3);
        if (inst.graph.edges().size() > 20) {
            ctx.skip();
            continue;
        }
        const int h = std::accumulate(inst.counts.begin(), inst.counts.end(), 0);
        ctx.check(cover_stats(inst.graph).is_very_well_covered, "expansion not very well-covered");
        ctx.check(inst.graph.n() == 2 * h, "expansion height mismatch");
        const int expected = h + *std::min_element(inst.counts.begin(), inst.counts.end()) - 2;
        ctx.check(v_number(cover_ideal(inst.graph)).v == expected,
                  "expansion cover formula wrong");
    }
}

inline void nerve_item(ItemCtx& ctx) {
    auto g = families::example_5_12_graph();
    ctx.check(c_line(g) == 2, "counterexample line-graph domination != 2");
    ctx.check(c_nerve(g) == 3, "counterexample nerve domination != 3");
    ctx.check(v_number(edge_ideal(g)).v == 3, "counterexample v != 3");
    for (int t = 0; t < ctx.trials(150); ++t) {
        auto r = rnd::random_graph_with_edges(ctx.rng(), random_n(ctx, 3, 7), 0.45);
        if (r.edges().size() > 12) {
            ctx.skip();
            continue;
        }
        auto cn = c_nerve(r);
        ctx.check(cn.has_value() && *cn == v_number(edge_ideal(r)).v,
                  "nerve domination != v of the edge ideal");
    }
}

inline void range_item(ItemCtx& ctx) {
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= p; ++q)
            for (int r = 1; r <= q; ++r) {
                auto c = families::range_complex(p, q, r);
                auto i = stanley_reisner_ideal(c);
                auto b = hochster_betti(i, PrimeField(2));
                ctx.check(b.reg + 1 == p + 1, "range complex: reg of the ideal != p+1");
                ctx.check(v_number(i).v == q, "range complex: v != q");
                ctx.check(i.indeg() == r + 1, "range complex: indeg != r+1");
            }
}

inline void bight_gap_item(ItemCtx& ctx) {
    for (auto [m, ell] : std::vector<std::pair<int, int>>{{4, 1}, {5, 2}}) {
        auto i = stanley_reisner_ideal(families::bight_example(m, ell));
        const int v = v_number(dual_ideal(i)).v;
        const int bight = associated_primes(i).bight;
        ctx.check(v == 3 * m - 2 * ell - 2, "gap example: dual v wrong");
        ctx.check(bight - 1 == 2 * m - ell - 1, "gap example: bight wrong");
        ctx.check(v > bight - 1, "gap example: v does not exceed bight - 1");
    }
    auto i84 = stanley_reisner_ideal(families::example_8_4());
    auto b84 = hochster_betti(i84, PrimeField(2));
    ctx.check(v_number(i84).v == 1, "small mixed example: v != 1");
    ctx.check(b84.dim - b84.depth == 2, "small mixed example: dim - depth != 2");
}

inline void symbolic_item(ItemCtx& ctx) {
    for (int t = 0; t < ctx.trials(40); ++t) {
        auto c = rnd::random_proper_ideal_complex(ctx.rng(), random_n(ctx, 3, 7));
        auto i = stanley_reisner_ideal(c);
        for (auto p : {2u, 3u})
            ctx.check(depth_symbolic(i, 1, PrimeField(p)) ==
                          hochster_betti(i, PrimeField(p)).depth,
                      "first symbolic power depth != resolution depth");
    }
    for (int t = 0; t < ctx.trials(60); ++t) {
        auto c = rnd::random_pure_height2(ctx.rng(), random_n(ctx, 4, 8));
        auto i = stanley_reisner_ideal(c);
        auto dual = dual_ideal(i);
        if (!dual.is_proper()) {
            ctx.skip();
            continue;
        }
        const int depth2 = depth_symbolic(dual, 2, PrimeField(2));
        auto rep = v_number(i);
        bool all_small = true;
        for (const auto& w : rep.per_prime) {
            ctx.check(w.value <= c.n() - depth2 - 1, "height-2 symbolic depth bound fails");
            all_small = all_small && w.value <= c.n() - 3;
        }
        ctx.check(all_small == (depth2 >= 2), "depth >= 2 criterion fails");
        if (is_unmixed(dual)) {
            auto pr = lc_profile(dual, 2, PrimeField(2));
            if (serre_depth(dual, 2, 2, PrimeField(2)) == pr.dim)
                for (const auto& w : rep.per_prime)
                    ctx.check(w.value == i.indeg() - 1, "S2 case: v_P != indeg - 1");
        }
    }
    for (int t = 0; t < ctx.trials(60); ++t) {
        int h = 2 + static_cast<int>(ctx.rng()() % 2);
        auto c = rnd::random_pure_height(ctx.rng(), h + 3 + static_cast<int>(ctx.rng()() % 2), h,
                                         2 + static_cast<int>(ctx.rng()() % 4));
        auto i = stanley_reisner_ideal(c);
        auto dual = dual_ideal(i);
        if (associated_primes(i).ht != h || !dual.is_proper() || !is_unmixed(dual)) {
            ctx.skip();
            continue;
        }
        const int sh = serre_depth(dual, 2, h, PrimeField(2));
        for (const auto& w : v_number(i).per_prime)
            ctx.check(w.value <= c.n() - sh - 1, "general-height Serre depth bound fails");
    }
}

inline void edge_ideal_item(ItemCtx& ctx) {
    for (int t = 0; t < ctx.trials(40); ++t) {
        auto inst = rnd::random_expansion(ctx.rng(), 4, 3);
        auto i = edge_ideal(inst.graph);
        const int v = v_number(i).v;
        for (auto p : {2u, 3u})
            ctx.check(v <= hochster_betti(i, PrimeField(p)).reg,
                      "very well-covered edge ideal: v > reg");
    }
    for (int t = 0; t < ctx.trials(40); ++t) {
        auto inst = rnd::random_multi_whisker(ctx.rng(), 4, 3);
        auto i = edge_ideal(inst.graph);
        auto b = hochster_betti(i, PrimeField(2));
        const int v = v_number(i).v;
        const int i_base = cover_stats(inst.base).independence_domination;
        const int i_full = cover_stats(inst.graph).independence_domination;
        ctx.check(v == i_base, "whisker edge ideal: v != base independence domination");
        ctx.check(i_base <= i_full && i_full == b.depth,
                  "whisker edge ideal: domination/depth chain fails");
        ctx.check(v <= b.reg, "whisker edge ideal: v > reg");
    }
}

inline void sensitivity_item(ItemCtx& ctx) {
    // Self-check: an off-by-one planted in the dual-formula comparison must
    // be caught. If no mismatch surfaces, the harness has lost its teeth.
    int mismatches = 0;
    for (int t = 0; t < ctx.trials(40); ++t) {
        auto c = rnd::random_proper_ideal_complex(ctx.rng(), random_n(ctx, 3, 7));
        auto i = stanley_reisner_ideal(c);
        auto dual = alexander_dual(c);
        for (const auto& p : associated_primes(i).primes)
            if (v_p_dual_formula_with(c, dual, p) + 1 != v_p_definitional(i, p).value)
                ++mismatches;
    }
    ctx.check(mismatches > 0, "planted off-by-one went undetected");
}

}  // namespace detail

inline std::vector<Item> all_items() {
    return {
        {"projective-plane-triangulation", detail::projective_plane_item},
        {"initial-degree-lower-bound", detail::indeg_bound_item},
        {"dual-formula-vs-colon-search", detail::dual_formula_item},
        {"pure-height2-syzygy-law", detail::pure_height2_item},
        {"height-one-syzygy-law", detail::height1_item},
        {"facet-count-bound", detail::facet_count_item},
        {"two-pure-dimension-law", detail::two_pure_item},
        {"sequentially-cm-flag-duals", detail::seq_cm_item},
        {"multi-whisker-cover-formula", detail::multi_whisker_item},
        {"very-well-covered-expansions", detail::expansion_item},
        {"nerve-domination-number", detail::nerve_item},
        {"range-construction", detail::range_item},
        {"bight-gap-examples", detail::bight_gap_item},
        {"symbolic-power-depth-bounds", detail::symbolic_item},
        {"edge-ideal-regularity-bounds", detail::edge_ideal_item},
        {"off-by-one-sensitivity", detail::sensitivity_item},
    };
}

// Stable per-item seed: mixing the label keeps each item deterministic no
// matter how the pool schedules the work.
inline std::uint64_t item_seed(std::uint64_t seed, const std::string& label) {
    std::uint64_t h = 1469598103934665603ULL ^ (seed * 0x9e3779b97f4a7c15ULL);
    for (unsigned char ch : label) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

using Listener = std::function<void(const ItemResult&)>;

inline std::vector<ItemResult> run_all(std::uint64_t seed, const Caps& caps, int threads = 1,
                                       const Listener& listener = {}) {
    auto items = all_items();
    std::vector<ItemResult> results(items.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    auto worker = [&] {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= items.size()) break;
            ItemCtx ctx(item_seed(seed, items[idx].label), caps, items[idx].label);
            try {
                items[idx].body(ctx);
            } catch (const std::exception& e) {
                ctx.fail(std::string("exception: ") + e.what());
            }
            results[idx] = ctx.result();
            if (listener) {
                std::lock_guard<std::mutex> lock(mu);
                listener(results[idx]);
            }
        }
    };
    const int extra = std::max(1, threads) - 1;
    std::vector<std::thread> pool;
    for (int t = 0; t < extra; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return results;
}

inline bool all_passed(const std::vector<ItemResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const ItemResult& r) { return r.passed; });
}

}  // namespace suite
}  // namespace vnum

#endif
