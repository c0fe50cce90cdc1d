#ifndef VNUM_IO_HPP
#define VNUM_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vnum/complex.hpp"
#include "vnum/graphs.hpp"
#include "vnum/homology.hpp"
#include "vnum/ideals.hpp"
#include "vnum/local_cohomology.hpp"
#include "vnum/vnumber.hpp"

namespace vnum {
namespace io {

using Json = nlohmann::ordered_json;

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what) {}
};

namespace detail {

// Lines with '#' comments stripped; each entry keeps its 1-based line number.
inline std::vector<std::pair<int, std::vector<std::string>>> tokenized_lines(const std::string& text) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back({no, std::move(toks)});
    }
    return out;
}

// Vertex set from an optional leading "vertices:" directive, else labels in
// order of first appearance.
inline VertexSet vertex_set_of(const std::vector<std::pair<int, std::vector<std::string>>>& lines,
                               const std::vector<std::string>& appearance_order) {
    if (!lines.empty() && lines.front().second.front() == "vertices:") {
        std::vector<std::string> labels(lines.front().second.begin() + 1,
                                        lines.front().second.end());
        if (labels.empty()) throw parse_error("empty vertices: directive", lines.front().first);
        return VertexSet(std::move(labels));
    }
    if (appearance_order.empty()) throw parse_error("no vertices found in input");
    return VertexSet(appearance_order);
}

inline bool has_directive(const std::vector<std::pair<int, std::vector<std::string>>>& lines) {
    return !lines.empty() && lines.front().second.front() == "vertices:";
}

}  // namespace detail

// --- facet-list text: one facet per line, whitespace-separated labels ---

inline SimplicialComplex parse_complex_text(const std::string& text) {
    auto lines = detail::tokenized_lines(text);
    std::vector<std::string> order;
    std::size_t first = detail::has_directive(lines) ? 1 : 0;
    for (std::size_t i = first; i < lines.size(); ++i)
        for (const auto& t : lines[i].second) {
            if (std::find(order.begin(), order.end(), t) == order.end()) order.push_back(t);
        }
    VertexSet vs = detail::vertex_set_of(lines, order);
    std::vector<Mask> facets;
    for (std::size_t i = first; i < lines.size(); ++i) {
        Mask f = 0;
        for (const auto& t : lines[i].second) {
            if (!vs.has_label(t)) throw parse_error("unknown vertex label: " + t, lines[i].first);
            f |= Mask{1} << vs.index_of(t);
        }
        facets.push_back(f);
    }
    if (facets.empty()) throw parse_error("no facets found in input");
    return SimplicialComplex(std::move(vs), facets);
}

inline std::string complex_to_text(const SimplicialComplex& c) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& l : c.vertices().labels()) out << " " << l;
    out << "\n";
    for (Mask f : c.facets()) {
        bool first = true;
        for (int b : mask_bits(f)) {
            out << (first ? "" : " ") << c.vertices().label(b);
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

inline Json complex_to_json(const SimplicialComplex& c) {
    Json j;
    j["vertices"] = c.vertices().labels();
    Json facets = Json::array();
    for (Mask f : c.facets()) {
        Json one = Json::array();
        for (int b : mask_bits(f)) one.push_back(c.vertices().label(b));
        facets.push_back(one);
    }
    j["facets"] = facets;
    return j;
}

inline SimplicialComplex parse_complex_json(const Json& j) {
    if (!j.contains("vertices") || !j.contains("facets"))
        throw parse_error("complex JSON needs \"vertices\" and \"facets\"");
    VertexSet vs(j.at("vertices").get<std::vector<std::string>>());
    std::vector<Mask> facets;
    for (const auto& one : j.at("facets")) {
        Mask f = 0;
        for (const auto& t : one) f |= Mask{1} << vs.index_of(t.get<std::string>());
        facets.push_back(f);
    }
    return SimplicialComplex(std::move(vs), facets);
}

// --- ideal text: one generator per line, x1*x3 or x1^2*x3^2 ---

namespace detail {

// "x3" or "x3^2" -> (label, exponent)
inline std::pair<std::string, int> parse_power(const std::string& tok, int line) {
    auto caret = tok.find('^');
    if (caret == std::string::npos) return {tok, 1};
    std::string label = tok.substr(0, caret);
    std::string exp = tok.substr(caret + 1);
    if (label.empty() || exp.empty()) throw parse_error("malformed power: " + tok, line);
    int e = 0;
    try {
        std::size_t pos = 0;
        e = std::stoi(exp, &pos);
        if (pos != exp.size()) throw std::invalid_argument(exp);
    } catch (const std::exception&) {
        throw parse_error("malformed exponent in: " + tok, line);
    }
    if (e < 1) throw parse_error("exponent must be >= 1 in: " + tok, line);
    return {label, e};
}

inline std::vector<std::string> split_star(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find('*', start);
        out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace detail

inline MonomialIdeal parse_ideal_text(const std::string& text) {
    auto lines = detail::tokenized_lines(text);
    std::size_t first = detail::has_directive(lines) ? 1 : 0;
    // Each generator line is a single token like x1*x3^2.
    std::vector<std::pair<int, std::vector<std::pair<std::string, int>>>> gens;
    std::vector<std::string> order;
    for (std::size_t i = first; i < lines.size(); ++i) {
        if (lines[i].second.size() != 1)
            throw parse_error("expected one monomial per line", lines[i].first);
        std::vector<std::pair<std::string, int>> powers;
        for (const auto& tok : detail::split_star(lines[i].second[0])) {
            if (tok.empty()) throw parse_error("malformed monomial", lines[i].first);
            powers.push_back(detail::parse_power(tok, lines[i].first));
            if (std::find(order.begin(), order.end(), powers.back().first) == order.end())
                order.push_back(powers.back().first);
        }
        gens.push_back({lines[i].first, std::move(powers)});
    }
    VertexSet vs = detail::vertex_set_of(lines, order);
    std::vector<Exps> exps;
    for (const auto& [line, powers] : gens) {
        Exps e(vs.size(), 0);
        for (const auto& [label, p] : powers) {
            if (!vs.has_label(label)) throw parse_error("unknown variable: " + label, line);
            e[vs.index_of(label)] += p;
        }
        exps.push_back(std::move(e));
    }
    if (exps.empty()) throw parse_error("no generators found in input");
    return MonomialIdeal(std::move(vs), std::move(exps));
}

inline SquarefreeIdeal to_squarefree(const MonomialIdeal& ideal) {
    std::vector<Mask> gens;
    for (const Exps& g : ideal.generators()) {
        Mask m = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] > 1) throw parse_error("ideal is not squarefree");
            if (g[i] == 1) m |= Mask{1} << i;
        }
        gens.push_back(m);
    }
    return SquarefreeIdeal(ideal.vertices(), gens);
}

inline std::string monomial_string(const VertexSet& vs, const Exps& e) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) out << "*";
        out << vs.label(static_cast<int>(i));
        if (e[i] > 1) out << "^" << e[i];
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

inline std::string monomial_string(const VertexSet& vs, Mask m) {
    Exps e(vs.size(), 0);
    for (int b : mask_bits(m)) e[b] = 1;
    return monomial_string(vs, e);
}

inline std::string ideal_to_text(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& l : ideal.vertices().labels()) out << " " << l;
    out << "\n";
    for (const Exps& g : ideal.generators()) out << monomial_string(ideal.vertices(), g) << "\n";
    return out.str();
}

inline std::string ideal_to_text(const SquarefreeIdeal& ideal) {
    return ideal_to_text(to_monomial_ideal(ideal));
}

inline Json ideal_to_json(const MonomialIdeal& ideal) {
    Json j;
    j["vertices"] = ideal.vertices().labels();
    Json gens = Json::array();
    for (const Exps& g : ideal.generators()) gens.push_back(g);
    j["generators"] = gens;
    return j;
}

inline MonomialIdeal parse_ideal_json(const Json& j) {
    if (!j.contains("vertices") || !j.contains("generators"))
        throw parse_error("ideal JSON needs \"vertices\" and \"generators\"");
    VertexSet vs(j.at("vertices").get<std::vector<std::string>>());
    std::vector<Exps> gens;
    for (const auto& g : j.at("generators")) {
        Exps e = g.get<Exps>();
        if (static_cast<int>(e.size()) != vs.size())
            throw parse_error("generator exponent vector has wrong length");
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(std::move(vs), std::move(gens));
}

// --- edge-list text: one edge per line, "u v" ---

inline Graph parse_graph_text(const std::string& text) {
    auto lines = detail::tokenized_lines(text);
    std::size_t first = detail::has_directive(lines) ? 1 : 0;
    std::vector<std::string> order;
    for (std::size_t i = first; i < lines.size(); ++i)
        for (const auto& t : lines[i].second)
            if (std::find(order.begin(), order.end(), t) == order.end()) order.push_back(t);
    VertexSet vs = detail::vertex_set_of(lines, order);
    std::vector<Mask> edges;
    for (std::size_t i = first; i < lines.size(); ++i) {
        if (lines[i].second.size() != 2)
            throw parse_error("expected one edge 'u v' per line", lines[i].first);
        Mask e = 0;
        for (const auto& t : lines[i].second) {
            if (!vs.has_label(t)) throw parse_error("unknown vertex label: " + t, lines[i].first);
            e |= Mask{1} << vs.index_of(t);
        }
        if (popcount(e) != 2) throw parse_error("edge endpoints must differ", lines[i].first);
        edges.push_back(e);
    }
    return Graph(std::move(vs), std::move(edges));
}

inline std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& l : g.vertices().labels()) out << " " << l;
    out << "\n";
    for (Mask e : g.edges()) {
        auto bits = mask_bits(e);
        out << g.vertices().label(bits[0]) << " " << g.vertices().label(bits[1]) << "\n";
    }
    return out.str();
}

inline Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertices().labels();
    Json edges = Json::array();
    for (Mask e : g.edges()) {
        auto bits = mask_bits(e);
        edges.push_back(Json::array({g.vertices().label(bits[0]), g.vertices().label(bits[1])}));
    }
    j["edges"] = edges;
    return j;
}

inline Graph parse_graph_json(const Json& j) {
    if (!j.contains("vertices") || !j.contains("edges"))
        throw parse_error("graph JSON needs \"vertices\" and \"edges\"");
    VertexSet vs(j.at("vertices").get<std::vector<std::string>>());
    std::vector<Mask> edges;
    for (const auto& one : j.at("edges")) {
        Mask e = 0;
        for (const auto& t : one) e |= Mask{1} << vs.index_of(t.get<std::string>());
        if (popcount(e) != 2) throw parse_error("edge must join two distinct vertices");
        edges.push_back(e);
    }
    return Graph(std::move(vs), std::move(edges));
}

// --- Betti tables ---

// Macaulay-style grid: column i, row j - i; "." marks zero entries.
inline std::string betti_to_text(const BettiTable& b) {
    int max_row = 0;
    for (const auto& [ij, v] : b.entries)
        if (v != 0) max_row = std::max(max_row, ij.second - ij.first);
    std::vector<int> totals(b.pd + 1, 0);
    for (const auto& [ij, v] : b.entries)
        if (ij.first <= b.pd) totals[ij.first] += v;

    std::vector<std::vector<std::string>> cells(max_row + 2, std::vector<std::string>(b.pd + 2));
    cells[0][0] = "";
    for (int i = 0; i <= b.pd; ++i) cells[0][i + 1] = std::to_string(i);
    for (int r = 0; r <= max_row; ++r) {
        cells[r + 1][0] = std::to_string(r) + ":";
        for (int i = 0; i <= b.pd; ++i) {
            int v = b.beta(i, i + r);
            cells[r + 1][i + 1] = v == 0 ? "." : std::to_string(v);
        }
    }
    std::vector<std::string> total_row(b.pd + 2);
    total_row[0] = "total:";
    for (int i = 0; i <= b.pd; ++i) total_row[i + 1] = std::to_string(totals[i]);

    std::vector<std::size_t> width(b.pd + 2, 0);
    auto widen = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    };
    widen(total_row);
    for (const auto& row : cells) widen(row);

    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        out << "\n";
    };
    emit(cells[0]);
    emit(total_row);
    for (std::size_t r = 1; r < cells.size(); ++r) emit(cells[r]);
    out << "reg: " << b.reg << "\npd: " << b.pd << "\ndepth: " << b.depth << "\ndim: " << b.dim
        << "\n";
    return out.str();
}

inline Json betti_to_json(const BettiTable& b) {
    Json j;
    j["char"] = b.field.p;
    j["n"] = b.n;
    Json entries = Json::array();
    for (const auto& [ij, v] : b.entries)
        if (v != 0) entries.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"beta", v}});
    j["entries"] = entries;
    j["reg"] = b.reg;
    j["pd"] = b.pd;
    j["depth"] = b.depth;
    j["dim"] = b.dim;
    return j;
}

// --- v-report ---

inline Json int_or_inf(int v) {
    if (v == kVInfinity) return Json("inf");
    return Json(v);
}

inline std::vector<std::string> labels_of(const VertexSet& vs, Mask m) {
    std::vector<std::string> out;
    for (int b : mask_bits(m)) out.push_back(vs.label(b));
    return out;
}

inline Json v_report_to_json(const VReport& r, const VertexSet& vs) {
    Json j;
    j["v"] = r.v;
    Json per_prime = Json::array();
    for (const auto& w : r.per_prime)
        per_prime.push_back(Json{{"prime", labels_of(vs, w.prime.support)},
                                 {"value", w.value},
                                 {"witness", monomial_string(vs, w.monomial)}});
    j["per_prime"] = per_prime;
    Json per_height = Json::object();
    for (const auto& [h, v] : r.per_height) per_height[std::to_string(h)] = int_or_inf(v);
    j["per_height"] = per_height;
    j["best"] = Json{{"prime", labels_of(vs, r.best.prime.support)},
                     {"value", r.best.value},
                     {"witness", monomial_string(vs, r.best.monomial)}};
    return j;
}

// --- lc-report ---

inline Json lc_report_to_json(const LcProfile& pr, const VertexSet& vs, int ell, int p) {
    Json j;
    j["ell"] = ell;
    j["char"] = p;
    j["depth"] = pr.depth;
    j["dim"] = pr.dim;
    Json cd = Json::array();
    for (int v : pr.canonical_dim) cd.push_back(v == kDimNegInfinity ? Json("-inf") : Json(v));
    j["canonical_dim"] = cd;
    Json pieces = Json::object();
    for (std::size_t i = 0; i < pr.pieces.size(); ++i) {
        if (pr.pieces[i].empty()) continue;
        Json list = Json::array();
        for (const auto& piece : pr.pieces[i])
            list.push_back(Json{{"degree", piece.degree}, {"dim", piece.dim}});
        pieces[std::to_string(i)] = list;
    }
    j["pieces"] = pieces;
    return j;
}

}  // namespace io
}  // namespace vnum

#endif
