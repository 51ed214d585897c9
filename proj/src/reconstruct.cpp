#include "pfp/reconstruct.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace pfp {

namespace {

// Greedy coloring in vertex (class-minimum) order. Requires no self-loop.
std::vector<int> greedy_colors(const RestrictionGraph& g) {
    assert(!g.self_loop);
    std::vector<int> colors(g.vertices.size(), -1);
    std::vector<std::vector<int>> neighbors(g.vertices.size());
    for (auto [a, b] : g.edges) {
        neighbors[static_cast<size_t>(a)].push_back(b);
        neighbors[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<char> taken;
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        taken.assign(g.vertices.size() + 1, 0);
        for (int u : neighbors[v])
            if (colors[static_cast<size_t>(u)] >= 0)
                taken[static_cast<size_t>(colors[static_cast<size_t>(u)])] = 1;
        int color = 0;
        while (taken[static_cast<size_t>(color)])
            ++color;
        colors[v] = color;
    }
    return colors;
}

Text colors_to_text(const RestrictionGraph& g, const std::vector<int>& colors) {
    std::vector<Symbol> symbols(static_cast<size_t>(g.n), -1);
    for (size_t v = 0; v < g.vertices.size(); ++v)
        for (int pos : g.vertices[v])
            symbols[static_cast<size_t>(pos - 1)] = colors[v];
    return Text(std::move(symbols));
}

int distinct_count(const std::vector<int>& colors) {
    std::unordered_set<int> seen(colors.begin(), colors.end());
    return static_cast<int>(seen.size());
}

struct GreedyResult {
    RestrictionGraph graph;
    ValidationReport report;
    std::vector<int> colors; // meaningful only when report.valid
    Text text;               // meaningful only when report.valid
};

GreedyResult run_greedy(const Fingerprint& f) {
    GreedyResult r;
    r.graph = build_restriction_graph(f);
    if (r.graph.self_loop) {
        r.report.valid = false;
        r.report.reason = ValidationReport::Reason::self_loop;
        r.report.self_loop_witness = r.graph.self_loop;
        return r;
    }
    r.colors = greedy_colors(r.graph);
    r.text = colors_to_text(r.graph, r.colors);

    Fingerprint round_trip = fingerprint_of(r.text);
    if (round_trip != f) {
        r.report.valid = false;
        r.report.reason = ValidationReport::Reason::round_trip_mismatch;
        std::set_difference(round_trip.pairs.begin(), round_trip.pairs.end(),
                            f.pairs.begin(), f.pairs.end(),
                            std::back_inserter(r.report.extra_pairs));
        std::set_difference(f.pairs.begin(), f.pairs.end(),
                            round_trip.pairs.begin(), round_trip.pairs.end(),
                            std::back_inserter(r.report.missing_pairs));
        return r;
    }
    r.report.valid = true;
    return r;
}

std::string witness_text(const ConstraintPair& w) {
    return "S[" + std::to_string(w.p) + "] != S[" + std::to_string(w.q) + "]";
}

} // namespace

std::string ValidationReport::describe() const {
    switch (reason) {
    case Reason::none:
        return "valid";
    case Reason::self_loop:
        return "invalid: self-loop " + witness_text(*self_loop_witness);
    case Reason::round_trip_mismatch: {
        std::string msg = "invalid: reconstruction round trip mismatch;";
        msg += " extra:";
        for (const auto& p : extra_pairs)
            msg += " " + to_string(p);
        msg += " missing:";
        for (const auto& p : missing_pairs)
            msg += " " + to_string(p);
        return msg;
    }
    }
    return "valid";
}

ValidationReport validate(const Fingerprint& f) {
    return run_greedy(f).report;
}

Text greedy_reconstruct(const Fingerprint& f) {
    GreedyResult r = run_greedy(f);
    if (!r.report.valid)
        throw InvalidFingerprintError(r.report.describe(), r.report);
    return r.text;
}

Text reconstruct_exact_k(const Fingerprint& f, int k) {
    GreedyResult r = run_greedy(f);
    if (!r.report.valid)
        throw InvalidFingerprintError(r.report.describe(), r.report);

    int used = distinct_count(r.colors);
    int max_k = r.graph.vertex_count();
    if (k < used || k > max_k)
        throw OutOfRangeError("k = " + std::to_string(k) + " outside [" +
                                  std::to_string(used) + "," + std::to_string(max_k) + "]",
                              used, max_k);

    std::vector<int>& colors = r.colors;
    while (used < k) {
        // Smallest color id still shared by two or more vertices; recolor
        // its member with the largest class minimum, i.e. the largest
        // vertex index.
        int split_color = -1;
        for (int color = 0; split_color < 0 && color < used; ++color) {
            int count = 0;
            for (int c : colors)
                count += (c == color);
            if (count >= 2)
                split_color = color;
        }
        assert(split_color >= 0);
        for (size_t v = colors.size(); v-- > 0;) {
            if (colors[v] == split_color) {
                colors[v] = used++;
                break;
            }
        }
    }
    return canonicalize(colors_to_text(r.graph, colors));
}

Coloring string_to_coloring(const Text& t, const RestrictionGraph& g) {
    Coloring c;
    c.graph = &g;
    c.colors.assign(g.vertices.size(), -1);
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        for (int pos : g.vertices[v]) {
            Symbol s = t.at(pos);
            if (c.colors[v] >= 0 && c.colors[v] != s)
                throw InconsistentTextError(
                    "positions " + std::to_string(g.vertices[v].front()) + " and " +
                    std::to_string(pos) + " lie in one class but differ");
            c.colors[v] = s;
        }
    }
    return c;
}

Text coloring_to_string(const Coloring& c) {
    return colors_to_text(*c.graph, c.colors);
}

int sigma(const Fingerprint& f) {
    GreedyResult r = run_greedy(f);
    if (!r.report.valid)
        throw InvalidFingerprintError(r.report.describe(), r.report);
    return distinct_count(r.colors);
}

} // namespace pfp
