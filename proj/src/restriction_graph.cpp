#include "pfp/restriction_graph.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace pfp {

bool RestrictionGraph::adjacent(int a, int b) const {
    if (a > b)
        std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<std::vector<char>> RestrictionGraph::adjacency_matrix() const {
    size_t v = vertices.size();
    std::vector<std::vector<char>> adj(v, std::vector<char>(v, 0));
    for (auto [a, b] : edges) {
        adj[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
        adj[static_cast<size_t>(b)][static_cast<size_t>(a)] = 1;
    }
    return adj;
}

int Coloring::count_colors() const {
    std::unordered_set<int> seen(colors.begin(), colors.end());
    return static_cast<int>(seen.size());
}

bool is_proper(const RestrictionGraph& g, const Coloring& c) {
    if (c.colors.size() != g.vertices.size())
        return false;
    for (auto [a, b] : g.edges)
        if (c.colors[static_cast<size_t>(a)] == c.colors[static_cast<size_t>(b)])
            return false;
    return !g.self_loop.has_value();
}

RestrictionGraph build_restriction_graph(const Fingerprint& f) {
    EqualityPartition part = equality_partition(f);
    std::vector<ConstraintPair> inequalities = derive_inequalities(f);

    RestrictionGraph g;
    g.n = f.n;
    g.vertices = part.classes();
    g.vertex_of.assign(static_cast<size_t>(f.n) + 1, -1);
    for (size_t v = 0; v < g.vertices.size(); ++v)
        for (int pos : g.vertices[v])
            g.vertex_of[static_cast<size_t>(pos)] = static_cast<int>(v);

    std::set<std::pair<int, int>> edges;
    for (const auto& c : inequalities) {
        int a = g.vertex_of[static_cast<size_t>(c.p)];
        int b = g.vertex_of[static_cast<size_t>(c.q)];
        if (a == b) {
            if (!g.self_loop)
                g.self_loop = c;
            continue;
        }
        edges.insert(std::minmax(a, b));
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

std::optional<ConstraintPair> has_self_loop(const RestrictionGraph& g) {
    return g.self_loop;
}

const std::vector<std::string>& dot_palette() {
    static const std::vector<std::string> palette = {
        "lightblue", "lightgreen", "lightsalmon", "gold",
        "plum",      "palegreen",  "lightcyan",   "khaki",
        "pink",      "lavender",   "beige",       "coral",
    };
    return palette;
}

std::string export_dot(const RestrictionGraph& g, const Coloring* coloring) {
    if (coloring) {
        if (coloring->graph != &g ||
            coloring->colors.size() != g.vertices.size())
            throw ColoringMismatchError("coloring does not cover this graph");
    }
    std::string out = "graph restriction {\n";
    const auto& palette = dot_palette();
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        std::string label;
        for (size_t i = 0; i < g.vertices[v].size(); ++i) {
            if (i)
                label += ",";
            label += std::to_string(g.vertices[v][i]);
        }
        out += "  v" + std::to_string(v + 1) + " [label=\"" + label + "\"";
        if (coloring) {
            size_t color = static_cast<size_t>(coloring->colors[v]) % palette.size();
            out += ",style=filled,fillcolor=" + palette[color];
        }
        out += "];\n";
    }
    for (auto [a, b] : g.edges)
        out += "  v" + std::to_string(a + 1) + " -- v" + std::to_string(b + 1) + ";\n";
    out += "}\n";
    return out;
}

} // namespace pfp
