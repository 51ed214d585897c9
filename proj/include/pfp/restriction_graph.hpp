#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfp/constraints.hpp"
#include "pfp/fingerprint.hpp"

namespace pfp {

// Vertices are the equality classes of a fingerprint, ordered by minimum
// member; edges are the inequality constraints between distinct classes.
// Proper colorings of this graph are in bijection with preimages, and the
// fingerprint is reconstructible iff no inequality lands inside a class
// (self_loop empty).
struct RestrictionGraph {
    int n = 0;                              // underlying string length
    std::vector<std::vector<int>> vertices; // sorted members, ordered by min
    std::vector<std::pair<int, int>> edges; // vertex-index pairs a < b, sorted
    std::optional<ConstraintPair> self_loop;
    std::vector<int> vertex_of;             // position (1..n) -> vertex index

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    bool adjacent(int a, int b) const;
    std::vector<std::vector<char>> adjacency_matrix() const;
};

// An assignment of a color to every vertex of a specific graph. Colors from
// greedy reconstruction form a prefix 0..k-1; colorings read off an existing
// string keep that string's raw symbols.
struct Coloring {
    const RestrictionGraph* graph = nullptr;
    std::vector<int> colors; // by vertex index

    int count_colors() const;
};

bool is_proper(const RestrictionGraph& g, const Coloring& c);

// Unions the equality constraints into classes and maps each inequality to
// its class pair. The first inequality internal to a class (in the emission
// order of derive_inequalities) is recorded as self_loop; remaining
// inequalities still contribute edges. Throws DuplicateCenterError.
RestrictionGraph build_restriction_graph(const Fingerprint& f);

// The stored witness, if any.
std::optional<ConstraintPair> has_self_loop(const RestrictionGraph& g);

// Undirected DOT document. Node ids v1..vl follow the vertex order, labels
// list member positions comma-separated. With a coloring, same-color nodes
// share a fill from a fixed palette (cycled when colors exceed it). Throws
// ColoringMismatchError if the coloring belongs to another graph.
std::string export_dot(const RestrictionGraph& g, const Coloring* coloring = nullptr);

// The fill palette used by export_dot.
const std::vector<std::string>& dot_palette();

} // namespace pfp
