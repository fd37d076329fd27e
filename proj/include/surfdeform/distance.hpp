#pragma once

#include <cstddef>
#include <vector>

#include "surfdeform/patch.hpp"

namespace surfdeform {

// Matching graph for one error type. Vertices are detector groups (measured
// stabilizers of the opposite type, with gauge clusters merged into
// super-stabilizer vertices) plus two virtual boundary vertices; edges are
// data qubits.
struct MatchingGraph {
    CheckType error_type = CheckType::X;
    std::vector<PauliString> detectors;
    std::size_t virt_a = 0, virt_b = 0;  // detector count and +1

    struct Edge {
        std::size_t u = 0, v = 0;
        std::size_t qubit = 0;  // data index in the patch
    };
    std::vector<Edge> edges;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;  // (vertex, edge)

    std::size_t vertex_count() const { return detectors.size() + 2; }
};

// bare = true keeps every gauge operator as its own detector instead of
// merging clusters (diagnostic only; the dressed graph is the default).
MatchingGraph matching_graph(const CodePatch& patch, CheckType error_type, bool bare = false);

// Gauge operators of one type clustered by shared anticommuting partners of
// the other type; each cluster's product is a recovered super-stabilizer.
std::vector<PauliString> recovered_supers(const CodePatch& patch, CheckType type);

struct Distances {
    int dx = 0;
    int dz = 0;
    bool broken() const { return dx <= 0 || dz <= 0; }
    int min() const { return dx < dz ? dx : dz; }
    bool operator==(const Distances&) const = default;
};

// Shortest virtual-to-virtual path length, or 0 if disconnected.
int graph_distance(const MatchingGraph& g);

// (d_X, d_Z) of the patch via matching-graph shortest paths. Dressed by
// construction: gauge clusters are merged detectors.
Distances distance(const CodePatch& patch, bool bare = false);

struct BruteDistances {
    int dx = 0, dz = 0;          // 0 when exceeded
    bool exceeded_x = false, exceeded_z = false;
};

// Independent oracle: enumerate single-type errors by increasing weight and
// return the minimal weight that commutes with every stabilizer generator
// and anticommutes with the conjugate logical.
BruteDistances brute_force_distance(const CodePatch& patch, int w_max);

}  // namespace surfdeform
