#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace graphqfi {

// Simple undirected graph on vertices 0..n-1. Immutable once built;
// adjacency lists are kept sorted and deduplicated.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n);

    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int size() const { return static_cast<int>(adj_.size()); }

    const std::vector<int>& neighbors(int v) const;

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int i, int j) const;

    long edge_count() const;

    // Edges as (i, j) with i < j, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    std::optional<int> first_isolated() const;

    bool connected() const;

private:
    std::vector<std::vector<int>> adj_;
};

// JSON format: {"n": int, "edges": [[i, j], ...]}. Duplicate edges collapse;
// self-loops and out-of-range vertices are parse errors naming the edge.
Graph parse_graph(const std::string& json_text);
std::string to_json(const Graph& g);

Graph path_graph(int n);      // n >= 1
Graph cycle_graph(int n);     // n >= 2 (cycle_graph(2) collapses to a single edge)
Graph star_graph(int n);      // n >= 2, vertex 0 is the center
Graph complete_graph(int n);  // n >= 2
Graph grid_graph(int rows, int cols);  // 4-neighbor lattice, row-major labels

// name in {star, cycle, path, complete, grid}; grid takes {rows, cols}.
Graph make_family(const std::string& name, const std::vector<int>& params);

struct BundledGraph {
    Graph graph;
    std::vector<int> bundle_of;            // vertex -> base vertex
    std::vector<std::vector<int>> bundles; // base vertex -> its vertices
};

// Replaces base vertex i by sizes[i] vertices and joins bundles completely
// along base edges. Bundle vertices are numbered consecutively in base order.
BundledGraph build_bundle(const Graph& base, const std::vector<int>& sizes);

Graph bundled_star(int k, int j);   // star(k) with k uniform bundles of j
Graph bundled_cycle(int k, int j);  // cycle(k) with k uniform bundles of j

}  // namespace graphqfi
