#include "graphqfi/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace graphqfi {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(n);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
    for (const auto& [i, j] : edge_list) {
        std::ostringstream edge;
        edge << "edge [" << i << "," << j << "]";
        if (i < 0 || i >= n || j < 0 || j >= n) {
            throw std::invalid_argument(edge.str() + ": vertex " +
                                        std::to_string(i < 0 || i >= n ? i : j) +
                                        " out of range (n=" + std::to_string(n) + ")");
        }
        if (i == j) throw std::invalid_argument(edge.str() + ": self-loop");
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= size()) throw std::out_of_range("Graph: vertex out of range");
    return adj_[v];
}

bool Graph::has_edge(int i, int j) const {
    const auto& nb = neighbors(i);
    if (j < 0 || j >= size()) throw std::out_of_range("Graph: vertex out of range");
    return std::binary_search(nb.begin(), nb.end(), j);
}

long Graph::edge_count() const {
    long deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += static_cast<long>(nb.size());
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j : adj_[i])
            if (i < j) out.emplace_back(i, j);
    return out;  // already lexicographic: i ascending, adj_ sorted
}

std::optional<int> Graph::first_isolated() const {
    for (int i = 0; i < size(); ++i)
        if (adj_[i].empty()) return i;
    return std::nullopt;
}

bool Graph::connected() const {
    if (size() == 0) return true;
    std::vector<char> seen(size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : adj_[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                q.push(u);
            }
        }
    }
    return reached == size();
}

Graph parse_graph(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw std::invalid_argument("graph JSON: missing integer field \"n\"");
    const int n = doc["n"].get<int>();
    if (n < 1) throw std::invalid_argument("graph JSON: \"n\" must be >= 1");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw std::invalid_argument("graph JSON: missing array field \"edges\"");
    std::vector<std::pair<int, int>> edge_list;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("graph JSON: each edge must be a pair of integers");
        edge_list.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edge_list);
}

std::string to_json(const Graph& g) {
    nlohmann::json doc;
    doc["n"] = g.size();
    auto edges = nlohmann::json::array();
    for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
    doc["edges"] = edges;
    return doc.dump();
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 2) throw std::invalid_argument("cycle_graph: n must be >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star_graph: n must be >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    if (n < 2) throw std::invalid_argument("complete_graph: n must be >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid_graph: dimensions must be >= 1");
    std::vector<std::pair<int, int>> e;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, e);
}

Graph make_family(const std::string& name, const std::vector<int>& params) {
    auto arity = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("make_family: \"" + name + "\" expects " +
                                        std::to_string(k) + " parameter(s)");
    };
    if (name == "path") { arity(1); return path_graph(params[0]); }
    if (name == "cycle") { arity(1); return cycle_graph(params[0]); }
    if (name == "star") { arity(1); return star_graph(params[0]); }
    if (name == "complete") { arity(1); return complete_graph(params[0]); }
    if (name == "grid") { arity(2); return grid_graph(params[0], params[1]); }
    throw std::invalid_argument("make_family: unknown family \"" + name + "\"");
}

BundledGraph build_bundle(const Graph& base, const std::vector<int>& sizes) {
    if (auto iso = base.first_isolated())
        throw std::invalid_argument("build_bundle: base has isolated vertex " +
                                    std::to_string(*iso));
    if (static_cast<int>(sizes.size()) != base.size())
        throw std::invalid_argument("build_bundle: need one size per base vertex");
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (sizes[i] < 1)
            throw std::invalid_argument("build_bundle: bundle size " + std::to_string(sizes[i]) +
                                        " at base vertex " + std::to_string(i) + " is < 1");
    std::vector<int> offset(base.size() + 1, 0);
    for (int i = 0; i < base.size(); ++i) offset[i + 1] = offset[i] + sizes[i];
    const int n = offset.back();

    BundledGraph out;
    out.bundle_of.resize(n);
    out.bundles.resize(base.size());
    for (int i = 0; i < base.size(); ++i)
        for (int a = 0; a < sizes[i]; ++a) {
            out.bundle_of[offset[i] + a] = i;
            out.bundles[i].push_back(offset[i] + a);
        }
    std::vector<std::pair<int, int>> e;
    for (const auto& [i, j] : base.edges())
        for (int a = 0; a < sizes[i]; ++a)
            for (int b = 0; b < sizes[j]; ++b) e.emplace_back(offset[i] + a, offset[j] + b);
    out.graph = Graph(n, e);
    return out;
}

Graph bundled_star(int k, int j) {
    return build_bundle(star_graph(k), std::vector<int>(k, j)).graph;
}

Graph bundled_cycle(int k, int j) {
    return build_bundle(cycle_graph(k), std::vector<int>(k, j)).graph;
}

}  // namespace graphqfi
