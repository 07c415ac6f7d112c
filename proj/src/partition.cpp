#include "graphqfi/partition.hpp"

#include <algorithm>
#include <map>

namespace graphqfi {

namespace {

std::vector<PartitionClass> group_by_key(int n,
                                         const std::vector<std::vector<int>>& key_of_vertex) {
    std::map<std::vector<int>, PartitionClass> classes;
    for (int v = 0; v < n; ++v) {
        auto& cls = classes[key_of_vertex[v]];
        if (cls.members.empty()) cls.shared_neighborhood = key_of_vertex[v];
        cls.members.push_back(v);
    }
    std::vector<PartitionClass> out;
    out.reserve(classes.size());
    for (auto& [key, cls] : classes) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(), [](const PartitionClass& a, const PartitionClass& b) {
        return a.members.front() < b.members.front();
    });
    return out;
}

}  // namespace

PartitionReport partition(const Graph& g) {
    const int n = g.size();
    std::vector<std::vector<int>> open_key(n), closed_key(n);
    for (int v = 0; v < n; ++v) {
        open_key[v] = g.neighbors(v);
        closed_key[v] = g.neighbors(v);
        closed_key[v].insert(
            std::lower_bound(closed_key[v].begin(), closed_key[v].end(), v), v);
    }
    PartitionReport report;
    report.n = n;
    report.open_classes = group_by_key(n, open_key);
    report.closed_classes = group_by_key(n, closed_key);
    return report;
}

}  // namespace graphqfi
