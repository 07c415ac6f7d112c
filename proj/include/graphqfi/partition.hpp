#pragma once

#include <vector>

#include "graphqfi/graph.hpp"

namespace graphqfi {

// Maximal set of vertices sharing one neighborhood: N(i) for open classes,
// N(i) U {i} (true twins) for closed classes.
struct PartitionClass {
    std::vector<int> members;              // sorted
    std::vector<int> shared_neighborhood;  // sorted
    int size() const { return static_cast<int>(members.size()); }
    int neighborhood_size() const { return static_cast<int>(shared_neighborhood.size()); }
};

struct PartitionReport {
    int n = 0;
    std::vector<PartitionClass> open_classes;
    std::vector<PartitionClass> closed_classes;
};

// Both partitions cover 0..n-1; classes are sorted by smallest member.
PartitionReport partition(const Graph& g);

}  // namespace graphqfi
