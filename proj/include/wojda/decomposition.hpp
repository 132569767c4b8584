#pragma once

#include <vector>

#include "wojda/digraph.hpp"

namespace wojda {

// Split of a sparse digraph into m oriented trees plus a remainder. Trees
// are full weak components sorted by ascending order (ties by smallest
// vertex label); everything else, including surplus tree components, lands
// in the remainder.
struct ForestDecomposition {
    std::vector<std::vector<int>> trees; // sorted vertex lists, |T_i| <= |T_{i+1}|
    std::vector<int> remainder;          // sorted
    int m = 0;

    int tree_vertex_total() const {
        int s = 0;
        for (const auto& t : trees) s += int(t.size());
        return s;
    }
};

// Requires at least m tree components (guaranteed whenever
// |A(D)| <= |V(D)| - m); the m smallest become T_1..T_m.
ForestDecomposition decompose(const Digraph& d, int m);

// Induced sub-digraph on T_1 u ... u T_k, compacted; an oriented forest
// with exactly k components.
Digraph::Induced prefix_forest(const Digraph& d, const ForestDecomposition& dec, int k);

// |F_k| * m <= k * (n - |R|) for all k; a theorem for decompose output.
bool check_claim_cl1(const ForestDecomposition& dec);

} // namespace wojda
