#include "wojda/decomposition.hpp"

#include <algorithm>
#include <string>

namespace wojda {

namespace {

int component_arcs(const Digraph& d, const std::vector<int>& comp) {
    int arcs = 0;
    for (int v : comp) arcs += d.out_degree(v);
    return arcs; // weak component: every out-arc stays inside it
}

} // namespace

ForestDecomposition decompose(const Digraph& d, int m) {
    if (m < 1) throw RangeError("decompose needs m >= 1");
    auto comps = d.weak_components();

    std::vector<std::vector<int>> tree_comps;
    ForestDecomposition dec;
    dec.m = m;
    for (auto& comp : comps) {
        if (component_arcs(d, comp) == int(comp.size()) - 1)
            tree_comps.push_back(std::move(comp));
        else
            dec.remainder.insert(dec.remainder.end(), comp.begin(), comp.end());
    }
    if (int(tree_comps.size()) < m)
        throw DecompositionError("only " + std::to_string(tree_comps.size()) +
                                 " tree components, need " + std::to_string(m));

    // smallest m trees, ties by smallest contained label (vertex lists are
    // sorted, so front() is the smallest label)
    std::sort(tree_comps.begin(), tree_comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    dec.trees.assign(tree_comps.begin(), tree_comps.begin() + m);
    for (std::size_t i = m; i < tree_comps.size(); ++i)
        dec.remainder.insert(dec.remainder.end(), tree_comps[i].begin(), tree_comps[i].end());
    std::sort(dec.remainder.begin(), dec.remainder.end());
    return dec;
}

Digraph::Induced prefix_forest(const Digraph& d, const ForestDecomposition& dec, int k) {
    if (k < 1 || k > dec.m) throw RangeError("prefix forest index out of range");
    std::vector<int> vertices;
    for (int i = 0; i < k; ++i)
        vertices.insert(vertices.end(), dec.trees[i].begin(), dec.trees[i].end());
    return d.induced(vertices);
}

bool check_claim_cl1(const ForestDecomposition& dec) {
    long long covered = (long long)dec.tree_vertex_total(); // n - |R|
    long long prefix = 0;
    for (int k = 1; k <= dec.m; ++k) {
        prefix += (long long)dec.trees[k - 1].size();
        if (prefix * dec.m > (long long)k * covered) return false;
    }
    return true;
}

} // namespace wojda
