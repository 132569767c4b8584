#include "wojda/digraph.hpp"

#include <algorithm>
#include <string>

namespace wojda {

Digraph::Digraph(int order) : order_(order) {
    if (order < 0) throw RangeError("negative digraph order");
    out_.assign(order, Bitset(order));
    in_.assign(order, Bitset(order));
}

Digraph Digraph::from_arcs(int order, const std::vector<Arc>& arcs) {
    Digraph g(order);
    for (auto [u, v] : arcs) g.add_arc(u, v);
    return g;
}

void Digraph::add_arc(int u, int v) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw RangeError("arc endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw RangeError("self-loop at vertex " + std::to_string(u));
    if (out_[u].test(v)) throw RangeError("duplicate arc " + std::to_string(u) + " " + std::to_string(v));
    out_[u].set(v);
    in_[v].set(u);
    ++arc_count_;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (int u = 0; u < order_; ++u)
        out_[u].for_each([&](int v) { result.emplace_back(u, v); });
    return result; // already lexicographic: u ascending, then v ascending
}

Digraph Digraph::reversed() const {
    Digraph g(order_);
    for (int u = 0; u < order_; ++u)
        out_[u].for_each([&](int v) { g.add_arc(v, u); });
    return g;
}

Digraph::Induced Digraph::induced(const std::vector<int>& keep) const {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> to_new(order_, -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 0 || v >= order_) throw RangeError("induced vertex out of range");
        if (to_new[v] != -1) throw RangeError("duplicate vertex in induced set");
        to_new[v] = int(i);
    }
    Digraph g(int(sorted.size()));
    for (int u : sorted)
        out_[u].for_each([&](int v) {
            if (to_new[v] != -1) g.add_arc(to_new[u], to_new[v]);
        });
    return {std::move(g), std::move(sorted)};
}

Digraph::Induced Digraph::without(const Bitset& dropped) const {
    std::vector<int> keep;
    keep.reserve(order_);
    for (int v = 0; v < order_; ++v)
        if (!dropped.test(v)) keep.push_back(v);
    return induced(keep);
}

std::vector<std::vector<int>> Digraph::weak_components() const {
    std::vector<int> comp(order_, -1);
    std::vector<std::vector<int>> result;
    std::vector<int> stack;
    for (int start = 0; start < order_; ++start) {
        if (comp[start] != -1) continue;
        int id = int(result.size());
        result.emplace_back();
        comp[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            result[id].push_back(v);
            auto visit = [&](int w) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            };
            out_[v].for_each(visit);
            in_[v].for_each(visit);
        }
    }
    for (auto& c : result) std::sort(c.begin(), c.end());
    return result; // ordered by smallest member since starts are ascending
}

DegreeOrder degree_order(const Digraph& target) {
    DegreeOrder d;
    d.order.resize(target.order());
    for (int v = 0; v < target.order(); ++v) d.order[v] = v;
    std::stable_sort(d.order.begin(), d.order.end(), [&](int a, int b) {
        int da = target.degree(a), db = target.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    return d;
}

bool check_prop_deg(const Digraph& target, const DegreeOrder& order) {
    long long arcs = target.arc_count();
    for (int j = 2; j <= target.order(); ++j) {
        long long d = target.degree(order.at(j));
        if (d * j > arcs + (long long)j * (j - 1)) return false;
    }
    return true;
}

} // namespace wojda
