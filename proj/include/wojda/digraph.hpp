#pragma once

#include <utility>
#include <vector>

#include "wojda/bitset.hpp"
#include "wojda/errors.hpp"

namespace wojda {

using Arc = std::pair<int, int>; // (tail, head), tail != head

// Digraph on vertices 0..order-1 with adjacency stored as bit rows in both
// directions, so arc membership and neighborhood intersections are O(1) /
// O(order/64). Immutable once built; all algorithms share by const ref.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int order);
    static Digraph from_arcs(int order, const std::vector<Arc>& arcs);

    int order() const { return order_; }
    int arc_count() const { return arc_count_; }

    bool has_arc(int u, int v) const { return out_[u].test(v); }
    void add_arc(int u, int v); // throws RangeError on loops/dups/out-of-range

    const Bitset& out_neighbors(int v) const { return out_[v]; }
    const Bitset& in_neighbors(int v) const { return in_[v]; }
    Bitset neighborhood(int v) const { return out_[v] | in_[v]; }

    int out_degree(int v) const { return out_[v].count(); }
    int in_degree(int v) const { return in_[v].count(); }
    int degree(int v) const { return out_degree(v) + in_degree(v); }
    // |N(v)|; smaller than degree(v) when v lies on a 2-cycle
    int neighborhood_size(int v) const { return Bitset::and_count(out_[v], in_[v]) == 0
            ? degree(v) : (out_[v] | in_[v]).count(); }

    std::vector<Arc> arcs() const; // lexicographically sorted

    Digraph reversed() const;

    // induced sub-digraph on the kept vertices, compacted to 0..k-1;
    // to_parent maps new labels back to labels of *this
    struct Induced {
        Digraph graph;
        std::vector<int> to_parent;
    };
    Induced induced(const std::vector<int>& keep) const;
    Induced without(const Bitset& dropped) const;

    // weak components, each a sorted vertex list, ordered by smallest member
    std::vector<std::vector<int>> weak_components() const;

    bool operator==(const Digraph& o) const {
        return order_ == o.order_ && arc_count_ == o.arc_count_ && out_ == o.out_;
    }

private:
    int order_ = 0;
    int arc_count_ = 0;
    std::vector<Bitset> out_, in_;
};

// Enumeration of target vertices by non-increasing total degree, ties by
// ascending label. order[0] plays the role of the highest-degree vertex.
struct DegreeOrder {
    std::vector<int> order;
    int at(int rank1based) const { return order[rank1based - 1]; } // paper-style v'_i
};

DegreeOrder degree_order(const Digraph& target);

// j*d(v'_j) <= |A| + j(j-1) for all j >= 2; holds for every digraph, so this
// doubles as a self-test of the ordering code.
bool check_prop_deg(const Digraph& target, const DegreeOrder& order);

} // namespace wojda
