#pragma once

#include <cstdint>
#include <vector>

#include "wojda/digraph.hpp"

namespace wojda {

// Partial or total injective map from source vertices 0..source_order-1 into
// target vertices 0..target_order-1. Mutable while being constructed,
// treated as immutable once wrapped in a certificate.
class Injection {
public:
    Injection() = default;
    Injection(int source_order, int target_order);

    int source_order() const { return source_order_; }
    int target_order() const { return target_order_; }

    bool is_assigned(int u) const { return to_[u] != -1; }
    bool target_used(int v) const { return from_[v] != -1; }
    int image(int u) const { return to_[u]; }       // -1 if unassigned
    int preimage(int v) const { return from_[v]; }  // -1 if unused

    void assign(int u, int v);   // OverlapError if u taken, InjectivityError if v taken
    void unassign(int u);

    int assigned_count() const { return assigned_; }
    bool is_total() const { return assigned_ == source_order_; }

    const std::vector<int>& raw() const { return to_; }

    bool operator==(const Injection& o) const = default;

private:
    int source_order_ = 0;
    int target_order_ = 0;
    int assigned_ = 0;
    std::vector<int> to_, from_;
};

// Total injection together with the overlap it produces and the bound it was
// required to meet; the deliverable of every packer. seed records the random
// stream the producer consumed, for replay.
struct PackingCertificate {
    Injection map;
    std::vector<Arc> collisions; // target arcs hit by images of source arcs
    int q_bound = 0;
    std::uint64_t seed = 0;
};

// Arcs of `target` that coincide with images of `source` arcs under `map`;
// empty exactly when `map` is a packing.
std::vector<Arc> collision_arcs(const Injection& map, const Digraph& source, const Digraph& target);

// Combine disjoint partial injections, with `overrides` taking precedence
// over whatever the parts say for the same source vertex.
Injection union_injections(const std::vector<Injection>& parts,
                           const std::vector<std::pair<int, int>>& overrides);

// Recompute collisions and validate them against the certificate.
bool verify_certificate(const PackingCertificate& cert, const Digraph& source, const Digraph& target);

} // namespace wojda
