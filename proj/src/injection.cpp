#include "wojda/injection.hpp"

#include <algorithm>
#include <string>

namespace wojda {

Injection::Injection(int source_order, int target_order)
    : source_order_(source_order), target_order_(target_order),
      to_(source_order, -1), from_(target_order, -1) {
    if (source_order < 0 || target_order < source_order)
        throw ShapeError("injection needs 0 <= source order <= target order");
}

void Injection::assign(int u, int v) {
    if (u < 0 || u >= source_order_ || v < 0 || v >= target_order_)
        throw RangeError("injection assignment out of range");
    if (to_[u] != -1)
        throw OverlapError("source vertex " + std::to_string(u) + " already assigned");
    if (from_[v] != -1)
        throw InjectivityError("target vertex " + std::to_string(v) + " already used");
    to_[u] = v;
    from_[v] = u;
    ++assigned_;
}

void Injection::unassign(int u) {
    if (u < 0 || u >= source_order_ || to_[u] == -1)
        throw RangeError("unassign of unassigned vertex");
    from_[to_[u]] = -1;
    to_[u] = -1;
    --assigned_;
}

std::vector<Arc> collision_arcs(const Injection& map, const Digraph& source, const Digraph& target) {
    if (map.source_order() != source.order() || map.target_order() != target.order())
        throw ShapeError("map shape does not match digraph orders");
    if (!map.is_total())
        throw PartialMapError("collision_arcs requires a total map");
    std::vector<Arc> hits;
    for (auto [u, v] : source.arcs()) {
        int iu = map.image(u), iv = map.image(v);
        if (target.has_arc(iu, iv)) hits.emplace_back(iu, iv);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

Injection union_injections(const std::vector<Injection>& parts,
                           const std::vector<std::pair<int, int>>& overrides) {
    if (parts.empty() && overrides.empty())
        throw ShapeError("union of nothing");
    int src = parts.empty() ? 0 : parts.front().source_order();
    int tgt = parts.empty() ? 0 : parts.front().target_order();
    for (const auto& p : parts) {
        if (p.source_order() != src || p.target_order() != tgt)
            throw ShapeError("union parts have mismatched orders");
    }
    if (parts.empty()) {
        for (auto [u, v] : overrides) {
            src = std::max(src, u + 1);
            tgt = std::max(tgt, v + 1);
        }
        tgt = std::max(tgt, src);
    }

    std::vector<bool> overridden(src, false);
    for (auto [u, v] : overrides) {
        (void)v;
        if (u < 0 || u >= src) throw RangeError("override source out of range");
        if (overridden[u]) throw OverlapError("override repeats source vertex " + std::to_string(u));
        overridden[u] = true;
    }

    Injection result(src, tgt);
    for (auto [u, v] : overrides) result.assign(u, v);
    std::vector<bool> seen(src, false);
    for (const auto& p : parts) {
        for (int u = 0; u < src; ++u) {
            if (!p.is_assigned(u)) continue;
            if (seen[u]) throw OverlapError("parts share source vertex " + std::to_string(u));
            seen[u] = true;
            if (overridden[u]) continue; // override wins
            result.assign(u, p.image(u)); // InjectivityError on target reuse
        }
    }
    return result;
}

bool verify_certificate(const PackingCertificate& cert, const Digraph& source, const Digraph& target) {
    auto recomputed = collision_arcs(cert.map, source, target);
    return recomputed == cert.collisions && int(recomputed.size()) <= cert.q_bound;
}

} // namespace wojda
