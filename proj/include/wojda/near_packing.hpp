#pragma once

#include <cstdint>

#include "wojda/digraph.hpp"
#include "wojda/injection.hpp"
#include "wojda/rational.hpp"

namespace wojda {

// Exact expected number of collisions over uniform random bijections:
// |A(source)| * |A(target)| / (n(n-1)).
Rational expected_collisions(const Digraph& source, const Digraph& target);

// Exact conditional expectation over uniform completions of `partial` to a
// bijection. Per (source arc, target arc) pair: 1 if fully matched, 1/r if
// one endpoint is matched consistently and the other target endpoint is
// unused, 1/(r(r-1)) if no endpoint is placed and both target endpoints are
// unused, 0 otherwise (r = number of unassigned source vertices).
Rational conditional_expected_collisions(const Digraph& source, const Digraph& target,
                                         const Injection& partial);

struct NearPackInstance {
    Digraph source;
    Digraph target;          // equal order
    int q = 0;
    std::uint64_t seed = 0;
};

struct NearPackOptions {
    int sample_cap = 10000;  // 0 disables phase 1 entirely
    int threads = 1;
};

// Find a q-near-packing whenever |A|*|A'| < (q+1)n(n-1). Phase 1 tries up
// to sample_cap seeded random bijections (lowest successful sample index
// wins, so the result does not depend on thread count). Phase 2 finishes
// deterministically by conditional expectations: source vertices in
// descending degree, each placed on the unused target minimizing the exact
// conditional expectation, ties by smallest label. The minimizing branch
// keeps the expectation below q+1, and a total map's expectation is its
// collision count, so phase 2 cannot fail.
PackingCertificate near_pack(const NearPackInstance& instance, const NearPackOptions& options = {});

// Zero-collision packing whenever |A| + |A'| <= 2n-2 (then the product is
// at most (n-1)^2 < n(n-1), so the q=0 hypothesis holds automatically).
PackingCertificate sum_pack(const Digraph& source, const Digraph& target,
                            std::uint64_t seed = 0, const NearPackOptions& options = {});

} // namespace wojda
