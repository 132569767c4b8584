#include "wojda/near_packing.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "wojda/rng.hpp"

namespace wojda {

namespace {

void require_equal_orders(const Digraph& a, const Digraph& b) {
    if (a.order() != b.order()) throw ShapeError("digraph orders differ");
}

long long collisions_of_bijection(const std::vector<int>& sigma, const std::vector<Arc>& source_arcs,
                                  const Digraph& target, long long stop_above) {
    long long c = 0;
    for (auto [u, v] : source_arcs) {
        if (target.has_arc(sigma[u], sigma[v]) && ++c > stop_above) break;
    }
    return c;
}

PackingCertificate certificate_from_map(Injection map, const Digraph& source, const Digraph& target,
                                        int q, std::uint64_t seed) {
    PackingCertificate cert;
    cert.collisions = collision_arcs(map, source, target);
    cert.map = std::move(map);
    cert.q_bound = q;
    cert.seed = seed;
    if (int(cert.collisions.size()) > q)
        throw InternalInvariantError("certificate exceeds its q bound");
    return cert;
}

// ---------------------------------------------------------------------------
// Derandomized phase: exact conditional expectations, updated incrementally.
//
// With r unassigned source vertices, the conditional expectation decomposes
// as  E = C2 + C1/r + SA0*TA0 / (r(r-1))  where
//   C2  = collisions already forced by the partial map,
//   C1  = sum over boundary source arcs (one endpoint assigned, the image's
//         relevant target neighborhood restricted to unused vertices),
//   SA0 = source arcs with both endpoints unassigned,
//   TA0 = target arcs with both endpoints unused.
// The SA0*TA0 factorization works because a fully-unassigned source arc can
// land on any fully-unused target arc with the same probability.
// ---------------------------------------------------------------------------
class ExpectationEngine {
public:
    ExpectationEngine(const Digraph& source, const Digraph& target)
        : s_(source), t_(target), n_(source.order()), inj_(n_, n_), unused_(n_),
          cnt_out_un_(n_), cnt_in_un_(n_), un_out_(n_), un_in_(n_),
          img_out_(n_), img_in_(n_), w_out_(n_, 0), w_in_(n_, 0) {
        unused_.set_all();
        r_ = n_;
        for (int v = 0; v < n_; ++v) {
            cnt_out_un_[v] = s_.out_degree(v);
            cnt_in_un_[v] = s_.in_degree(v);
            un_out_[v] = t_.out_degree(v);
            un_in_[v] = t_.in_degree(v);
        }
        sa0_ = s_.arc_count();
        ta0_ = t_.arc_count();
    }

    // numerator of E after hypothetically assigning u -> t, over den(r-1);
    // comparable across candidates of the same step
    __int128 candidate_numerator(int u, int t, long long b1) const {
        long long a2 = 0;
        for (int tp : img_out_[u]) a2 += t_.has_arc(t, tp);
        for (int tp : img_in_[u]) a2 += t_.has_arc(tp, t);
        long long csum = 0;
        t_.in_neighbors(t).for_each([&](int tp) { csum += w_out_[tp]; });
        t_.out_neighbors(t).for_each([&](int tp) { csum += w_in_[tp]; });
        long long a1 = (long long)cnt_out_un_[u] * un_out_[t] + (long long)cnt_in_un_[u] * un_in_[t];

        long long c2 = c2_ + a2;
        long long c1 = c1_ + a1 - b1 - (csum - a2);
        long long sa0 = sa0_ - cnt_out_un_[u] - cnt_in_un_[u];
        long long ta0 = ta0_ - un_out_[t] - un_in_[t];
        int r = r_ - 1;
        if (r >= 2)
            return (__int128)c2 * r * (r - 1) + (__int128)c1 * (r - 1) + (__int128)sa0 * ta0;
        assert(sa0 == 0);
        return (__int128)c2 + c1; // r <= 1: the C0 term is gone
    }

    // t-independent part of the C1 update for source vertex u
    long long boundary_removal(int u) const {
        long long b1 = 0;
        for (int tp : img_in_[u]) b1 += un_out_[tp];
        for (int tp : img_out_[u]) b1 += un_in_[tp];
        return b1;
    }

    __int128 denominator_after() const {
        int r = r_ - 1;
        return r >= 2 ? (__int128)r * (r - 1) : 1;
    }

    void commit(int u, int t) {
        long long b1 = boundary_removal(u);
        long long a2 = 0;
        for (int tp : img_out_[u]) a2 += t_.has_arc(t, tp);
        for (int tp : img_in_[u]) a2 += t_.has_arc(tp, t);
        long long csum = 0;
        t_.in_neighbors(t).for_each([&](int tp) { csum += w_out_[tp]; });
        t_.out_neighbors(t).for_each([&](int tp) { csum += w_in_[tp]; });
        long long a1 = (long long)cnt_out_un_[u] * un_out_[t] + (long long)cnt_in_un_[u] * un_in_[t];

        c2_ += a2;
        c1_ += a1 - b1 - (csum - a2);
        sa0_ -= cnt_out_un_[u] + cnt_in_un_[u];
        ta0_ -= un_out_[t] + un_in_[t];

        inj_.assign(u, t);
        unused_.reset(t);
        --r_;

        s_.in_neighbors(u).for_each([&](int w) {
            --cnt_out_un_[w];
            if (inj_.is_assigned(w)) --w_out_[inj_.image(w)];
            img_out_[w].push_back(t);
        });
        s_.out_neighbors(u).for_each([&](int w) {
            --cnt_in_un_[w];
            if (inj_.is_assigned(w)) --w_in_[inj_.image(w)];
            img_in_[w].push_back(t);
        });
        t_.in_neighbors(t).for_each([&](int tp) { --un_out_[tp]; });
        t_.out_neighbors(t).for_each([&](int tp) { --un_in_[tp]; });
        w_out_[t] = cnt_out_un_[u];
        w_in_[t] = cnt_in_un_[u];
    }

    const Bitset& unused() const { return unused_; }
    Injection take_map() { return std::move(inj_); }
    long long forced_collisions() const { return c2_; }

private:
    const Digraph& s_;
    const Digraph& t_;
    int n_;
    int r_ = 0;
    Injection inj_;
    Bitset unused_;
    std::vector<int> cnt_out_un_, cnt_in_un_; // per source vertex: unassigned out/in neighbors
    std::vector<int> un_out_, un_in_;         // per target vertex: unused out/in neighbors
    std::vector<std::vector<int>> img_out_, img_in_; // images of assigned out/in neighbors
    std::vector<long long> w_out_, w_in_;     // per used target: its preimage's cnt_*_un
    long long sa0_ = 0, ta0_ = 0, c1_ = 0, c2_ = 0;
};

Injection derandomized_pack(const Digraph& source, const Digraph& target, int q) {
    int n = source.order();
    ExpectationEngine engine(source, target);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = source.degree(a), db = source.degree(b);
        if (da != db) return da > db;
        return a < b;
    });

    for (int u : order) {
        long long b1 = engine.boundary_removal(u);
        int best_t = -1;
        __int128 best_num = 0;
        for (int t = engine.unused().find_first(); t != -1; t = engine.unused().find_next(t)) {
            __int128 num = engine.candidate_numerator(u, t, b1);
            if (best_t == -1 || num < best_num) {
                best_t = t;
                best_num = num;
            }
        }
        if (best_t == -1) throw InternalInvariantError("no unused target left");
        // the minimizing branch must stay below q+1; anything else is a bug
        if (best_num >= (__int128)(q + 1) * engine.denominator_after())
            throw InternalInvariantError("conditional expectation crossed q+1");
        engine.commit(u, best_t);
    }
    if (engine.forced_collisions() > q)
        throw InternalInvariantError("derandomized map exceeds q collisions");
    return engine.take_map();
}

// phase 1: seeded samples, lowest successful index wins
long long sample_phase(const Digraph& source, const Digraph& target, int q, std::uint64_t seed,
                       int cap, int threads) {
    if (cap <= 0) return -1;
    auto source_arcs = source.arcs();
    int n = source.order();
    auto try_sample = [&](long long i) {
        Rng rng(split_seed(seed, std::uint64_t(i)));
        auto sigma = random_permutation(n, rng);
        return collisions_of_bijection(sigma, source_arcs, target, q) <= q;
    };

    if (threads <= 1) {
        for (long long i = 0; i < cap; ++i)
            if (try_sample(i)) return i;
        return -1;
    }

    std::atomic<long long> next{0};
    std::atomic<long long> best{cap};
    auto worker = [&] {
        while (true) {
            long long i = next.fetch_add(1);
            if (i >= cap || i >= best.load()) break;
            if (try_sample(i)) {
                long long cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    long long found = best.load();
    return found < cap ? found : -1;
}

} // namespace

Rational expected_collisions(const Digraph& source, const Digraph& target) {
    require_equal_orders(source, target);
    int n = source.order();
    if (n < 2) throw RangeError("expected_collisions needs order >= 2");
    return Rational::from_i128((__int128)source.arc_count() * target.arc_count(),
                               (__int128)n * (n - 1));
}

Rational conditional_expected_collisions(const Digraph& source, const Digraph& target,
                                         const Injection& partial) {
    require_equal_orders(source, target);
    if (partial.source_order() != source.order() || partial.target_order() != target.order())
        throw ShapeError("partial map shape does not match digraphs");
    long long r = source.order() - partial.assigned_count();
    __int128 den = r >= 2 ? (__int128)r * (r - 1) : 1;
    __int128 one_free = r >= 2 ? r - 1 : 1; // den / r
    __int128 num = 0;
    auto target_arcs = target.arcs();
    for (auto [u, v] : source.arcs()) {
        bool au = partial.is_assigned(u), av = partial.is_assigned(v);
        int fu = partial.image(u), fv = partial.image(v);
        for (auto [up, vp] : target_arcs) {
            if (au && av) {
                if (fu == up && fv == vp) num += den;
            } else if (au) {
                if (fu == up && !partial.target_used(vp)) num += one_free;
            } else if (av) {
                if (fv == vp && !partial.target_used(up)) num += one_free;
            } else {
                if (!partial.target_used(up) && !partial.target_used(vp)) num += 1;
            }
        }
    }
    return Rational::from_i128(num, den);
}

PackingCertificate near_pack(const NearPackInstance& instance, const NearPackOptions& options) {
    const Digraph& source = instance.source;
    const Digraph& target = instance.target;
    require_equal_orders(source, target);
    if (instance.q < 0) throw RangeError("negative q");
    int n = source.order();
    if (n <= 1) { // no arcs can exist; identity map is vacuously a packing
        Injection id(n, n);
        for (int v = 0; v < n; ++v) id.assign(v, v);
        return certificate_from_map(std::move(id), source, target, instance.q, instance.seed);
    }

    long long product = (long long)source.arc_count() * target.arc_count();
    long long bound = (long long)(instance.q + 1) * n * (n - 1);
    if (product >= bound)
        throw HypothesisError("arc product " + std::to_string(product) + " is not below (q+1)n(n-1) = " +
                              std::to_string(bound));

    long long hit = sample_phase(source, target, instance.q, instance.seed, options.sample_cap,
                                 options.threads);
    if (hit >= 0) {
        Rng rng(split_seed(instance.seed, std::uint64_t(hit)));
        auto sigma = random_permutation(n, rng);
        Injection map(n, n);
        for (int u = 0; u < n; ++u) map.assign(u, sigma[u]);
        return certificate_from_map(std::move(map), source, target, instance.q, instance.seed);
    }

    return certificate_from_map(derandomized_pack(source, target, instance.q), source, target,
                                instance.q, instance.seed);
}

PackingCertificate sum_pack(const Digraph& source, const Digraph& target, std::uint64_t seed,
                            const NearPackOptions& options) {
    require_equal_orders(source, target);
    int n = source.order();
    long long sum = source.arc_count() + target.arc_count();
    if (n > 0 && sum > 2 * n - 2)
        throw HypothesisError("arc sum " + std::to_string(sum) + " exceeds 2n-2 = " +
                              std::to_string(2 * n - 2));
    return near_pack({source, target, 0, seed}, options);
}

} // namespace wojda
