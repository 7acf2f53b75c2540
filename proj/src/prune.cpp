#include "uepharq/prune.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace uepharq {

namespace {

void check_level(const UmCode& um, int j) {
    if (j < 0 || j >= um.q())
        throw std::invalid_argument("pruning level must be in [0, q-1]");
}

}  // namespace

PrunedSubcode prune(const UmCode& parent, int j) {
    check_level(parent, j);
    PrunedSubcode sub;
    sub.parent = parent;
    sub.level = j;
    sub.g0_pruned = parent.g0;
    sub.g1_pruned = parent.g1;
    for (int r = 0; r < j; ++r) {
        sub.g0_pruned.row(r) = BitVec(parent.g0.cols());
        sub.g1_pruned.row(r) = BitVec(parent.g1.cols());
    }
    sub.free_distance = free_distance(parent, j);
    return sub;
}

std::optional<int> free_distance(const UmCode& um, int level) {
    check_level(um, level);
    const int q = um.q();
    const std::uint64_t mask = (std::uint64_t{1} << level) - 1;

    std::vector<std::uint64_t> allowed;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << q); ++s)
        if ((s & mask) == 0)
            allowed.push_back(s);

    auto out_weight = [&](std::uint64_t p, std::uint64_t b) {
        BitVec c = vec_mat_mul(BitVec::from_uint(b, q), um.g0) ^
                   vec_mat_mul(BitVec::from_uint(p, q), um.g1);
        return static_cast<int>(c.weight());
    };

    // Dijkstra over allowed states; dist[s] = min weight of a path from the
    // zero state to s that has already diverged (first branch nonzero).
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> dist(std::size_t{1} << q, kInf);
    using Item = std::pair<int, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (std::uint64_t b : allowed) {
        if (b == 0)
            continue;
        const int w = out_weight(0, b);
        if (w < dist[b]) {
            dist[b] = w;
            pq.push({w, b});
        }
    }
    int best = kInf;
    while (!pq.empty()) {
        auto [d, p] = pq.top();
        pq.pop();
        if (d > dist[p])
            continue;
        best = std::min(best, d + out_weight(p, 0));
        for (std::uint64_t b : allowed) {
            if (b == 0)
                continue;
            const int nd = d + out_weight(p, b);
            if (nd < dist[b]) {
                dist[b] = nd;
                pq.push({nd, b});
            }
        }
    }
    if (best == kInf)
        return std::nullopt;
    return best;
}

DistanceProfile distance_profile(const ConvCodeSpec& spec, const BinMat& scrambler) {
    UmCode um = to_unit_memory(spec, scrambler);
    DistanceProfile prof;
    prof.scrambler = scrambler;
    for (int j = 0; j < spec.memory; ++j) {
        auto d = free_distance(um, j);
        if (!d)
            throw std::runtime_error("distance_profile: degenerate subcode at level " +
                                     std::to_string(j));
        prof.distances.push_back(*d);
    }
    return prof;
}

DistanceProfile search_scrambler(const ConvCodeSpec& spec, int objective_level) {
    const int q = spec.memory;
    if (q > 5)
        throw std::invalid_argument("search_scrambler: memory > 5 not supported");
    if (objective_level < 0 || objective_level >= q)
        throw std::invalid_argument("search_scrambler: objective level out of range");

    // prefers greater d_objective, then greater (d_{q-1},...,d_1), then the
    // earlier enumerated candidate
    auto better = [&](const DistanceProfile& a, const DistanceProfile& b) {
        if (a.distances[objective_level] != b.distances[objective_level])
            return a.distances[objective_level] > b.distances[objective_level];
        for (int j = q - 1; j >= 1; --j)
            if (a.distances[j] != b.distances[j])
                return a.distances[j] > b.distances[j];
        return false;
    };

    InvertibleMatrixEnumerator en(static_cast<std::size_t>(q));
    std::optional<DistanceProfile> best;
    while (auto m = en.next()) {
        DistanceProfile prof = distance_profile(spec, *m);
        if (!best || better(prof, *best))
            best = std::move(prof);
    }
    return *best;  // GL(q,2) is never empty
}

BinMat suboptimal_scrambler(const ConvCodeSpec& spec) {
    const int q = spec.memory;
    const BinMat ident = BinMat::identity(static_cast<std::size_t>(q));
    DistanceProfile id_prof = distance_profile(spec, ident);
    const int d0 = id_prof.distances[0];
    if (q == 1 || id_prof.distances[1] == d0)
        return ident;
    InvertibleMatrixEnumerator en(static_cast<std::size_t>(q));
    while (auto m = en.next()) {
        if (distance_profile(spec, *m).distances[1] == d0)
            return *m;
    }
    throw std::runtime_error("suboptimal_scrambler: no scrambler with d_1 == d_0");
}

}  // namespace uepharq
