#include "lackwalk/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lackwalk {

std::vector<VertexId> MarkedSample::all() const {
    std::vector<VertexId> out = adjacent;
    out.insert(out.end(), non_adjacent.begin(), non_adjacent.end());
    return out;
}

std::string to_string(ScenarioKind kind) {
    return kind == ScenarioKind::Mixed ? "mixed" : "adjacent";
}

ScenarioKind scenario_from_string(const std::string& tag) {
    if (tag == "mixed") return ScenarioKind::Mixed;
    if (tag == "adjacent") return ScenarioKind::AdjacentOnly;
    throw std::invalid_argument("unknown scenario: " + tag);
}

int total_marked(const ScenarioSpec& spec) {
    return spec.kind == ScenarioKind::Mixed ? 2 * spec.a - 1 : spec.a;
}

std::vector<VertexId> adjacent_cluster(const HypercubeDims& dims, int a, VertexId center,
                                       const std::vector<int>& directions) {
    if (a < 2 || a > dims.n + 1)
        throw std::invalid_argument("adjacent cluster size must be in [2, n+1]");
    if (static_cast<int>(directions.size()) != a - 1)
        throw std::invalid_argument("adjacent cluster needs a-1 distinct directions");

    std::vector<VertexId> cluster;
    cluster.reserve(a);
    cluster.push_back(center);
    for (int d : directions) {
        VertexId v = neighbor(dims, center, d);
        if (std::find(cluster.begin(), cluster.end(), v) != cluster.end())
            throw std::invalid_argument("duplicate direction in adjacent cluster");
        cluster.push_back(v);
    }
    return cluster;
}

std::vector<VertexId> sample_non_adjacent(const HypercubeDims& dims, int count,
                                          const std::vector<VertexId>& forbidden,
                                          std::mt19937_64& rng) {
    if (count < 0) throw std::invalid_argument("non-adjacent count must be >= 0");

    std::uniform_int_distribution<std::uint64_t> dist(0, dims.num_vertices - 1);
    std::vector<VertexId> chosen;
    chosen.reserve(count);

    constexpr int kMaxDraws = 1'000'000;
    int draws = 0;
    auto far_from = [](VertexId v, const std::vector<VertexId>& vs) {
        return std::all_of(vs.begin(), vs.end(),
                           [v](VertexId u) { return hamming_distance(v, u) >= 2; });
    };

    while (static_cast<int>(chosen.size()) < count) {
        if (++draws > kMaxDraws)
            throw std::runtime_error("non-adjacent sampling exceeded rejection budget");
        VertexId v = static_cast<VertexId>(dist(rng));
        if (far_from(v, forbidden) && far_from(v, chosen)) chosen.push_back(v);
    }
    return chosen;
}

std::vector<MarkedSample> generate_group(const ScenarioSpec& spec, const HypercubeDims& dims) {
    // The cluster is always the paper's star around vertex 0 with
    // directions 0, 1, 2, ...
    std::vector<int> directions(spec.a - 1);
    for (int i = 0; i < spec.a - 1; ++i) directions[i] = i;
    const std::vector<VertexId> cluster = adjacent_cluster(dims, spec.a, 0, directions);

    std::vector<MarkedSample> samples;
    if (spec.kind == ScenarioKind::AdjacentOnly) {
        samples.push_back(MarkedSample{cluster, {}, spec.base_seed});
        return samples;
    }

    samples.reserve(spec.samples);
    for (int i = 0; i < spec.samples; ++i) {
        // Stable per-sample seed: reruns and partial reruns see the
        // same marked sets.
        const std::uint64_t seed =
            spec.base_seed + std::uint64_t{1000} * static_cast<std::uint64_t>(spec.a) +
            static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(seed);
        MarkedSample sample;
        sample.adjacent = cluster;
        sample.non_adjacent = sample_non_adjacent(dims, spec.a - 1, cluster, rng);
        sample.seed = seed;
        samples.push_back(std::move(sample));
    }
    return samples;
}

}  // namespace lackwalk
