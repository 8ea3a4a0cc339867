#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lackwalk/hypercube.hpp"

namespace lackwalk {

// One marked-vertex set: a star cluster of adjacent vertices plus
// (for the mixed scenario) pairwise-non-adjacent vertices.
struct MarkedSample {
    std::vector<VertexId> adjacent;
    std::vector<VertexId> non_adjacent;
    std::uint64_t seed = 0;

    std::vector<VertexId> all() const;
};

enum class ScenarioKind { Mixed, AdjacentOnly };

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_from_string(const std::string& tag);

// One sample group: `a` adjacent marked vertices; Mixed adds a-1
// non-adjacent vertices per sample (total 2a-1) redrawn per sample
// while the cluster stays fixed; AdjacentOnly is a single
// deterministic sample.
struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::AdjacentOnly;
    int a = 2;
    int samples = 1;
    std::uint64_t base_seed = 0;
};

int total_marked(const ScenarioSpec& spec);

// Star cluster: the center plus one neighbor per listed direction.
std::vector<VertexId> adjacent_cluster(const HypercubeDims& dims, int a, VertexId center,
                                       const std::vector<int>& directions);

// Uniform rejection sampling of `count` distinct vertices, each at
// Hamming distance >= 2 from every forbidden and previously chosen
// vertex. Throws after 10^6 failed draws.
std::vector<VertexId> sample_non_adjacent(const HypercubeDims& dims, int count,
                                          const std::vector<VertexId>& forbidden,
                                          std::mt19937_64& rng);

std::vector<MarkedSample> generate_group(const ScenarioSpec& spec, const HypercubeDims& dims);

}  // namespace lackwalk
