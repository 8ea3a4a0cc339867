#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lackwalk {

// Vertices of the n-dimensional hypercube are their n-bit labels.
// Direction i flips bit i (LSB = direction 0), so adjacency is pure
// bit arithmetic and no explicit graph structure is stored.
using VertexId = std::uint32_t;

struct HypercubeDims {
    int n = 0;
    std::uint64_t num_vertices = 0;  // 2^n

    static HypercubeDims make(int n) {
        if (n < 2 || n > 24)
            throw std::invalid_argument("hypercube dimension must be in [2, 24], got " +
                                        std::to_string(n));
        return HypercubeDims{n, std::uint64_t{1} << n};
    }
};

inline VertexId neighbor(const HypercubeDims& dims, VertexId x, int direction) {
    if (direction < 0 || direction >= dims.n)
        throw std::invalid_argument("direction index out of range");
    return x ^ (VertexId{1} << direction);
}

inline int hamming_distance(VertexId x, VertexId y) {
    return std::popcount(x ^ y);
}

inline bool is_adjacent(VertexId x, VertexId y) {
    return hamming_distance(x, y) == 1;
}

}  // namespace lackwalk
