#pragma once

#include <complex>
#include <vector>

#include "lackwalk/walk.hpp"

namespace lackwalk::reference {

// Dense brute-force operators on tiny hypercubes, used as the
// independent check for the structured engine. Same vertex-major
// basis ordering as StateVector, so comparisons are index-by-index.
enum class OpLabel { Coin, Shift, Oracle, Step };

struct DenseOperator {
    OpLabel label;
    std::size_t dim = 0;  // (n+m)*N
    std::vector<Complex> mat;  // row-major

    Complex& at(std::size_t r, std::size_t c) { return mat[r * dim + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return mat[r * dim + c]; }
};

// oracle may be null for Coin and Shift. Guarded to (n+m)*N <= 4096.
DenseOperator build_dense(OpLabel label, const HypercubeDims& dims, const CoinSpec& coin,
                          const OracleSpec* oracle = nullptr);

StateVector evolve_dense(const DenseOperator& op, StateVector state, std::uint64_t t);

}  // namespace lackwalk::reference
