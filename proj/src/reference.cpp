#include "lackwalk/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lackwalk::reference {

namespace {

DenseOperator zero(OpLabel label, std::size_t dim) {
    DenseOperator op;
    op.label = label;
    op.dim = dim;
    op.mat.assign(dim * dim, Complex{0.0});
    return op;
}

DenseOperator identity(OpLabel label, std::size_t dim) {
    DenseOperator op = zero(label, dim);
    for (std::size_t i = 0; i < dim; ++i) op.at(i, i) = 1.0;
    return op;
}

DenseOperator multiply(OpLabel label, const DenseOperator& a, const DenseOperator& b) {
    DenseOperator out = zero(label, a.dim);
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t k = 0; k < a.dim; ++k) {
            const Complex ark = a.at(r, k);
            if (ark == Complex{0.0}) continue;
            for (std::size_t c = 0; c < a.dim; ++c) out.at(r, c) += ark * b.at(k, c);
        }
    return out;
}

std::size_t index(const HypercubeDims&, const CoinSpec& coin, VertexId x, int c) {
    return std::uint64_t{x} * coin.coin_dim + c;
}

}  // namespace

DenseOperator build_dense(OpLabel label, const HypercubeDims& dims, const CoinSpec& coin,
                          const OracleSpec* oracle) {
    const std::size_t dim = dims.num_vertices * coin.coin_dim;
    if (dim > 4096) throw std::invalid_argument("dense reference limited to (n+m)*N <= 4096");

    switch (label) {
        case OpLabel::Oracle: {
            if (oracle == nullptr) throw std::invalid_argument("oracle spec required");
            DenseOperator op = identity(OpLabel::Oracle, dim);
            for (VertexId w : oracle->marked)
                for (int c = 0; c < dims.n + oracle->s; ++c) {
                    const std::size_t i = index(dims, coin, w, c);
                    op.at(i, i) = -1.0;
                }
            return op;
        }
        case OpLabel::Shift: {
            DenseOperator op = zero(OpLabel::Shift, dim);
            for (VertexId x = 0; x < dims.num_vertices; ++x) {
                for (int c = 0; c < dims.n; ++c)
                    op.at(index(dims, coin, neighbor(dims, x, c), c), index(dims, coin, x, c)) =
                        1.0;
                for (int c = dims.n; c < coin.coin_dim; ++c)
                    op.at(index(dims, coin, x, c), index(dims, coin, x, c)) = 1.0;
            }
            return op;
        }
        case OpLabel::Coin: {
            // I_N tensor (2|sC><sC| - I)
            const double inv = 1.0 / std::sqrt(dims.n + coin.total_weight);
            std::vector<double> sc(coin.coin_dim);
            for (int c = 0; c < dims.n; ++c) sc[c] = inv;
            for (int c = dims.n; c < coin.coin_dim; ++c)
                sc[c] = std::sqrt(coin.loop_weight) * inv;

            DenseOperator op = zero(OpLabel::Coin, dim);
            for (VertexId x = 0; x < dims.num_vertices; ++x)
                for (int r = 0; r < coin.coin_dim; ++r)
                    for (int c = 0; c < coin.coin_dim; ++c)
                        op.at(index(dims, coin, x, r), index(dims, coin, x, c)) =
                            2.0 * sc[r] * sc[c] - (r == c ? 1.0 : 0.0);
            return op;
        }
        case OpLabel::Step: {
            const DenseOperator q = build_dense(OpLabel::Oracle, dims, coin, oracle);
            const DenseOperator c = build_dense(OpLabel::Coin, dims, coin);
            const DenseOperator s = build_dense(OpLabel::Shift, dims, coin);
            return multiply(OpLabel::Step, s, multiply(OpLabel::Step, c, q));
        }
    }
    throw std::logic_error("unreachable operator label");
}

StateVector evolve_dense(const DenseOperator& op, StateVector state, std::uint64_t t) {
    if (state.amp.size() != op.dim) throw std::invalid_argument("dimension mismatch");
    std::vector<Complex> next(op.dim);
    for (std::uint64_t it = 0; it < t; ++it) {
        for (std::size_t r = 0; r < op.dim; ++r) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < op.dim; ++c) acc += op.at(r, c) * state.amp[c];
            next[r] = acc;
        }
        state.amp.swap(next);
    }
    return state;
}

}  // namespace lackwalk::reference
