#include "lackwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lackwalk {

double StateVector::squared_norm() const {
    // Kahan summation; naive accumulation over ~10^5 terms loses more
    // than the 1e-12 norm tolerance.
    double total = 0.0, carry = 0.0;
    for (const Complex& a : amp) {
        const double y = std::norm(a) - carry;
        const double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
    return total;
}

StateVector initial_state(const HypercubeDims& dims, const CoinSpec& coin) {
    StateVector state;
    state.coin_dim = coin.coin_dim;
    state.num_vertices = dims.num_vertices;
    state.amp.resize(state.num_vertices * state.coin_dim);

    const double scale = 1.0 / (std::sqrt(dims.n + coin.total_weight) *
                                std::sqrt(static_cast<double>(dims.num_vertices)));
    const double edge_amp = scale;
    const double loop_amp = std::sqrt(coin.loop_weight) * scale;

    for (std::uint64_t x = 0; x < state.num_vertices; ++x) {
        Complex* v = state.amp.data() + x * state.coin_dim;
        for (int c = 0; c < dims.n; ++c) v[c] = edge_amp;
        for (int c = dims.n; c < state.coin_dim; ++c) v[c] = loop_amp;
    }
    return state;
}

void apply_oracle(StateVector& state, const OracleSpec& oracle, const CoinSpec& coin,
                  const HypercubeDims& dims) {
    if (oracle.s < 1 || oracle.s > coin.m)
        throw std::invalid_argument("inverted self-loop count s must satisfy 1 <= s <= m");
    const int flipped = dims.n + oracle.s;  // edges plus the first s loops
    for (VertexId w : oracle.marked) {
        if (w >= state.num_vertices)
            throw std::invalid_argument("marked vertex out of range");
        Complex* v = state.amp.data() + std::uint64_t{w} * state.coin_dim;
        for (int c = 0; c < flipped; ++c) v[c] = -v[c];
    }
}

void apply_coin(StateVector& state, const CoinSpec& coin, const HypercubeDims& dims) {
    const double inv = 1.0 / std::sqrt(dims.n + coin.total_weight);
    const double edge_w = inv;
    const double loop_w = std::sqrt(coin.loop_weight) * inv;

    const int dim = state.coin_dim;
    for (std::uint64_t x = 0; x < state.num_vertices; ++x) {
        Complex* v = state.amp.data() + x * dim;
        Complex dot = 0.0;
        for (int c = 0; c < dims.n; ++c) dot += v[c];
        dot *= edge_w;
        Complex loop_sum = 0.0;
        for (int c = dims.n; c < dim; ++c) loop_sum += v[c];
        dot += loop_w * loop_sum;

        const Complex edge_upd = 2.0 * dot * edge_w;
        const Complex loop_upd = 2.0 * dot * loop_w;
        for (int c = 0; c < dims.n; ++c) v[c] = edge_upd - v[c];
        for (int c = dims.n; c < dim; ++c) v[c] = loop_upd - v[c];
    }
}

void apply_shift(StateVector& state, const HypercubeDims& dims) {
    const int dim = state.coin_dim;
    for (int c = 0; c < dims.n; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        for (std::uint64_t x = 0; x < state.num_vertices; ++x) {
            if (x & bit) continue;  // visit each edge once
            std::swap(state.amp[x * dim + c], state.amp[(x ^ bit) * dim + c]);
        }
    }
}

void step(StateVector& state, const HypercubeDims& dims, const CoinSpec& coin,
          const OracleSpec& oracle) {
    apply_oracle(state, oracle, coin, dims);
    apply_coin(state, coin, dims);
    apply_shift(state, dims);
}

double success_probability(const StateVector& state, const OracleSpec& oracle) {
    double p = 0.0;
    for (VertexId w : oracle.marked) {
        const Complex* v = state.amp.data() + std::uint64_t{w} * state.coin_dim;
        for (int c = 0; c < state.coin_dim; ++c) p += std::norm(v[c]);
    }
    return p;
}

std::uint64_t default_budget(const HypercubeDims& dims, const CoinSpec& coin,
                             std::size_t k_marked, double mult) {
    if (k_marked == 0) throw std::invalid_argument("budget needs at least one marked vertex");
    const double hitting = std::numbers::pi / 2.0 *
                           std::sqrt(static_cast<double>(dims.num_vertices) * coin.coin_dim /
                                     static_cast<double>(k_marked));
    return static_cast<std::uint64_t>(std::ceil(hitting) * mult);
}

WalkResult run_walk(const HypercubeDims& dims, const CoinSpec& coin, const OracleSpec& oracle,
                    std::uint64_t t_budget, bool keep_history) {
    StateVector state = initial_state(dims, coin);

    WalkResult result;
    result.p_max = success_probability(state, oracle);
    result.t_max = 0;
    if (keep_history) {
        result.p_history.reserve(t_budget + 1);
        result.p_history.push_back(result.p_max);
    }

    for (std::uint64_t t = 1; t <= t_budget; ++t) {
        step(state, dims, coin, oracle);
        const double p = success_probability(state, oracle);
        if (keep_history) result.p_history.push_back(p);
        if (p > result.p_max) {
            result.p_max = p;
            result.t_max = t;
        }
    }
    return result;
}

}  // namespace lackwalk
