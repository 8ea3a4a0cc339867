#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lackwalk/hypercube.hpp"
#include "lackwalk/weights.hpp"

namespace lackwalk {

using Complex = std::complex<double>;

// Dense amplitudes over the (n+m)*N basis states |c, x>.
// Vertex-major layout: all coin components of a vertex are contiguous.
// Coin indices [0, n) are edge directions, [n, n+m) are self-loops.
struct StateVector {
    int coin_dim = 0;
    std::uint64_t num_vertices = 0;
    std::vector<Complex> amp;

    Complex& at(VertexId x, int c) { return amp[std::uint64_t{x} * coin_dim + c]; }
    const Complex& at(VertexId x, int c) const { return amp[std::uint64_t{x} * coin_dim + c]; }

    double squared_norm() const;
};

// Marked vertices and the number s of self-loops whose phase the
// oracle inverts at each of them (the first s loop indices).
struct OracleSpec {
    std::vector<VertexId> marked;
    int s = 1;
};

struct WalkResult {
    double p_max = 0.0;
    std::uint64_t t_max = 0;  // earliest step attaining p_max
    std::vector<double> p_history;  // per-step success probability, index = step
};

// Uniform superposition over vertices tensored with the weighted coin
// state: edge amplitude 1/(sqrt(n+l)*sqrt(N)), self-loop amplitude
// sqrt(l')/(sqrt(n+l)*sqrt(N)).
StateVector initial_state(const HypercubeDims& dims, const CoinSpec& coin);

// Negates, at each marked vertex, all n edge components and the first
// s self-loop components. Involutive.
void apply_oracle(StateVector& state, const OracleSpec& oracle, const CoinSpec& coin,
                  const HypercubeDims& dims);

// Grover coin on every vertex: psi <- 2<sC|psi> sC - psi, applied as a
// rank-1 update (never a dense matrix product).
void apply_coin(StateVector& state, const CoinSpec& coin, const HypercubeDims& dims);

// Flip-flop shift: psi(c, x) <-> psi(c, x ^ 2^c) for edge directions c;
// self-loop components are fixed points.
void apply_shift(StateVector& state, const HypercubeDims& dims);

// One walk step: oracle, then coin, then shift.
void step(StateVector& state, const HypercubeDims& dims, const CoinSpec& coin,
          const OracleSpec& oracle);

// Total probability of measuring any marked vertex.
double success_probability(const StateVector& state, const OracleSpec& oracle);

// Default evolution window: ceil((pi/2)*sqrt(N*(n+m)/k)) * mult,
// a generous multiple of the expected hitting time.
std::uint64_t default_budget(const HypercubeDims& dims, const CoinSpec& coin,
                             std::size_t k_marked, double mult = 3.0);

// Evolves from the initial state for t_budget steps, recording the
// success probability at t = 0 and after each full step (post-shift);
// returns the global maximum and the earliest step attaining it.
WalkResult run_walk(const HypercubeDims& dims, const CoinSpec& coin, const OracleSpec& oracle,
                    std::uint64_t t_budget, bool keep_history = false);

}  // namespace lackwalk
