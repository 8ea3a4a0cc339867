#pragma once

#include <array>
#include <string>

#include "lackwalk/hypercube.hpp"

namespace lackwalk {

// The four self-loop weight schemes under study.
enum class WeightScheme {
    NOverN,         // l = n/N
    NOverNTimesK,   // l = (n/N)*k
    N2OverN,        // l = n^2/N
    N2OverNTimesK,  // l = (n^2/N)*k
};

constexpr std::array<WeightScheme, 4> kAllSchemes = {
    WeightScheme::NOverN, WeightScheme::NOverNTimesK,
    WeightScheme::N2OverN, WeightScheme::N2OverNTimesK};

std::string to_string(WeightScheme scheme);
WeightScheme scheme_from_string(const std::string& tag);

// Coin-space geometry for a walk with m self-loops per vertex.
// The total weight l is split evenly: each loop carries l' = l/m.
struct CoinSpec {
    int m = 1;
    double total_weight = 0.0;  // l
    double loop_weight = 0.0;   // l' = l/m
    int coin_dim = 0;           // n + m
};

// k is the number of marked vertices (only the *k schemes use it).
double compute_weight(WeightScheme scheme, const HypercubeDims& dims, int k);

CoinSpec make_coin_spec(WeightScheme scheme, const HypercubeDims& dims, int k, int m);

}  // namespace lackwalk
