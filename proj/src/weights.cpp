#include "lackwalk/weights.hpp"

#include <stdexcept>

namespace lackwalk {

std::string to_string(WeightScheme scheme) {
    switch (scheme) {
        case WeightScheme::NOverN: return "n_over_N";
        case WeightScheme::NOverNTimesK: return "n_over_N_times_k";
        case WeightScheme::N2OverN: return "n2_over_N";
        case WeightScheme::N2OverNTimesK: return "n2_over_N_times_k";
    }
    throw std::logic_error("unreachable scheme tag");
}

WeightScheme scheme_from_string(const std::string& tag) {
    for (WeightScheme s : kAllSchemes)
        if (to_string(s) == tag) return s;
    throw std::invalid_argument("unknown weight scheme: " + tag);
}

double compute_weight(WeightScheme scheme, const HypercubeDims& dims, int k) {
    if (k < 1) throw std::invalid_argument("marked-vertex count k must be >= 1");
    const double n = static_cast<double>(dims.n);
    const double N = static_cast<double>(dims.num_vertices);
    switch (scheme) {
        case WeightScheme::NOverN: return n / N;
        case WeightScheme::NOverNTimesK: return n / N * k;
        case WeightScheme::N2OverN: return n * n / N;
        case WeightScheme::N2OverNTimesK: return n * n / N * k;
    }
    throw std::logic_error("unreachable scheme tag");
}

CoinSpec make_coin_spec(WeightScheme scheme, const HypercubeDims& dims, int k, int m) {
    if (m < 1) throw std::invalid_argument("self-loop count m must be >= 1");
    CoinSpec coin;
    coin.m = m;
    coin.total_weight = compute_weight(scheme, dims, k);
    coin.loop_weight = coin.total_weight / m;
    coin.coin_dim = dims.n + m;
    return coin;
}

}  // namespace lackwalk
