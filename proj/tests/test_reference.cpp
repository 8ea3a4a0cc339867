#include <doctest.h>

#include <cmath>
#include <random>

#include "lackwalk/reference.hpp"

using namespace lackwalk;
using reference::DenseOperator;
using reference::OpLabel;
using reference::build_dense;
using reference::evolve_dense;

namespace {

double unitarity_defect(const DenseOperator& op) {
    // max |(U^dagger U - I)_{rc}|
    double worst = 0.0;
    for (std::size_t r = 0; r < op.dim; ++r)
        for (std::size_t c = 0; c < op.dim; ++c) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < op.dim; ++k)
                acc += std::conj(op.at(k, r)) * op.at(k, c);
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    return worst;
}

StateVector random_state(const HypercubeDims& dims, const CoinSpec& coin, std::uint64_t seed) {
    StateVector state;
    state.coin_dim = coin.coin_dim;
    state.num_vertices = dims.num_vertices;
    state.amp.resize(state.num_vertices * state.coin_dim);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    for (Complex& a : state.amp) a = Complex{normal(rng), normal(rng)};
    const double norm = std::sqrt(state.squared_norm());
    for (Complex& a : state.amp) a /= norm;
    return state;
}

}  // namespace

TEST_CASE("all dense operators are unitary") {
    const auto dims = HypercubeDims::make(3);
    const CoinSpec coin{2, 0.7, 0.35, 5};
    const OracleSpec oracle{{0, 3}, 1};
    for (OpLabel label : {OpLabel::Coin, OpLabel::Shift, OpLabel::Oracle, OpLabel::Step})
        CHECK(unitarity_defect(build_dense(label, dims, coin, &oracle)) < 1e-12);
}

TEST_CASE("oracle matrix is the expected signed diagonal") {
    const auto dims = HypercubeDims::make(2);
    const CoinSpec coin{2, 0.5, 0.25, 4};

    // No marked vertices: identity.
    const OracleSpec empty{{}, 1};
    const auto id = build_dense(OpLabel::Oracle, dims, coin, &empty);
    for (std::size_t r = 0; r < id.dim; ++r)
        for (std::size_t c = 0; c < id.dim; ++c)
            CHECK(id.at(r, c) == Complex{r == c ? 1.0 : 0.0});

    // m=2, s=1 at vertex 3: minus on both edges and loop 0, plus on loop 1.
    const OracleSpec one{{3}, 1};
    const auto q = build_dense(OpLabel::Oracle, dims, coin, &one);
    const std::size_t base = 3 * coin.coin_dim;
    CHECK(q.at(base + 0, base + 0) == Complex{-1.0});
    CHECK(q.at(base + 1, base + 1) == Complex{-1.0});
    CHECK(q.at(base + 2, base + 2) == Complex{-1.0});
    CHECK(q.at(base + 3, base + 3) == Complex{1.0});
    for (std::size_t i = 0; i < base; ++i) CHECK(q.at(i, i) == Complex{1.0});
}

TEST_CASE("coin matrix rows match the hand-computed reflection (n=3, m=1, l=3)") {
    const auto dims = HypercubeDims::make(3);
    // l = l' = 3 gives sC = (1,1,1, sqrt(3))/sqrt(6).
    const CoinSpec coin{1, 3.0, 3.0, 4};
    const auto c = build_dense(OpLabel::Coin, dims, coin);
    const double s3 = std::sqrt(3.0);
    const double expected[4][4] = {
        {2.0 / 6.0 - 1.0, 2.0 / 6.0, 2.0 / 6.0, 2.0 * s3 / 6.0},
        {2.0 / 6.0, 2.0 / 6.0 - 1.0, 2.0 / 6.0, 2.0 * s3 / 6.0},
        {2.0 / 6.0, 2.0 / 6.0, 2.0 / 6.0 - 1.0, 2.0 * s3 / 6.0},
        {2.0 * s3 / 6.0, 2.0 * s3 / 6.0, 2.0 * s3 / 6.0, 2.0 * 3.0 / 6.0 - 1.0}};
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col)
            CHECK(c.at(r, col).real() == doctest::Approx(expected[r][col]).epsilon(1e-14));
}

TEST_CASE("shift matrix is a symmetric permutation") {
    const auto dims = HypercubeDims::make(3);
    const CoinSpec coin{1, 0.5, 0.5, 4};
    const auto s = build_dense(OpLabel::Shift, dims, coin);
    for (std::size_t r = 0; r < s.dim; ++r) {
        int ones = 0;
        for (std::size_t c = 0; c < s.dim; ++c) {
            CHECK((s.at(r, c) == Complex{0.0} || s.at(r, c) == Complex{1.0}));
            CHECK(s.at(r, c) == s.at(c, r));
            if (s.at(r, c) == Complex{1.0}) ++ones;
        }
        CHECK(ones == 1);
    }
}

TEST_CASE("size guard rejects large hypercubes") {
    const auto dims = HypercubeDims::make(12);
    const CoinSpec coin{1, 0.1, 0.1, 13};
    CHECK_THROWS_AS(build_dense(OpLabel::Coin, dims, coin), std::invalid_argument);
}

TEST_CASE("dense single-op application matches the structured engine") {
    const auto dims = HypercubeDims::make(3);
    const CoinSpec coin{2, 0.6, 0.3, 5};
    const OracleSpec oracle{{1, 6}, 2};

    for (auto [label, apply] : {
             std::pair<OpLabel, void (*)(StateVector&, const HypercubeDims&, const CoinSpec&,
                                         const OracleSpec&)>{
                 OpLabel::Oracle,
                 [](StateVector& st, const HypercubeDims& d, const CoinSpec& cs,
                    const OracleSpec& o) { apply_oracle(st, o, cs, d); }},
             {OpLabel::Coin,
              [](StateVector& st, const HypercubeDims& d, const CoinSpec& cs,
                 const OracleSpec&) { apply_coin(st, cs, d); }},
             {OpLabel::Shift,
              [](StateVector& st, const HypercubeDims& d, const CoinSpec&,
                 const OracleSpec&) { apply_shift(st, d); }},
         }) {
        const auto op = build_dense(label, dims, coin, &oracle);
        auto structured = random_state(dims, coin, 40 + static_cast<int>(label));
        const auto dense = evolve_dense(op, structured, 1);
        apply(structured, dims, coin, oracle);
        double worst = 0.0;
        for (std::size_t i = 0; i < dense.amp.size(); ++i)
            worst = std::max(worst, std::abs(dense.amp[i] - structured.amp[i]));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("dense step evolution: t=0 identity and adjoint round-trip") {
    const auto dims = HypercubeDims::make(3);
    const CoinSpec coin{1, 0.5, 0.5, 4};
    const OracleSpec oracle{{0}, 1};
    const auto u = build_dense(OpLabel::Step, dims, coin, &oracle);

    const auto state = random_state(dims, coin, 77);
    const auto same = evolve_dense(u, state, 0);
    CHECK(same.amp == state.amp);

    // U^dagger in the same container.
    DenseOperator adj = u;
    for (std::size_t r = 0; r < u.dim; ++r)
        for (std::size_t c = 0; c < u.dim; ++c) adj.at(r, c) = std::conj(u.at(c, r));
    const auto round = evolve_dense(adj, evolve_dense(u, state, 2), 2);
    double worst = 0.0;
    for (std::size_t i = 0; i < state.amp.size(); ++i)
        worst = std::max(worst, std::abs(round.amp[i] - state.amp[i]));
    CHECK(worst < 1e-10);
}

TEST_CASE("structured engine matches dense step over 25 steps") {
    const auto dims = HypercubeDims::make(3);
    const auto coin = make_coin_spec(WeightScheme::N2OverN, dims, 2, 2);
    const OracleSpec oracle{{0, 3}, 1};
    const auto u = build_dense(OpLabel::Step, dims, coin, &oracle);

    auto structured = initial_state(dims, coin);
    const auto dense = evolve_dense(u, structured, 25);
    for (int t = 0; t < 25; ++t) step(structured, dims, coin, oracle);

    double worst = 0.0;
    for (std::size_t i = 0; i < dense.amp.size(); ++i)
        worst = std::max(worst, std::abs(dense.amp[i] - structured.amp[i]));
    CHECK(worst < 1e-10);
}
