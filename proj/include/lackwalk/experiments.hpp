#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "lackwalk/sampling.hpp"
#include "lackwalk/walk.hpp"

namespace lackwalk {

// One (scheme, group, sample, m) walk outcome. Combinations with
// s > m are kept as skipped rows so sweeps stay auditable.
struct ExperimentRecord {
    ScenarioKind scenario;
    WeightScheme scheme;
    int a = 0;
    int total_marked = 0;
    int m = 0;
    int sample = 0;
    std::uint64_t seed = 0;
    bool skipped = false;
    double p_max = 0.0;
    std::uint64_t t_max = 0;
    double wall_seconds = 0.0;
};

struct GroupSummary {
    ScenarioKind scenario;
    WeightScheme scheme;
    int total_marked = 0;
    int m = 0;
    double mean_p = 0.0;
    std::optional<double> cv_percent;  // absent for single-sample groups
    int n_samples = 0;
    bool is_best = false;  // argmax of mean_p over m within the group
};

enum class FitModel {
    SqrtDim,  // T = c * sqrt(x)
    LogM,     // T = c1 * ln(x) + c0
};

std::string to_string(FitModel model);
FitModel fit_model_from_string(const std::string& tag);

struct FitResult {
    FitModel model;
    std::vector<double> coefficients;  // SqrtDim: {c}; LogM: {c1, c0}
    double r2 = 0.0;
    std::vector<std::pair<double, double>> points;
};

// Runs one sample group across schemes and m values; one record per
// (scheme, sample, m). Walks execute on up to `jobs` threads; record
// ordering is deterministic regardless of interleaving.
std::vector<ExperimentRecord> run_scenario(const ScenarioSpec& spec,
                                           const std::vector<WeightScheme>& schemes,
                                           const std::vector<int>& m_values,
                                           const HypercubeDims& dims, int s,
                                           double budget_mult = 3.0, int jobs = 1);

// Mean and coefficient of variation per (scenario, scheme, total, m),
// with the best-m flag set per (scenario, scheme, total) group.
std::vector<GroupSummary> summarize(const std::vector<ExperimentRecord>& records);

// Best (m, mean_p) for a group; means tied to 3 decimals resolve to
// the smallest m.
std::pair<int, double> best_m(const std::vector<GroupSummary>& summaries, ScenarioKind scenario,
                              WeightScheme scheme, int total_marked);

FitResult fit_scaling(const std::vector<std::pair<double, double>>& points, FitModel model);

void write_results_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<GroupSummary>& summaries);

}  // namespace lackwalk
