#include "lackwalk/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace lackwalk {

std::string to_string(FitModel model) {
    return model == FitModel::SqrtDim ? "sqrt_dim" : "log_m";
}

FitModel fit_model_from_string(const std::string& tag) {
    if (tag == "sqrt_dim") return FitModel::SqrtDim;
    if (tag == "log_m") return FitModel::LogM;
    throw std::invalid_argument("unknown fit model: " + tag);
}

std::vector<ExperimentRecord> run_scenario(const ScenarioSpec& spec,
                                           const std::vector<WeightScheme>& schemes,
                                           const std::vector<int>& m_values,
                                           const HypercubeDims& dims, int s,
                                           double budget_mult, int jobs) {
    const std::vector<MarkedSample> samples = generate_group(spec, dims);
    const int k_total = total_marked(spec);

    std::vector<ExperimentRecord> records;
    records.reserve(schemes.size() * samples.size() * m_values.size());
    for (WeightScheme scheme : schemes)
        for (std::size_t i = 0; i < samples.size(); ++i)
            for (int m : m_values) {
                ExperimentRecord rec;
                rec.scenario = spec.kind;
                rec.scheme = scheme;
                rec.a = spec.a;
                rec.total_marked = k_total;
                rec.m = m;
                rec.sample = static_cast<int>(i);
                rec.seed = samples[i].seed;
                rec.skipped = (s > m);
                records.push_back(rec);
            }

    auto execute = [&](ExperimentRecord& rec) {
        if (rec.skipped) return;
        const auto start = std::chrono::steady_clock::now();
        const CoinSpec coin = make_coin_spec(rec.scheme, dims, k_total, rec.m);
        const OracleSpec oracle{samples[rec.sample].all(), s};
        const WalkResult result =
            run_walk(dims, coin, oracle, default_budget(dims, coin, oracle.marked.size(), budget_mult));
        rec.p_max = result.p_max;
        rec.t_max = result.t_max;
        rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    if (jobs <= 1) {
        for (ExperimentRecord& rec : records) execute(rec);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1))
                    execute(records[i]);
            });
        for (std::thread& t : pool) t.join();
    }
    return records;
}

std::vector<GroupSummary> summarize(const std::vector<ExperimentRecord>& records) {
    using Key = std::tuple<ScenarioKind, WeightScheme, int, int>;  // scenario, scheme, total, m
    std::map<Key, std::vector<double>> groups;
    for (const ExperimentRecord& rec : records) {
        if (rec.skipped) continue;
        groups[{rec.scenario, rec.scheme, rec.total_marked, rec.m}].push_back(rec.p_max);
    }
    if (groups.empty()) throw std::invalid_argument("no executed records to summarize");

    std::vector<GroupSummary> summaries;
    summaries.reserve(groups.size());
    for (const auto& [key, ps] : groups) {
        GroupSummary sum;
        std::tie(sum.scenario, sum.scheme, sum.total_marked, sum.m) = key;
        sum.n_samples = static_cast<int>(ps.size());
        double mean = 0.0;
        for (double p : ps) mean += p;
        mean /= ps.size();
        sum.mean_p = mean;
        if (ps.size() > 1 && mean > 0.0) {
            double ss = 0.0;
            for (double p : ps) ss += (p - mean) * (p - mean);
            sum.cv_percent = 100.0 * std::sqrt(ss / (ps.size() - 1)) / mean;
        }
        summaries.push_back(sum);
    }

    // Flag the best m per (scenario, scheme, total) group.
    std::map<std::tuple<ScenarioKind, WeightScheme, int>, GroupSummary*> best;
    for (GroupSummary& sum : summaries) {
        auto [it, inserted] = best.try_emplace({sum.scenario, sum.scheme, sum.total_marked}, &sum);
        if (inserted) continue;
        const double cur = std::round(it->second->mean_p * 1000.0);
        const double cand = std::round(sum.mean_p * 1000.0);
        if (cand > cur || (cand == cur && sum.m < it->second->m)) it->second = &sum;
    }
    for (auto& [key, sum] : best) sum->is_best = true;
    return summaries;
}

std::pair<int, double> best_m(const std::vector<GroupSummary>& summaries, ScenarioKind scenario,
                              WeightScheme scheme, int total_marked) {
    const GroupSummary* found = nullptr;
    for (const GroupSummary& sum : summaries)
        if (sum.is_best && sum.scenario == scenario && sum.scheme == scheme &&
            sum.total_marked == total_marked)
            found = &sum;
    if (found == nullptr) throw std::invalid_argument("group not present in summaries");
    return {found->m, found->mean_p};
}

FitResult fit_scaling(const std::vector<std::pair<double, double>>& points, FitModel model) {
    if (points.size() < 3) throw std::invalid_argument("fit needs at least 3 points");
    for (const auto& [x, t] : points)
        if (x <= 0.0) throw std::invalid_argument("fit abscissae must be positive");

    FitResult fit;
    fit.model = model;
    fit.points = points;

    const std::size_t n = points.size();
    double mean_t = 0.0;
    for (const auto& [x, t] : points) mean_t += t;
    mean_t /= n;

    std::vector<double> predicted(n);
    if (model == FitModel::SqrtDim) {
        // One-parameter least squares of T against sqrt(x).
        double num = 0.0, den = 0.0;
        for (const auto& [x, t] : points) {
            const double b = std::sqrt(x);
            num += b * t;
            den += b * b;
        }
        if (den == 0.0) throw std::invalid_argument("degenerate design matrix");
        const double c = num / den;
        fit.coefficients = {c};
        for (std::size_t i = 0; i < n; ++i) predicted[i] = c * std::sqrt(points[i].first);
    } else {
        // Ordinary least squares of T against ln(x) with intercept.
        double sx = 0.0, sxx = 0.0, sxt = 0.0, st = 0.0;
        for (const auto& [x, t] : points) {
            const double u = std::log(x);
            sx += u;
            sxx += u * u;
            sxt += u * t;
            st += t;
        }
        const double det = n * sxx - sx * sx;
        if (std::abs(det) < 1e-12) throw std::invalid_argument("degenerate design matrix");
        const double c1 = (n * sxt - sx * st) / det;
        const double c0 = (st - c1 * sx) / n;
        fit.coefficients = {c1, c0};
        for (std::size_t i = 0; i < n; ++i)
            predicted[i] = c1 * std::log(points[i].first) + c0;
    }

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ss_res += (points[i].second - predicted[i]) * (points[i].second - predicted[i]);
        ss_tot += (points[i].second - mean_t) * (points[i].second - mean_t);
    }
    fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

namespace {

std::string prob6(double p) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << p;
    return os.str();
}

}  // namespace

void write_results_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << "scenario,scheme,a,total_marked,m,sample,seed,p_max,t_max,wall_s\n";
    for (const ExperimentRecord& rec : records) {
        out << to_string(rec.scenario) << ',' << to_string(rec.scheme) << ',' << rec.a << ','
            << rec.total_marked << ',' << rec.m << ',' << rec.sample << ',' << rec.seed << ',';
        if (rec.skipped) {
            out << ",,\n";  // skipped combination (s > m), kept for audit
        } else {
            out << prob6(rec.p_max) << ',' << rec.t_max << ',' << prob6(rec.wall_seconds)
                << '\n';
        }
    }
}

void write_summary_csv(std::ostream& out, const std::vector<GroupSummary>& summaries) {
    out << "scenario,scheme,total_marked,m,mean_p,cv_percent,n_samples,is_best\n";
    for (const GroupSummary& sum : summaries) {
        out << to_string(sum.scenario) << ',' << to_string(sum.scheme) << ','
            << sum.total_marked << ',' << sum.m << ',' << prob6(sum.mean_p) << ',';
        if (sum.cv_percent) out << prob6(*sum.cv_percent);
        out << ',' << sum.n_samples << ',' << (sum.is_best ? 1 : 0) << '\n';
    }
}

}  // namespace lackwalk
