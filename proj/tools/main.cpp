// Experiment CLI for the multi-self-loop lackadaisical quantum walk.
//
// Subcommands:
//   run     full sweep -> results.csv, summary.csv, fits.json, manifest.json
//   walk    single walk, optional per-step probability trace
//   fit     scaling-curve fits from existing results.csv files
//   sample  emit marked-vertex sets as JSON

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lackwalk/experiments.hpp"
#include "lackwalk/reference.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace lackwalk;

namespace {

constexpr const char* kVersion = "1.0.0";

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw CLI::ValidationError("range", "empty range: " + text);
        for (int v = lo; v <= hi; ++v) values.push_back(v);
        return values;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(std::stoi(item));
    if (values.empty()) throw CLI::ValidationError("range", "empty list: " + text);
    return values;
}

std::vector<WeightScheme> parse_schemes(const std::string& text) {
    if (text == "all")
        return {kAllSchemes.begin(), kAllSchemes.end()};
    std::vector<WeightScheme> schemes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) schemes.push_back(scheme_from_string(item));
    if (schemes.empty()) throw CLI::ValidationError("schemes", "no schemes given");
    return schemes;
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

// All outputs go through write-to-temp then rename, so files are
// either fully written or absent.
void write_file(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

struct RunConfig {
    std::string scenario = "adjacent";
    int n = 12;
    std::string a = "";  // default depends on scenario
    std::string m = "1..30";
    int s = 1;
    std::string schemes = "all";
    int samples = 10;
    std::uint64_t seed = 12345;
    double budget_mult = 3.0;
    std::string out_dir = "out";
    int jobs = 1;
    bool sidecar = false;
};

json config_to_json(const RunConfig& cfg) {
    return json{{"scenario", cfg.scenario}, {"n", cfg.n},       {"a", cfg.a},
                {"m", cfg.m},               {"s", cfg.s},       {"schemes", cfg.schemes},
                {"samples", cfg.samples},   {"seed", cfg.seed}, {"budget_mult", cfg.budget_mult},
                {"out", cfg.out_dir},       {"jobs", cfg.jobs}, {"sidecar", cfg.sidecar}};
}

void config_from_json(const json& j, RunConfig& cfg) {
    static const std::map<std::string, int> known = {
        {"scenario", 0}, {"n", 0},    {"a", 0},           {"m", 0},   {"s", 0},    {"schemes", 0},
        {"samples", 0},  {"seed", 0}, {"budget_mult", 0}, {"out", 0}, {"jobs", 0}, {"sidecar", 0}};
    for (const auto& [key, value] : j.items())
        if (!known.contains(key)) throw std::runtime_error("unknown config key: " + key);
    if (j.contains("scenario")) cfg.scenario = j["scenario"];
    if (j.contains("n")) cfg.n = j["n"];
    if (j.contains("a")) cfg.a = j["a"];
    if (j.contains("m")) cfg.m = j["m"];
    if (j.contains("s")) cfg.s = j["s"];
    if (j.contains("schemes")) cfg.schemes = j["schemes"];
    if (j.contains("samples")) cfg.samples = j["samples"];
    if (j.contains("seed")) cfg.seed = j["seed"];
    if (j.contains("budget_mult")) cfg.budget_mult = j["budget_mult"];
    if (j.contains("out")) cfg.out_dir = j["out"];
    if (j.contains("jobs")) cfg.jobs = j["jobs"];
    if (j.contains("sidecar")) cfg.sidecar = j["sidecar"];
}

json sample_to_json(const MarkedSample& sample) {
    return json{{"adjacent", sample.adjacent},
                {"non_adjacent", sample.non_adjacent},
                {"seed", sample.seed}};
}

int cmd_run(RunConfig cfg) {
    if (const char* env = std::getenv("LACKWALK_OUT")) cfg.out_dir = env;

    const ScenarioKind kind = scenario_from_string(cfg.scenario);
    const HypercubeDims dims = HypercubeDims::make(cfg.n);
    if (cfg.a.empty()) cfg.a = "2.." + std::to_string(std::min(13, cfg.n + 1));
    const std::vector<int> a_values = parse_int_list(cfg.a);
    const std::vector<int> m_values = parse_int_list(cfg.m);
    const std::vector<WeightScheme> schemes = parse_schemes(cfg.schemes);

    if (m_values.empty() || cfg.s < 1) throw std::runtime_error("need m range and s >= 1");
    for (int a : a_values)
        if (a < 2 || a > dims.n + 1)
            throw std::runtime_error("a=" + std::to_string(a) + " exceeds n+1");
    for (int m : m_values)
        if (m < 1) throw std::runtime_error("m must be >= 1");

    std::vector<ExperimentRecord> records;
    json group_seeds = json::array();
    for (int a : a_values) {
        ScenarioSpec spec{kind, a, kind == ScenarioKind::Mixed ? cfg.samples : 1, cfg.seed};
        for (const MarkedSample& sample : generate_group(spec, dims))
            group_seeds.push_back(json{{"a", a}, {"seed", sample.seed}});
        auto group_records =
            run_scenario(spec, schemes, m_values, dims, cfg.s, cfg.budget_mult, cfg.jobs);
        records.insert(records.end(), group_records.begin(), group_records.end());
    }
    const std::vector<GroupSummary> summaries = summarize(records);

    // Per-group log fit of mean t_max against m, when the sweep has
    // enough m values to support one.
    json fits = json::array();
    if (m_values.size() >= 3) {
        for (WeightScheme scheme : schemes)
            for (int a : a_values) {
                std::map<int, std::pair<double, int>> per_m;  // m -> (sum t, count)
                for (const ExperimentRecord& rec : records) {
                    if (rec.skipped || rec.scheme != scheme || rec.a != a) continue;
                    per_m[rec.m].first += static_cast<double>(rec.t_max);
                    per_m[rec.m].second += 1;
                }
                std::vector<std::pair<double, double>> points;
                for (const auto& [m, acc] : per_m)
                    points.push_back({static_cast<double>(m), acc.first / acc.second});
                if (points.size() < 3) continue;
                const FitResult fit = fit_scaling(points, FitModel::LogM);
                fits.push_back(json{{"model", to_string(fit.model)},
                                    {"scheme", to_string(scheme)},
                                    {"a", a},
                                    {"coefficients", fit.coefficients},
                                    {"r2", fit.r2},
                                    {"points", fit.points}});
            }
    }

    fs::create_directories(cfg.out_dir);
    std::ostringstream results_csv, summary_csv;
    write_results_csv(results_csv, records);
    write_summary_csv(summary_csv, summaries);

    json manifest{{"version", kVersion},
                  {"config", config_to_json(cfg)},
                  {"group_seeds", group_seeds}};

    write_file(fs::path(cfg.out_dir) / "results.csv", results_csv.str());
    write_file(fs::path(cfg.out_dir) / "summary.csv", summary_csv.str());
    write_file(fs::path(cfg.out_dir) / "fits.json", fits.dump(2) + "\n");
    write_file(fs::path(cfg.out_dir) / "manifest.json", manifest.dump(2) + "\n");

    if (cfg.sidecar) {
        json rows = json::array();
        for (const ExperimentRecord& rec : records)
            rows.push_back(json{{"scenario", to_string(rec.scenario)},
                                {"scheme", to_string(rec.scheme)},
                                {"a", rec.a},
                                {"total_marked", rec.total_marked},
                                {"m", rec.m},
                                {"sample", rec.sample},
                                {"seed", rec.seed},
                                {"skipped", rec.skipped},
                                {"p_max", rec.p_max},
                                {"t_max", rec.t_max}});
        write_file(fs::path(cfg.out_dir) / "results.json", rows.dump(2) + "\n");
    }

    std::cout << "wrote " << records.size() << " records to " << cfg.out_dir << "\n";
    return 0;
}

int cmd_walk(int n, const std::string& marked_text, const std::string& scheme_tag, int m, int s,
             double budget_mult, const std::string& trace_path) {
    const HypercubeDims dims = HypercubeDims::make(n);
    std::vector<VertexId> marked;
    for (int v : parse_int_list(marked_text)) marked.push_back(static_cast<VertexId>(v));

    const int k = static_cast<int>(marked.size());
    const CoinSpec coin = make_coin_spec(scheme_from_string(scheme_tag), dims, k, m);
    const OracleSpec oracle{marked, s};
    const std::uint64_t budget = default_budget(dims, coin, marked.size(), budget_mult);
    const WalkResult result = run_walk(dims, coin, oracle, budget, !trace_path.empty());

    if (!trace_path.empty()) {
        std::ostringstream csv;
        csv << "step,p\n";
        for (std::size_t t = 0; t < result.p_history.size(); ++t)
            csv << t << ',' << std::fixed << std::setprecision(6) << result.p_history[t] << '\n';
        write_file(trace_path, csv.str());
    }
    std::cout << std::fixed << std::setprecision(6) << "p_max=" << result.p_max
              << " t_max=" << result.t_max << " budget=" << budget << "\n";
    return 0;
}

// One fit input: a results.csv, plus the hypercube dimension it was
// produced at (needed to recover x = (n+m)*N for the sqrt model).
struct FitInput {
    int n = 0;
    std::string path;
};

int cmd_fit(const std::vector<std::string>& inputs, const std::string& model_tag,
            const std::string& scheme_filter, int total_filter, int m_filter,
            const std::string& out_path) {
    const FitModel model = fit_model_from_string(model_tag);

    std::vector<FitInput> parsed;
    for (const std::string& text : inputs) {
        FitInput input;
        if (auto colon = text.find(':'); colon != std::string::npos) {
            input.n = std::stoi(text.substr(0, colon));
            input.path = text.substr(colon + 1);
        } else {
            input.path = text;
        }
        if (model == FitModel::SqrtDim && input.n == 0)
            throw std::runtime_error("sqrt_dim inputs need the form n:path");
        parsed.push_back(input);
    }

    // Mean t_max keyed by the fit abscissa.
    std::map<double, std::pair<double, int>> accum;
    for (const FitInput& input : parsed) {
        std::ifstream in(input.path);
        if (!in) throw std::runtime_error("cannot read " + input.path);
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            std::stringstream row(line);
            std::string field;
            std::vector<std::string> fields;
            while (std::getline(row, field, ',')) fields.push_back(field);
            if (fields.size() < 9 || fields[7].empty()) continue;  // skipped row
            const int total = std::stoi(fields[3]);
            const int m = std::stoi(fields[4]);
            if (!scheme_filter.empty() && fields[1] != scheme_filter) continue;
            if (total_filter > 0 && total != total_filter) continue;
            if (m_filter > 0 && m != m_filter) continue;
            const double t_max = std::stod(fields[8]);
            const double x = model == FitModel::LogM
                                 ? static_cast<double>(m)
                                 : static_cast<double>(input.n + m) *
                                       static_cast<double>(std::uint64_t{1} << input.n);
            accum[x].first += t_max;
            accum[x].second += 1;
        }
    }

    std::vector<std::pair<double, double>> points;
    for (const auto& [x, acc] : accum) points.push_back({x, acc.first / acc.second});
    const FitResult fit = fit_scaling(points, model);

    const json out{{"model", to_string(fit.model)},
                   {"coefficients", fit.coefficients},
                   {"r2", fit.r2},
                   {"points", fit.points}};
    if (out_path.empty())
        std::cout << out.dump(2) << "\n";
    else
        write_file(out_path, out.dump(2) + "\n");
    return 0;
}

int cmd_sample(int n, const std::string& scenario, int a, int samples, std::uint64_t seed) {
    const HypercubeDims dims = HypercubeDims::make(n);
    ScenarioSpec spec{scenario_from_string(scenario), a, samples, seed};
    json out = json::array();
    for (const MarkedSample& sample : generate_group(spec, dims))
        out.push_back(sample_to_json(sample));
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-self-loop lackadaisical quantum walk experiments"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    auto* run = app.add_subcommand("run", "run a scenario sweep");
    run->add_option("--config", config_path, "JSON config or manifest to load first");
    run->add_option("--scenario", cfg.scenario, "adjacent | mixed");
    run->add_option("--n", cfg.n, "hypercube dimension");
    run->add_option("--a", cfg.a, "adjacent-cluster sizes, range a..b or list");
    run->add_option("--m", cfg.m, "self-loop counts, range a..b or list");
    run->add_option("--s", cfg.s, "inverted self-loops per marked vertex");
    run->add_option("--schemes", cfg.schemes, "all or comma list of scheme tags");
    run->add_option("--samples", cfg.samples, "samples per mixed group");
    run->add_option("--seed", cfg.seed, "base RNG seed");
    run->add_option("--budget-mult", cfg.budget_mult, "evolution window multiplier");
    run->add_option("--out", cfg.out_dir, "output directory");
    run->add_option("--jobs", cfg.jobs, "worker threads");
    run->add_flag("--sidecar", cfg.sidecar, "also write full-precision results.json");

    int walk_n = 12, walk_m = 1, walk_s = 1;
    double walk_mult = 3.0;
    std::string walk_marked, walk_scheme = "n_over_N_times_k", walk_trace;
    auto* walk = app.add_subcommand("walk", "run a single walk");
    walk->add_option("--n", walk_n, "hypercube dimension");
    walk->add_option("--marked", walk_marked, "marked vertices, comma list")->required();
    walk->add_option("--scheme", walk_scheme, "weight scheme tag");
    walk->add_option("--m", walk_m, "self-loops per vertex");
    walk->add_option("--s", walk_s, "inverted self-loops");
    walk->add_option("--budget-mult", walk_mult, "evolution window multiplier");
    walk->add_option("--trace", walk_trace, "write per-step probability CSV here");

    std::vector<std::string> fit_inputs;
    std::string fit_model = "log_m", fit_scheme, fit_out;
    int fit_total = 0, fit_m = 0;
    auto* fit = app.add_subcommand("fit", "fit scaling models to results.csv data");
    fit->add_option("--input", fit_inputs, "results.csv path, or n:path for sqrt_dim")
        ->required();
    fit->add_option("--model", fit_model, "log_m | sqrt_dim");
    fit->add_option("--scheme", fit_scheme, "restrict to one scheme tag");
    fit->add_option("--total", fit_total, "restrict to one total_marked");
    fit->add_option("--fixed-m", fit_m, "restrict to one m (sqrt_dim)");
    fit->add_option("--out", fit_out, "output JSON path (default stdout)");

    int sample_n = 12, sample_a = 2, sample_count = 10;
    std::uint64_t sample_seed = 12345;
    std::string sample_scenario = "mixed";
    auto* sample = app.add_subcommand("sample", "emit marked-vertex sets as JSON");
    sample->add_option("--n", sample_n, "hypercube dimension");
    sample->add_option("--scenario", sample_scenario, "adjacent | mixed");
    sample->add_option("--a", sample_a, "adjacent-cluster size");
    sample->add_option("--samples", sample_count, "samples (mixed)");
    sample->add_option("--seed", sample_seed, "base RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw std::runtime_error("cannot read " + config_path);
                json j = json::parse(in);
                // A manifest embeds the config under "config". Flags
                // given alongside --config take precedence over it.
                RunConfig file_cfg;
                config_from_json(j.contains("config") ? j["config"] : j, file_cfg);
                auto keep = [&](const std::string& flag) { return run->count(flag) > 0; };
                if (!keep("--scenario")) cfg.scenario = file_cfg.scenario;
                if (!keep("--n")) cfg.n = file_cfg.n;
                if (!keep("--a")) cfg.a = file_cfg.a;
                if (!keep("--m")) cfg.m = file_cfg.m;
                if (!keep("--s")) cfg.s = file_cfg.s;
                if (!keep("--schemes")) cfg.schemes = file_cfg.schemes;
                if (!keep("--samples")) cfg.samples = file_cfg.samples;
                if (!keep("--seed")) cfg.seed = file_cfg.seed;
                if (!keep("--budget-mult")) cfg.budget_mult = file_cfg.budget_mult;
                if (!keep("--out")) cfg.out_dir = file_cfg.out_dir;
                if (!keep("--jobs")) cfg.jobs = file_cfg.jobs;
                if (!keep("--sidecar")) cfg.sidecar = file_cfg.sidecar;
            }
            return cmd_run(cfg);
        }
        if (*walk)
            return cmd_walk(walk_n, walk_marked, walk_scheme, walk_m, walk_s, walk_mult,
                            walk_trace);
        if (*fit)
            return cmd_fit(fit_inputs, fit_model, fit_scheme, fit_total, fit_m, fit_out);
        if (*sample)
            return cmd_sample(sample_n, sample_scenario, sample_a, sample_count, sample_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
