#include <fmt/format.h>

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <string>

#include "dqsim/circuit_io.hpp"
#include "dqsim/experiments.hpp"

namespace {

using nlohmann::json;

std::uint64_t default_seed() {
    const char* env = std::getenv("DQSIM_SEED");
    if (env == nullptr || *env == '\0') return 42;
    std::uint64_t value = 0;
    const char* end = env + std::string_view(env).size();
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end)
        throw dqsim::ParseError("DQSIM_SEED must be an unsigned integer");
    return value;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw dqsim::ParseError(fmt::format("cannot open '{}'", path));
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        fmt::print("{}", content);
    } else {
        write_text(out_path, content);
    }
}

struct RunOptions {
    std::string algorithm;
    std::string hidden;
    std::string target;
    std::string table_path;
    std::string nodes;
    std::string layout = "trailing";
    bool optimize = false;
    std::uint64_t shots = 0;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

dqsim::TruthTable run_function(const RunOptions& opt) {
    const bool wants_hidden = opt.algorithm == "bv" || opt.algorithm == "dbva";
    if (!opt.table_path.empty()) return dqsim::load_truth_table(opt.table_path);
    if (wants_hidden) {
        if (opt.hidden.empty())
            throw dqsim::ParseError(fmt::format("{} requires --hidden or --table", opt.algorithm));
        return dqsim::hidden_string_function(dqsim::BitString::parse(opt.hidden));
    }
    if (opt.target.empty())
        throw dqsim::ParseError(fmt::format("{} requires --target or --table", opt.algorithm));
    return dqsim::point_function(dqsim::BitString::parse(opt.target));
}

int cmd_run(const RunOptions& opt) {
    const dqsim::TruthTable f = run_function(opt);
    const int n = f.arity;

    std::vector<std::pair<int, int>> spans;
    std::vector<dqsim::Circuit> parts;
    if (opt.algorithm == "bv") {
        spans.emplace_back(0, n);
        parts.push_back(dqsim::build_bv(f));
    } else if (opt.algorithm == "grover") {
        spans.emplace_back(0, n);
        parts.push_back(dqsim::build_grover(f));
    } else if (opt.algorithm == "long") {
        spans.emplace_back(0, n);
        parts.push_back(dqsim::build_long(f));
    } else if (opt.algorithm == "dbva") {
        if (opt.nodes.empty()) throw dqsim::ParseError("dbva requires --nodes");
        const dqsim::NodePlan plan = dqsim::parse_node_plan(opt.nodes);
        parts = dqsim::build_dbva(f, plan);
        const auto offsets = plan.offsets();
        for (std::size_t j = 0; j < plan.sizes.size(); ++j)
            spans.emplace_back(offsets[j], plan.sizes[j]);
    } else {
        const auto layout = opt.layout == "leading" ? dqsim::DegaLayout::LeadingWideBlock
                                                    : dqsim::DegaLayout::TrailingWideBlock;
        dqsim::DegaParts dega = dqsim::build_dega(f, layout);
        spans = std::move(dega.spans);
        parts = std::move(dega.circuits);
    }

    json report;
    report["schema"] = 1;
    report["algorithm"] = opt.algorithm;
    report["n"] = n;
    report["optimize"] = opt.optimize;
    if (!opt.hidden.empty()) report["hidden"] = opt.hidden;
    if (!opt.target.empty()) report["target"] = opt.target;
    if (!opt.table_path.empty()) report["table"] = opt.table_path;
    if (opt.algorithm == "dega") report["layout"] = opt.layout;

    if (opt.optimize) {
        int gates = 0;
        int max_depth = 0;
        for (auto& part : parts) {
            gates += dqsim::gate_count(part);
            max_depth = std::max(max_depth, dqsim::depth(part));
            part = dqsim::optimize_x_cancellation(part);
        }
        report["unoptimized_gates"] = gates;
        report["unoptimized_depth"] = max_depth;
    }

    dqsim::BitString outcome = dqsim::BitString::zeros(n);
    double probability = 1.0;
    int gates = 0;
    int max_depth = 0;
    json part_rows = json::array();
    std::vector<dqsim::VectorXr<double>> part_probs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto state = dqsim::simulate<double>(parts[i]);
        const auto probs = dqsim::probabilities(state);
        const std::uint64_t best = dqsim::argmax_index(probs);
        const auto [offset, width] = spans[i];
        const auto part_outcome = dqsim::BitString::from_index(best, width);
        for (int b = 0; b < width; ++b) outcome.set(offset + b, part_outcome[b]);
        const double part_probability = probs[static_cast<Eigen::Index>(best)];
        probability *= part_probability;
        const int part_gates = dqsim::gate_count(parts[i]);
        const int part_depth = dqsim::depth(parts[i]);
        gates += part_gates;
        max_depth = std::max(max_depth, part_depth);
        part_rows.push_back({{"offset", offset},
                             {"width", width},
                             {"gates", part_gates},
                             {"depth", part_depth},
                             {"outcome", part_outcome.str()},
                             {"probability", part_probability}});
        part_probs.push_back(probs);
    }
    report["gates"] = gates;
    report["depth"] = max_depth;
    report["parts"] = part_rows;
    report["outcome"] = outcome.str();
    report["success_probability"] = probability;

    if (opt.shots > 0) {
        if (n > 20) throw dqsim::LimitError("sampling distribution limit");
        dqsim::VectorXr<double> dist = dqsim::VectorXr<double>::Ones(1);
        for (const auto& probs : part_probs) {
            dqsim::VectorXr<double> next(dist.size() * probs.size());
            for (Eigen::Index a = 0; a < dist.size(); ++a)
                for (Eigen::Index b = 0; b < probs.size(); ++b)
                    next[a * probs.size() + b] = dist[a] * probs[b];
            dist = std::move(next);
        }
        const std::uint64_t seed = opt.seed ? *opt.seed : default_seed();
        const dqsim::Histogram hist = dqsim::sample(dist, n, opt.shots, seed);
        json counts = json::object();
        for (const auto& [bits, count] : hist.counts) counts[bits.str()] = count;
        report["histogram"] = {{"shots", hist.shots}, {"seed", hist.seed}, {"counts", counts}};
    }

    emit(opt.out_path, report.dump(2) + "\n");
    return 0;
}

struct DepthTableOptions {
    int n_min = 2;
    int n_max = 10;
    std::vector<std::string> algorithms;
    std::string out_path;
};

int cmd_depth_table(const DepthTableOptions& opt) {
    const auto rows = dqsim::depth_table(opt.n_min, opt.n_max, opt.algorithms);
    emit(opt.out_path, dqsim::depth_table_csv(rows));
    return 0;
}

struct NoiseSweepOptions {
    std::vector<std::string> fixtures;
    std::vector<double> p_grid;
    std::string model = "pauli-thirds";
    std::uint64_t shots = 0;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string chart_path;
};

int cmd_noise_sweep(const NoiseSweepOptions& opt) {
    std::vector<std::string> ids = opt.fixtures.empty() ? dqsim::fixture_ids() : opt.fixtures;
    std::vector<double> grid = opt.p_grid;
    if (grid.empty()) {
        for (int i = 0; i <= 9; ++i) grid.push_back(i / 100.0);
    }
    const auto form = dqsim::form_from_name(opt.model);
    if (!form) throw dqsim::ParseError(fmt::format("unknown noise model '{}'", opt.model));
    const std::uint64_t seed = opt.seed ? *opt.seed : default_seed();
    const auto rows = dqsim::noise_sweep(ids, grid, *form, opt.shots, seed);
    emit(opt.out_path, dqsim::noise_sweep_csv(rows));
    if (!opt.chart_path.empty()) write_text(opt.chart_path, dqsim::noise_sweep_chart_svg(rows));
    return 0;
}

struct ReproduceOptions {
    std::string table_id;
    std::string out_dir = ".";
};

int cmd_reproduce(const ReproduceOptions& opt) {
    const dqsim::ReproduceResult result = dqsim::reproduce(opt.table_id);
    std::error_code ec;
    std::filesystem::create_directories(opt.out_dir, ec);
    write_text(fmt::format("{}/{}.csv", opt.out_dir, result.table_id), result.csv);
    write_text(fmt::format("{}/{}.expected.json", opt.out_dir, result.table_id),
               result.sidecar_json);
    fmt::print("{}: {}\n", result.table_id, result.pass ? "pass" : "FAIL");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gate-level toolkit for distributed hidden-string recovery and exact search"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "build and simulate one algorithm");
    run->add_option("algorithm", run_opt.algorithm, "bv|dbva|grover|long|dega")
        ->required()
        ->check(CLI::IsMember({"bv", "dbva", "grover", "long", "dega"}));
    run->add_option("--hidden", run_opt.hidden, "hidden bit string (bv, dbva)");
    run->add_option("--target", run_opt.target, "target bit string (grover, long, dega)");
    run->add_option("--table", run_opt.table_path, "truth-table file");
    run->add_option("--nodes", run_opt.nodes, "comma-separated node sizes (dbva)");
    run->add_option("--layout", run_opt.layout, "dega part layout")
        ->check(CLI::IsMember({"trailing", "leading"}));
    run->add_flag("--optimize", run_opt.optimize, "apply X-cancellation before running");
    run->add_option("--shots", run_opt.shots, "sample the outcome distribution");
    run->add_option("--seed", run_opt.seed, "sampling seed (default: DQSIM_SEED or 42)");
    run->add_option("--out", run_opt.out_path, "write the JSON report here (default: stdout)");

    DepthTableOptions depth_opt;
    CLI::App* depth_cmd = app.add_subcommand("depth-table", "gate/depth table with formula check");
    depth_cmd->add_option("--n-min", depth_opt.n_min, "smallest register (>= 2)");
    depth_cmd->add_option("--n-max", depth_opt.n_max, "largest register (<= 10)");
    depth_cmd->add_option("--algorithms", depth_opt.algorithms, "subset of grover,long,dega")
        ->delimiter(',');
    depth_cmd->add_option("--out", depth_opt.out_path, "write the CSV here (default: stdout)");

    NoiseSweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("noise-sweep", "depolarizing sweep over fixtures");
    sweep->add_option("--fixtures", sweep_opt.fixtures, "fixture ids (default: all)")
        ->delimiter(',');
    sweep->add_option("--p-grid", sweep_opt.p_grid, "noise probabilities (default: 0..0.09)")
        ->delimiter(',');
    sweep->add_option("--model", sweep_opt.model, "pauli-thirds|uniform-mix")
        ->check(CLI::IsMember({"pauli-thirds", "uniform-mix"}));
    sweep->add_option("--shots", sweep_opt.shots, "trajectory shots per row (0: exact only)");
    sweep->add_option("--seed", sweep_opt.seed, "sampling seed (default: DQSIM_SEED or 42)");
    sweep->add_option("--out", sweep_opt.out_path, "write the CSV here (default: stdout)");
    sweep->add_option("--chart", sweep_opt.chart_path, "also write an SVG chart here");

    ReproduceOptions repro_opt;
    CLI::App* repro = app.add_subcommand("reproduce", "regenerate a published table with checks");
    repro->add_option("table-id", repro_opt.table_id, "which table to regenerate")->required();
    repro->add_option("--out-dir", repro_opt.out_dir, "directory for CSV + sidecar JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) return cmd_run(run_opt);
        if (depth_cmd->parsed()) return cmd_depth_table(depth_opt);
        if (sweep->parsed()) return cmd_noise_sweep(sweep_opt);
        if (repro->parsed()) return cmd_reproduce(repro_opt);
        return 2;
    } catch (const dqsim::ParseError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    } catch (const dqsim::DomainError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 3;
    } catch (const dqsim::LimitError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
}
