#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "springlp/errors.hpp"
#include "springlp/layout.hpp"
#include "springlp/sfdp.hpp"

namespace springlp::cli {

namespace fs = std::filesystem;

namespace {

std::string format_number(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc{} ? std::string(buf, end) : std::to_string(value);
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) throw ValidationError("setting " + key + ": '" + text + "' is not a valid number");
    return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ValidationError("setting " + key + ": expected true or false, got '" + text + "'");
}

BipartiteSolve parse_bipartite_solve(const std::string& text) {
    if (text == "single") return BipartiteSolve::single_level;
    if (text == "multilevel") return BipartiteSolve::multilevel;
    throw ValidationError("setting bipartite_solve: expected single or multilevel, got '" + text + "'");
}

std::string_view to_string(BipartiteSolve solve) {
    return solve == BipartiteSolve::multilevel ? "multilevel" : "single";
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

/// Short name for output files: file stem or "icosphere3".
std::string dataset_stem(const std::string& dataset) {
    if (dataset.rfind("icosphere:", 0) == 0) return "icosphere" + dataset.substr(10);
    return fs::path(dataset).stem().string();
}

std::ofstream open_output(const fs::path& path, std::ios::openmode mode = std::ios::out) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, mode);
    if (!out) throw Error("cannot write " + path.string());
    return out;
}

}  // namespace

const std::vector<std::string>& setting_keys() {
    static const std::vector<std::string> keys = {
        "dataset", "kind",      "scorer", "scores",     "bipartite_solve", "fraction",  "trials",
        "regime",  "tie_policy", "seed",  "train_degrees", "C",           "K",         "p",
        "dim",     "theta",     "step_init", "cooling", "tol",             "max_iters", "coarsen_threshold",
        "output_dir"};
    return keys;
}

Settings ExperimentConfig::canonical() const {
    const auto& s = scorer.sfdp;
    return {
        {"dataset", dataset},
        {"kind", std::string(to_string(kind))},
        {"scorer", scorer.name},
        {"scores", scorer.external_path},
        {"bipartite_solve", std::string(cli::to_string(scorer.bipartite_solve))},
        {"fraction", format_number(trials.fraction)},
        {"trials", std::to_string(trials.trials)},
        {"regime", std::string(springlp::to_string(trials.regime))},
        {"tie_policy", std::string(springlp::to_string(trials.tie_policy))},
        {"seed", std::to_string(trials.base_seed)},
        {"train_degrees", trials.train_degrees ? "true" : "false"},
        {"C", format_number(s.C)},
        {"K", format_number(s.K)},
        {"p", format_number(s.p)},
        {"dim", std::to_string(s.dim)},
        {"theta", format_number(s.theta)},
        {"step_init", format_number(s.step_init)},
        {"cooling", format_number(s.cooling)},
        {"tol", format_number(s.tol)},
        {"max_iters", std::to_string(s.max_iters)},
        {"coarsen_threshold", std::to_string(s.coarsen_threshold)},
    };
}

std::string ExperimentConfig::digest() const {
    std::string text;
    for (const auto& [key, value] : canonical()) text += key + "=" + value + "\n";
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a(text);
    return hex.str();
}

Settings read_settings_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file " + path.string());
    Settings settings;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const auto& keys = setting_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": unknown setting '" + key + "'");
        settings[key] = trim(std::string_view(body).substr(eq + 1));
    }
    return settings;
}

ExperimentConfig resolve_config(const Settings& settings) {
    ExperimentConfig config;
    auto get = [&](const std::string& key) -> const std::string* {
        auto it = settings.find(key);
        return it == settings.end() ? nullptr : &it->second;
    };
    try {
        if (auto v = get("dataset")) config.dataset = *v;
        if (auto v = get("kind")) config.kind = parse_graph_kind(*v);
        if (auto v = get("scorer")) config.scorer.name = *v;
        if (auto v = get("scores")) config.scorer.external_path = *v;
        if (auto v = get("bipartite_solve")) config.scorer.bipartite_solve = parse_bipartite_solve(*v);
        if (auto v = get("fraction")) config.trials.fraction = parse_number<double>("fraction", *v);
        if (auto v = get("trials")) config.trials.trials = parse_number<std::size_t>("trials", *v);
        switch (config.kind) {
            case GraphKind::bipartite: config.trials.regime = NegativeRegime::bipartite_weighted; break;
            case GraphKind::directed: config.trials.regime = NegativeRegime::directed_difficult; break;
            case GraphKind::undirected: config.trials.regime = NegativeRegime::uniform; break;
        }
        if (auto v = get("regime")) config.trials.regime = parse_negative_regime(*v);
        if (auto v = get("tie_policy")) config.trials.tie_policy = parse_tie_policy(*v);
        if (auto v = get("seed")) config.trials.base_seed = parse_number<std::uint64_t>("seed", *v);
        if (auto v = get("train_degrees")) config.trials.train_degrees = parse_bool("train_degrees", *v);
        auto& s = config.scorer.sfdp;
        if (auto v = get("C")) s.C = parse_number<double>("C", *v);
        if (auto v = get("K")) s.K = parse_number<double>("K", *v);
        if (auto v = get("p")) s.p = parse_number<double>("p", *v);
        if (auto v = get("dim")) s.dim = parse_number<int>("dim", *v);
        if (auto v = get("theta")) s.theta = parse_number<double>("theta", *v);
        if (auto v = get("step_init")) s.step_init = parse_number<double>("step_init", *v);
        if (auto v = get("cooling")) s.cooling = parse_number<double>("cooling", *v);
        if (auto v = get("tol")) s.tol = parse_number<double>("tol", *v);
        if (auto v = get("max_iters")) s.max_iters = parse_number<int>("max_iters", *v);
        if (auto v = get("coarsen_threshold"))
            s.coarsen_threshold = parse_number<std::size_t>("coarsen_threshold", *v);
        if (auto v = get("output_dir")) config.output_dir = *v;
        s.seed = config.trials.base_seed;
        s.validate();
    } catch (const ParameterError& e) {
        throw ValidationError(e.what());
    }

    if (config.dataset.empty()) throw ValidationError("no dataset given");
    if (config.dataset.rfind("icosphere:", 0) != 0 && !fs::exists(config.dataset))
        throw ValidationError("dataset " + config.dataset + " does not exist");
    if (!(config.trials.fraction > 0 && config.trials.fraction < 1))
        throw ValidationError("fraction must lie in (0, 1)");
    if (config.trials.trials < 1) throw ValidationError("trials must be at least 1");
    if (config.scorer.name == "external" && !fs::exists(config.scorer.external_path))
        throw ValidationError("score file '" + config.scorer.external_path + "' does not exist");
    if (config.trials.regime == NegativeRegime::bipartite_weighted && config.kind != GraphKind::bipartite)
        throw ValidationError("regime bipartite_weighted needs a bipartite graph");
    if (config.trials.regime == NegativeRegime::directed_difficult && config.kind != GraphKind::directed)
        throw ValidationError("regime directed_difficult needs a directed graph");
    return config;
}

ParsedGraph load_dataset(const std::string& dataset, GraphKind kind) {
    if (dataset.rfind("icosphere:", 0) == 0) {
        if (kind != GraphKind::undirected) throw ValidationError("icosphere datasets are undirected");
        int k = 0;
        try {
            k = parse_number<int>("dataset", dataset.substr(10));
            return ParsedGraph{generate_icosphere_graph(k), 0, 0};
        } catch (const ParameterError& e) {
            throw ValidationError(e.what());
        }
    }
    std::ifstream in(dataset);
    if (!in) throw ValidationError("cannot open dataset " + dataset);
    try {
        return parse_edge_list(in, kind);
    } catch (const ParseError& e) {
        throw ValidationError(dataset + ": " + e.what());
    } catch (const StructuralError& e) {
        throw ValidationError(dataset + ": " + e.what());
    }
}

namespace {

struct Context {
    std::ostream& out;
    std::ostream& err;
};

/// Settings gathered from the command line, applied over the config file.
struct SettingSources {
    std::string config_file;
    Settings overrides;

    void add(CLI::App* app, const std::string& flags, const std::string& key, const std::string& help) {
        app->add_option_function<std::string>(flags, [this, key](const std::string& v) { overrides[key] = v; }, help);
    }

    ExperimentConfig resolve() const {
        Settings settings;
        if (!config_file.empty()) settings = read_settings_file(config_file);
        if (const char* env = std::getenv(kOutputDirEnv); env && *env) settings["output_dir"] = env;
        for (const auto& [key, value] : overrides) settings[key] = value;
        return resolve_config(settings);
    }
};

void add_dataset_options(CLI::App* app, SettingSources& src) {
    app->add_option("--config", src.config_file, "key=value settings file");
    app->add_option_function<std::string>(
        "dataset", [&src](const std::string& v) { src.overrides["dataset"] = v; },
        "edge-list file or icosphere:<k>");
    src.add(app, "--kind", "kind", "undirected | directed | bipartite");
    src.add(app, "--output-dir", "output_dir", "output directory (also $SPRINGLP_OUTPUT_DIR)");
}

void add_model_options(CLI::App* app, SettingSources& src) {
    src.add(app, "--scorer", "scorer",
            "sfdp | bi-sfdp | di-sfdp | di-sfdp-oriented | cn | aa | aa-log | pa | external | oracle");
    src.add(app, "--scores", "scores", "score file for the external scorer");
    src.add(app, "--bipartite-solve", "bipartite_solve", "single | multilevel");
    src.add(app, "--seed", "seed", "base seed");
    src.add(app, "-C,--repulsion", "C", "repulsion strength");
    src.add(app, "-K,--spring-length", "K", "natural spring length");
    src.add(app, "-p,--exponent", "p", "repulsive exponent");
    src.add(app, "--dim", "dim", "embedding dimension");
    src.add(app, "--theta", "theta", "Barnes-Hut opening parameter");
    src.add(app, "--step-init", "step_init", "initial step length");
    src.add(app, "--cooling", "cooling", "step cooling factor");
    src.add(app, "--tol", "tol", "convergence tolerance, in units of K");
    src.add(app, "--max-iters", "max_iters", "iterations per level");
    src.add(app, "--coarsen-threshold", "coarsen_threshold", "stop coarsening at this many nodes");
}

void add_trial_options(CLI::App* app, SettingSources& src) {
    src.add(app, "--fraction", "fraction", "fraction of edges hidden");
    src.add(app, "--trials", "trials", "number of trials");
    src.add(app, "--regime", "regime", "uniform | bipartite_weighted | directed_difficult");
    src.add(app, "--tie-policy", "tie_policy", "strict | half");
    app->add_flag_callback(
        "--train-degrees", [&src] { src.overrides["train_degrees"] = "true"; },
        "degree-weighted negatives use training degrees");
}

Graph load_connected(const ExperimentConfig& config) {
    Graph g = load_dataset(config.dataset, config.kind).graph;
    if (!is_connected(g))
        throw ValidationError("dataset " + config.dataset + " is not connected; run 'prepare' first");
    return g;
}

// --- prepare ------------------------------------------------------------------

int cmd_prepare(Context& ctx, const std::string& input, const std::string& kind_name, std::string output) {
    GraphKind kind{};
    try {
        kind = parse_graph_kind(kind_name);
    } catch (const ParameterError& e) {
        throw ValidationError(e.what());
    }
    ParsedGraph parsed = load_dataset(input, kind);
    Graph lcc = largest_connected_component(parsed.graph);
    if (output.empty()) {
        fs::path dir = "results";
        if (const char* env = std::getenv(kOutputDirEnv); env && *env) dir = env;
        output = (dir / (dataset_stem(input) + ".lcc.txt")).string();
    }
    auto out = open_output(output);
    write_edge_list(out, lcc);
    if (!out) throw Error("failed writing " + output);
    if (parsed.duplicate_edges || parsed.self_loops)
        ctx.err << "dropped " << parsed.duplicate_edges << " duplicate edge(s) and " << parsed.self_loops
                << " self-loop(s)\n";
    if (lcc.node_count() != parsed.graph.node_count())
        ctx.err << "kept the largest component: " << lcc.node_count() << " of " << parsed.graph.node_count()
                << " nodes\n";
    ctx.out << lcc.node_count() << " nodes, " << lcc.edge_count() << " edges\n";
    return kExitOk;
}

// --- embed --------------------------------------------------------------------

int cmd_embed(Context& ctx, const ExperimentConfig& config, std::string output) {
    const auto& name = config.scorer.name;
    if (name != "sfdp" && name != "bi-sfdp" && name != "di-sfdp")
        throw ValidationError("embed supports sfdp, bi-sfdp and di-sfdp, not " + name);
    Graph g = load_dataset(config.dataset, config.kind).graph;
    try {
        check_scorer_for_graph(config.scorer, g);
    } catch (const ParameterError& e) {
        throw ValidationError(e.what());
    }
    const auto& params = config.scorer.sfdp;
    MultilevelReport report;
    Layout layout;
    std::vector<std::string> labels;
    if (name == "sfdp") {
        layout = layout_multilevel(g, params, RepulsionMask::all_pairs(), &report);
        labels.assign(g.labels().begin(), g.labels().end());
    } else if (name == "bi-sfdp") {
        layout = bi_sfdp_layout(g, params, config.scorer.bipartite_solve, &report);
        labels.assign(g.labels().begin(), g.labels().end());
    } else {
        DiSfdpModel model = fit_di_sfdp(g, params, config.scorer.bipartite_solve, &report);
        layout = std::move(model.layout);
        labels.assign(model.split_graph.labels().begin(), model.split_graph.labels().end());
    }
    if (output.empty())
        output = (config.output_dir / (dataset_stem(config.dataset) + "." + name + ".d" +
                                       std::to_string(params.dim) + ".layout"))
                     .string();
    auto out = open_output(output);
    write_layout(out, layout, labels, params.seed);
    if (!out) throw Error("failed writing " + output);

    std::size_t iterations = 0;
    for (const auto& level : report.levels) iterations += level.iterations;
    const auto& finest = report.levels.back();
    ctx.out << "levels=" << report.levels.size() << " iterations=" << iterations
            << " final_level_iterations=" << finest.iterations << " energy=" << format_number(finest.final_energy)
            << " converged=" << (finest.converged ? "true" : "false") << "\n";
    ctx.out << "wrote " << output << "\n";
    return kExitOk;
}

// --- evaluate -----------------------------------------------------------------

struct EvalOutcome {
    TrialStats stats;
    double seconds = 0;
};

EvalOutcome evaluate(const ExperimentConfig& config, const Graph& g) {
    ScorerFactory factory;
    try {
        factory = make_scorer_factory(config.scorer, g);
    } catch (const ParameterError& e) {
        throw ValidationError(e.what());
    } catch (const ParseError& e) {
        throw ValidationError(config.scorer.external_path + ": " + e.what());
    }
    const auto start = std::chrono::steady_clock::now();
    EvalOutcome outcome;
    outcome.stats = run_trials(g, factory, config.trials);
    outcome.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return outcome;
}

constexpr const char* kResultsHeader =
    "dataset,scorer,params_digest,seed,dim,fraction,regime,trials,mean_auc,std,ci95";

int cmd_evaluate(Context& ctx, const ExperimentConfig& config, std::string csv) {
    Graph g = load_connected(config);
    const EvalOutcome outcome = evaluate(config, g);

    std::ostringstream row;
    row << csv_field(config.dataset) << ',' << config.scorer.name << ',' << config.digest() << ','
        << config.trials.base_seed << ',' << config.scorer.sfdp.dim << ',' << format_number(config.trials.fraction)
        << ',' << springlp::to_string(config.trials.regime) << ',' << config.trials.trials << ','
        << format_number(outcome.stats.mean) << ',' << format_number(outcome.stats.std) << ','
        << format_number(outcome.stats.ci95_halfwidth);

    if (csv.empty()) csv = (config.output_dir / "results.csv").string();
    const bool fresh = !fs::exists(csv) || fs::file_size(csv) == 0;
    auto out = open_output(csv, std::ios::app);
    if (fresh) out << kResultsHeader << '\n';
    out << row.str() << '\n';
    if (!out) throw Error("failed writing " + csv);

    ctx.out << kResultsHeader << '\n' << row.str() << '\n';
    ctx.err << std::fixed << std::setprecision(1) << outcome.seconds << " s\n" << std::defaultfloat;
    return kExitOk;
}

// --- sweep --------------------------------------------------------------------

int cmd_sweep(Context& ctx, const ExperimentConfig& base, const SettingSources& src, const std::string& axis,
              const std::vector<std::string>& values, std::string csv) {
    if (axis != "dim" && axis != "p") throw ValidationError("sweep axis must be dim or p");
    if (values.empty()) throw ValidationError("sweep needs at least one value");

    // Every value must resolve before any work starts.
    std::vector<ExperimentConfig> configs;
    for (const auto& value : values) {
        SettingSources one = src;
        one.overrides[axis] = value;
        configs.push_back(one.resolve());
    }
    Graph g = load_connected(base);

    if (csv.empty()) csv = (base.output_dir / ("sweep_" + axis + ".csv")).string();
    auto out = open_output(csv);
    const std::string header = "dataset,scorer,params_digest,seed,axis,axis_value,mean_auc,std,ci95,status";
    out << header << '\n';
    ctx.out << header << '\n';

    std::size_t failures = 0;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const auto& config = configs[i];
        std::ostringstream row;
        row << csv_field(config.dataset) << ',' << config.scorer.name << ',' << config.digest() << ','
            << config.trials.base_seed << ',' << axis << ',' << values[i] << ',';
        try {
            const EvalOutcome outcome = evaluate(config, g);
            row << format_number(outcome.stats.mean) << ',' << format_number(outcome.stats.std) << ','
                << format_number(outcome.stats.ci95_halfwidth) << ",ok";
        } catch (const std::exception& e) {
            ++failures;
            row << ",,," << csv_field(std::string("failed: ") + e.what());
            ctx.err << axis << "=" << values[i] << " failed: " << e.what() << '\n';
        }
        out << row.str() << '\n';
        out.flush();
        ctx.out << row.str() << '\n';
    }
    if (!out) throw Error("failed writing " + csv);
    return failures ? kExitRuntime : kExitOk;
}

// --- split --------------------------------------------------------------------

int cmd_split(Context& ctx, const ExperimentConfig& config, std::size_t trial, std::string output) {
    Graph g = load_connected(config);
    EvalSplit split = make_trial_split(g, config.trials, trial);
    if (output.empty())
        output = (config.output_dir /
                  ("split_" + dataset_stem(config.dataset) + "_seed" + std::to_string(split.seed)))
                     .string();
    write_split(output, g, split);
    for (const auto& w : split.warnings) ctx.err << "warning: " << w << '\n';
    ctx.out << split.train_edges.size() << " train edges, " << split.positives.size() << " positives, "
            << split.negatives.size() << " negatives -> " << output << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spring-electrical link prediction experiments", "springlp"};
    app.require_subcommand(1);

    std::string prepare_input, prepare_kind = "undirected", prepare_output;
    auto* prepare = app.add_subcommand("prepare", "keep the largest component and write a canonical edge list");
    prepare->add_option("input", prepare_input, "raw edge-list file")->required();
    prepare->add_option("--kind", prepare_kind, "undirected | directed | bipartite");
    prepare->add_option("-o,--output", prepare_output, "output edge-list path");

    SettingSources embed_src;
    std::string embed_output;
    auto* embed = app.add_subcommand("embed", "compute and write a layout");
    add_dataset_options(embed, embed_src);
    add_model_options(embed, embed_src);
    embed->add_option("-o,--output", embed_output, "layout path");

    SettingSources eval_src;
    std::string eval_csv;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "run trials and append one CSV row");
    add_dataset_options(evaluate_cmd, eval_src);
    add_model_options(evaluate_cmd, eval_src);
    add_trial_options(evaluate_cmd, eval_src);
    evaluate_cmd->add_option("--csv", eval_csv, "results CSV (appended)");

    SettingSources sweep_src;
    std::string sweep_axis, sweep_csv;
    std::vector<std::string> sweep_values;
    auto* sweep = app.add_subcommand("sweep", "evaluate once per value of dim or p");
    add_dataset_options(sweep, sweep_src);
    add_model_options(sweep, sweep_src);
    add_trial_options(sweep, sweep_src);
    sweep->add_option("--axis", sweep_axis, "dim | p")->required();
    sweep->add_option("--values", sweep_values, "comma-separated values")->delimiter(',');
    sweep->add_option("--csv", sweep_csv, "sweep CSV (overwritten)");

    SettingSources split_src;
    std::size_t split_trial = 0;
    std::string split_output;
    auto* split = app.add_subcommand("split", "export the train/test split of one trial");
    add_dataset_options(split, split_src);
    add_trial_options(split, split_src);
    split_src.add(split, "--seed", "seed", "base seed");
    split->add_option("--trial", split_trial, "trial index (seed = base seed + trial)");
    split->add_option("-o,--output", split_output, "output directory");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    Context ctx{out, err};
    try {
        if (*prepare) return cmd_prepare(ctx, prepare_input, prepare_kind, prepare_output);
        if (*embed) return cmd_embed(ctx, embed_src.resolve(), embed_output);
        if (*evaluate_cmd) return cmd_evaluate(ctx, eval_src.resolve(), eval_csv);
        if (*sweep) {
            if (sweep_values.empty()) throw ValidationError("sweep needs at least one value (--values)");
            return cmd_sweep(ctx, sweep_src.resolve(), sweep_src, sweep_axis, sweep_values, sweep_csv);
        }
        if (*split) return cmd_split(ctx, split_src.resolve(), split_trial, split_output);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitValidation;
}

}  // namespace springlp::cli
