#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "springlp/errors.hpp"
#include "springlp/eval.hpp"
#include "springlp/graph.hpp"
#include "springlp/scorers.hpp"

namespace springlp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

inline constexpr const char* kOutputDirEnv = "SPRINGLP_OUTPUT_DIR";

/// Bad configuration or input; maps to exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

using Settings = std::map<std::string, std::string>;

struct ExperimentConfig {
    std::string dataset;  // edge-list path or "icosphere:<k>"
    GraphKind kind = GraphKind::undirected;
    ScorerConfig scorer;
    TrialOptions trials;
    std::filesystem::path output_dir = "results";

    /// Every setting that affects results, normalized. Excludes output_dir.
    Settings canonical() const;
    /// 16 hex digits of FNV-1a over the sorted canonical settings.
    std::string digest() const;
};

/// Known setting keys, in the order they are documented.
const std::vector<std::string>& setting_keys();

/// Parses a key=value file. '#' starts a comment; blank lines are skipped.
Settings read_settings_file(const std::filesystem::path& path);

/// Applies `settings` over the defaults and validates the result.
ExperimentConfig resolve_config(const Settings& settings);

/// Loads a dataset: an edge-list file or a synthetic "icosphere:<k>".
ParsedGraph load_dataset(const std::string& dataset, GraphKind kind);

/// Runs one command line (without the program name). Never throws.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace springlp::cli
