#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vvfm/grid.hpp"

namespace vvfm {

/// Rejected configuration; what() joins every violated condition.
class ConfigError : public DomainError {
public:
    explicit ConfigError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

struct ExperimentConfig {
    std::string suite = "lemma61";
    int dim = 1;
    std::size_t n = 512;
    double half_width = 16.0;
    int kmin = 0;
    int kmax = 3;
    double p = 1.0;
    double q = 2.0;
    double s = 0.75;
    double r = 1.5;
    std::vector<int> mu;     // theorem12 sweep
    double gamma = 1.6;      // counterexample
    double envelope = 4.0;   // random multiplier envelope exponent a
    double cutoff = 4.0;     // dual-variable cutoff of random multiplier profiles
    double alpha = 0.0;      // smoothness index for corollary13
    std::string multiplier = "random";  // random | identity | zero
    int trials = 20;
    std::uint64_t seed = 1;
    std::string out;

    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"partition", "roundtrip", "norms",     "maximal",
                                                "atoms",     "lemma61",   "theorem11", "theorem12",
                                                "corollary13", "counterexample"};
    return names;
}

/// Defaults that sit inside every window of the named suite.
ExperimentConfig preset(const std::string& suite);

/// Every violated hypothesis of the suite, each naming the inequality and its
/// computed sides. Empty means runnable.
std::vector<std::string> validate(const ExperimentConfig& config);

struct TrendSeries {
    std::string name;
    std::string x_label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Ensemble maximum at grid size n and at 2n with identical random draws.
struct RefinementBlock {
    std::size_t n_coarse = 0;
    std::size_t n_fine = 0;
    double max_coarse = 0.0;
    double max_fine = 0.0;
    double relative_change = 0.0;
    double tolerance = 0.0;
    bool stable = false;
};

struct ExperimentReport {
    static constexpr int kSchemaVersion = 1;

    std::string suite;
    ExperimentConfig config;
    std::vector<double> ratios;  // one per trial, ordered by trial index
    double ensemble_max = 0.0;
    double ensemble_median = 0.0;
    std::map<std::string, double> metrics;
    std::map<std::string, bool> checks;  // numerical acceptance; all must hold
    std::vector<TrendSeries> trends;
    std::optional<RefinementBlock> refinement;
    std::vector<std::string> notes;

    bool passed() const;
    /// Fills ensemble_max / ensemble_median from ratios.
    void summarize();

    nlohmann::json to_json() const;
    /// Long-format table: trend,x_label,x,y.
    std::string trends_csv() const;
    std::string summary_text() const;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "VVFM_OUTPUT_DIR";

/// `flag` when non-empty, else $VVFM_OUTPUT_DIR, else ".".
std::string resolve_output_dir(const std::string& flag);

struct WrittenFiles {
    std::string json;
    std::string csv;
    std::string summary;
};

/// <dir>/<suite>_report.json, <suite>_trends.csv and <suite>_summary.txt.
/// Creates dir if needed; throws IoError on any failure.
WrittenFiles write_report(const ExperimentReport& report, const std::string& dir);

/// Validates, then dispatches to the suite. Throws ConfigError on violations.
ExperimentReport run_experiment(const ExperimentConfig& config);

ExperimentReport run_partition_suite(const ExperimentConfig& config);
ExperimentReport run_roundtrip_suite(const ExperimentConfig& config);
ExperimentReport run_norms_suite(const ExperimentConfig& config);
ExperimentReport run_maximal_suite(const ExperimentConfig& config);
ExperimentReport run_atoms_suite(const ExperimentConfig& config);
ExperimentReport run_lemma61_suite(const ExperimentConfig& config);
ExperimentReport run_theorem11_suite(const ExperimentConfig& config);
ExperimentReport run_theorem12_suite(const ExperimentConfig& config);
ExperimentReport run_corollary13_suite(const ExperimentConfig& config);
ExperimentReport run_counterexample_suite(const ExperimentConfig& config);

/// Exponent serialisation: finite values as numbers, infinity as the string "inf".
nlohmann::json exponent_to_json(double v);
double exponent_from_json(const nlohmann::json& j);

}  // namespace vvfm
