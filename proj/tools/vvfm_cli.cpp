// Batch front end for the experiment suites.
//
// exit codes: 0 success, 1 invalid configuration, 2 numerical acceptance
// failure, 3 I/O failure.

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "vvfm/experiment.hpp"

namespace {

using vvfm::ExperimentConfig;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kNumerical = 2;
constexpr int kIo = 3;

double parse_exponent(const std::string& name, const std::string& v) {
    if (v == "inf" || v == "infinity") return vvfm::kInfinity;
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size()) throw vvfm::ConfigError({"--" + name + " must be a number or inf (got \"" + v + "\")"});
    return x;
}

// Raw flag storage; only flags that were given override the preset.
struct Flags {
    int dim = 1;
    std::size_t n = 0;
    double half_width = 0.0;
    int kmin = 0, kmax = 0;
    std::string p, q, s, r;
    std::vector<int> mu;
    double gamma = 0.0, envelope = 0.0, cutoff = 0.0, alpha = 0.0;
    std::string multiplier;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string config_file;
    std::string suite;  // validate only
    bool dump_config = false;
    bool quiet = false;
    std::map<std::string, CLI::Option*> opts;
};

void add_flags(CLI::App* cmd, Flags& f, bool with_suite) {
    auto& o = f.opts;
    o["dim"] = cmd->add_option("--dim", f.dim, "dimension d (1 or 2)");
    o["n"] = cmd->add_option("--n", f.n, "samples per axis (power of two)");
    o["half-width"] = cmd->add_option("--half-width", f.half_width, "torus half-width L (power of two)");
    o["kmin"] = cmd->add_option("--kmin", f.kmin, "smallest scale");
    o["kmax"] = cmd->add_option("--kmax", f.kmax, "largest scale");
    o["p"] = cmd->add_option("--p", f.p, "exponent p (number or inf)");
    o["q"] = cmd->add_option("--q", f.q, "exponent q (number or inf)");
    o["s"] = cmd->add_option("--s", f.s, "smoothness s");
    o["r"] = cmd->add_option("--r", f.r, "integrability r (number or inf)");
    o["mu"] = cmd->add_option("--mu", f.mu, "mu sweep for theorem12");
    o["gamma"] = cmd->add_option("--gamma", f.gamma, "log exponent gamma (counterexample)");
    o["envelope"] = cmd->add_option("--envelope", f.envelope, "random multiplier envelope exponent");
    o["cutoff"] = cmd->add_option("--cutoff", f.cutoff, "random multiplier dual cutoff");
    o["alpha"] = cmd->add_option("--alpha", f.alpha, "smoothness index alpha (corollary13)");
    o["multiplier"] = cmd->add_option("--multiplier", f.multiplier, "random, identity or zero");
    o["trials"] = cmd->add_option("--trials", f.trials, "ensemble size N");
    o["seed"] = cmd->add_option("--seed", f.seed, "master seed");
    o["out"] = cmd->add_option("--out", f.out, std::string("output directory (default $") + vvfm::kOutputDirEnv + " or .)");
    o["config"] = cmd->add_option("--config", f.config_file, "JSON config to start from instead of the preset");
    cmd->add_flag("--dump-config", f.dump_config, "print the resolved config as JSON and exit");
    cmd->add_flag("--quiet", f.quiet, "no summary on stdout");
    if (with_suite) o["suite"] = cmd->add_option("--suite", f.suite, "suite whose hypotheses are checked")->required();
}

bool given(const Flags& f, const std::string& name) {
    auto it = f.opts.find(name);
    return it != f.opts.end() && it->second->count() > 0;
}

ExperimentConfig resolve(const std::string& suite, const Flags& f) {
    ExperimentConfig c;
    if (!f.config_file.empty()) {
        std::ifstream is(f.config_file);
        if (!is) throw vvfm::IoError("cannot read config " + f.config_file);
        nlohmann::json j;
        try {
            is >> j;
            c = ExperimentConfig::from_json(j);
        } catch (const nlohmann::json::exception& e) {
            throw vvfm::ConfigError({std::string("malformed config file: ") + e.what()});
        }
        if (c.suite != suite) throw vvfm::ConfigError({"config file is for suite " + c.suite + ", not " + suite});
    } else {
        c = vvfm::preset(suite);
    }
    if (given(f, "dim")) c.dim = f.dim;
    if (given(f, "n")) c.n = f.n;
    if (given(f, "half-width")) c.half_width = f.half_width;
    if (given(f, "kmin")) c.kmin = f.kmin;
    if (given(f, "kmax")) c.kmax = f.kmax;
    if (given(f, "p")) c.p = parse_exponent("p", f.p);
    if (given(f, "q")) c.q = parse_exponent("q", f.q);
    if (given(f, "s")) c.s = parse_exponent("s", f.s);
    if (given(f, "r")) c.r = parse_exponent("r", f.r);
    if (given(f, "mu")) c.mu = f.mu;
    if (given(f, "gamma")) c.gamma = f.gamma;
    if (given(f, "envelope")) c.envelope = f.envelope;
    if (given(f, "cutoff")) c.cutoff = f.cutoff;
    if (given(f, "alpha")) c.alpha = f.alpha;
    if (given(f, "multiplier")) c.multiplier = f.multiplier;
    if (given(f, "trials")) c.trials = f.trials;
    if (given(f, "seed")) c.seed = f.seed;
    c.out = vvfm::resolve_output_dir(given(f, "out") ? f.out : c.out);
    return c;
}

int run_suite(const std::string& suite, const Flags& f) {
    const ExperimentConfig c = resolve(suite, f);
    if (f.dump_config) {
        std::cout << c.to_json().dump(2) << "\n";
        return kOk;
    }
    const auto report = vvfm::run_experiment(c);
    const auto files = vvfm::write_report(report, c.out);
    if (!f.quiet) std::cout << report.summary_text() << "report: " << files.json << "\n";
    return report.passed() ? kOk : kNumerical;
}

int run_validate(const Flags& f) {
    const ExperimentConfig c = resolve(f.suite, f);
    const auto v = vvfm::validate(c);
    for (const auto& line : v) std::cout << "violation: " << line << "\n";
    if (v.empty()) std::cout << "no violations for " << c.suite << "\n";
    return v.empty() ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vector-valued Fourier multiplier experiments"};
    app.require_subcommand(1);

    // Subcommand name -> suite name.
    const std::vector<std::pair<std::string, std::string>> commands{
        {"partition-check", "partition"}, {"roundtrip", "roundtrip"}, {"norms", "norms"},
        {"maximal", "maximal"},           {"atoms", "atoms"},         {"lemma61", "lemma61"},
        {"theorem11", "theorem11"},       {"theorem12", "theorem12"}, {"corollary13", "corollary13"},
        {"counterexample", "counterexample"}};
    std::map<std::string, Flags> flags;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [cmd, suite] : commands) {
        subs[cmd] = app.add_subcommand(cmd, "run the " + suite + " suite");
        add_flags(subs[cmd], flags[cmd], false);
    }
    subs["validate"] = app.add_subcommand("validate", "list violated hypotheses for a config");
    add_flags(subs["validate"], flags["validate"], true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        if (subs["validate"]->parsed()) return run_validate(flags["validate"]);
        for (const auto& [cmd, suite] : commands)
            if (subs[cmd]->parsed()) return run_suite(suite, flags[cmd]);
    } catch (const vvfm::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const vvfm::ConfigError& e) {
        for (const auto& v : e.violations()) std::cerr << "violation: " << v << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    }
    return kInvalid;
}
