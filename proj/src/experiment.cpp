#include "vvfm/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "vvfm/counterexample.hpp"
#include "vvfm/fields.hpp"

namespace vvfm {
namespace {

std::string num(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

// "lhs < rhs required (lhs = a, rhs = b)" when the strict inequality fails.
void require_less(std::vector<std::string>& out, double a, double b, const std::string& lhs, const std::string& rhs) {
    if (!(a < b)) out.push_back(lhs + " < " + rhs + " required (" + lhs + " = " + num(a) + ", " + rhs + " = " + num(b) + ")");
}

void require_greater(std::vector<std::string>& out, double a, double b, const std::string& lhs, const std::string& rhs) {
    if (!(a > b)) out.push_back(lhs + " > " + rhs + " required (" + lhs + " = " + num(a) + ", " + rhs + " = " + num(b) + ")");
}

bool is_field_suite(const std::string& s) {
    return s == "roundtrip" || s == "norms" || s == "maximal" || s == "atoms" || s == "theorem11" || s == "theorem12";
}

constexpr std::size_t kMaxSamples = std::size_t{1} << 22;

void validate_grid(const ExperimentConfig& c, std::vector<std::string>& out) {
    if (c.dim != 1 && c.dim != 2) {
        out.push_back("d in {1, 2} required (d = " + std::to_string(c.dim) + ")");
        return;
    }
    if (c.n < 8 || !is_power_of_two(c.n)) out.push_back("n must be a power of two >= 8 (n = " + std::to_string(c.n) + ")");
    int e = 0;
    if (!(c.half_width > 0.0) || std::frexp(c.half_width, &e) != 0.5)
        out.push_back("half-width must be a power of two (L = " + num(c.half_width) + ")");
    if (c.trials < 0) out.push_back("trials >= 0 required (trials = " + std::to_string(c.trials) + ")");
    if (c.kmin > c.kmax) out.push_back("kmin <= kmax required (kmin = " + std::to_string(c.kmin) + ", kmax = " + std::to_string(c.kmax) + ")");
    if (!out.empty()) return;

    const GridSpec g(c.dim, c.n, c.half_width);
    const double size = std::pow(2.0 * static_cast<double>(c.n), c.dim);  // refinement doubles n
    if (c.suite != "counterexample" && c.suite != "partition" && size > static_cast<double>(kMaxSamples))
        out.push_back("(2n)^d <= 2^22 required for the refinement grid (2n = " + std::to_string(2 * c.n) + ")");
    const double nyq = g.nyquist();
    const double top = std::ldexp(1.0, c.kmax);

    if (is_field_suite(c.suite)) {
        if (c.kmin < -g.dyadic_level())
            out.push_back("kmin >= -log2 L required (kmin = " + std::to_string(c.kmin) + ", -log2 L = " + std::to_string(-g.dyadic_level()) + ")");
        if (c.kmax > g.finest_scale())
            out.push_back("kmax <= log2(1/h) required (kmax = " + std::to_string(c.kmax) + ", log2(1/h) = " + std::to_string(g.finest_scale()) + ")");
        require_less(out, c.suite == "roundtrip" ? top : top / 2.0, nyq, c.suite == "roundtrip" ? "2^kmax" : "2^(kmax-1)", "Nyquist");
    }
    if (c.suite == "partition" || c.suite == "corollary13") {
        if (!(2.0 * top <= nyq)) out.push_back("2^(kmax+1) <= Nyquist required (2^(kmax+1) = " + num(2.0 * top) + ", Nyquist = " + num(nyq) + ")");
    }
    if (c.suite == "lemma61") {
        require_less(out, std::ldexp(1.0, c.kmin - 2), nyq, "2^(kmin-2)", "Nyquist");
        const double fine = std::pow(static_cast<double>(c.n) * std::ldexp(2.0, c.kmax - c.kmin), c.dim);
        if (fine > static_cast<double>(kMaxSamples))
            out.push_back("(2n 2^(kmax-kmin))^d <= 2^22 required for the rescaled grids");
    }
    if (c.suite == "theorem12") {
        if (c.mu.empty()) out.push_back("theorem12 needs at least one mu");
        for (int m : c.mu) {
            if (m < -g.dyadic_level() || m > c.kmax)
                out.push_back("-log2 L <= mu <= kmax required (mu = " + std::to_string(m) + ", range [" +
                              std::to_string(-g.dyadic_level()) + ", " + std::to_string(c.kmax) + "])");
        }
    }
    if (c.suite == "counterexample") {
        const auto shape = EtaShape::preset(c.dim);
        require_less(out, g.spacing(), shape.flat_radius, "h", "eta flat radius");
        if (!(shape.support_radius >= 4.0 * g.frequency_spacing()))
            out.push_back("eta support radius >= 4/(2L) required (radius = " + num(shape.support_radius) + ", 4/(2L) = " + num(4.0 * g.frequency_spacing()) + ")");
        require_less(out, 2.0 * shape.support_radius, nyq, "2 rho", "Nyquist");
    }
}

void validate_exponents(const ExperimentConfig& c, std::vector<std::string>& out) {
    const double d = c.dim;
    const double p = c.p, q = c.q, s = c.s, r = c.r;
    if (!(p > 0.0) || !(q > 0.0)) {
        out.push_back("p > 0 and q > 0 required (p = " + num(p) + ", q = " + num(q) + ")");
        return;
    }
    ExponentTuple e{c.dim, p, q, s, r};
    const auto& suite = c.suite;
    if (suite == "lemma61") {
        require_greater(out, s, std::abs(d / p - d / 2), "s", "|d/p - d/2|");
        require_less(out, s, d / e.min1p(), "s", "d/min(1,p)");
        if (s > d / e.min1p() - d) require_greater(out, r, e.tau_sp(), "r", "tau^(s,p)");
        if (std::isinf(p)) out.push_back("p < inf required for lemma61 (L^inf sampling is covered by theorem11)");
    } else if (suite == "theorem11" || suite == "corollary13") {
        const double lo = std::max(std::abs(d / p - d / 2), std::abs(d / q - d / 2));
        require_greater(out, s, lo, "s", "max(|d/p - d/2|, |d/q - d/2|)");
        require_less(out, s, d / e.min1pq(), "s", "d/min(1,p,q)");
        if (s > d / e.min1pq() - d) require_greater(out, r, e.tau_spq(), "r", "tau^(s,p,q)");
        if (suite == "theorem11" && std::isinf(p) && !std::isinf(q))
            out.push_back("p < inf required unless p = q = inf (p = inf, q = " + num(q) + ")");
    } else if (suite == "theorem12") {
        ExponentTuple eq{c.dim, q, q, s, r};
        require_greater(out, s, std::abs(d / q - d / 2), "s", "|d/q - d/2|");
        require_less(out, s, d / eq.min1p(), "s", "d/min(1,q)");
        if (s > d / eq.min1p() - d) require_greater(out, r, eq.tau_sp(), "r", "tau^(s,q)");
        require_less(out, q, kInfinity, "q", "inf");
    } else if (suite == "maximal" || suite == "norms") {
        require_less(out, p, kInfinity, "p", "inf");
        if (suite == "norms") {
            if (!(s >= 0.0)) out.push_back("s >= 0 required for the embedding sweep (s = " + num(s) + ")");
            require_greater(out, r, 1.0, "r", "1");
            require_less(out, r, kInfinity, "r", "inf");
        }
    } else if (suite == "atoms") {
        if (!(p <= 1.0)) out.push_back("p <= 1 required (p = " + num(p) + ")");
        if (!(q >= p)) out.push_back("q >= p required (q = " + num(q) + ", p = " + num(p) + ")");
    } else if (suite == "counterexample") {
        const CounterexampleParams cp{c.dim, p, q, s, c.gamma};
        for (auto& v : cp.violations()) out.push_back(v);
    }
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : DomainError("invalid configuration: " + join(violations, "; ")), violations_(std::move(violations)) {}

nlohmann::json exponent_to_json(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double exponent_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return kInfinity;
        if (s == "-inf") return -kInfinity;
        throw DomainError("exponent string must be \"inf\" (got \"" + s + "\")");
    }
    return j.get<double>();
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["dim"] = dim;
    j["n"] = n;
    j["half_width"] = half_width;
    j["kmin"] = kmin;
    j["kmax"] = kmax;
    j["p"] = exponent_to_json(p);
    j["q"] = exponent_to_json(q);
    j["s"] = s;
    j["r"] = exponent_to_json(r);
    j["mu"] = mu;
    j["gamma"] = gamma;
    j["envelope"] = envelope;
    j["cutoff"] = cutoff;
    j["alpha"] = alpha;
    j["multiplier"] = multiplier;
    j["trials"] = trials;
    j["seed"] = seed;
    j["out"] = out;
    return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.suite = j.at("suite").get<std::string>();
    c.dim = j.at("dim").get<int>();
    c.n = j.at("n").get<std::size_t>();
    c.half_width = j.at("half_width").get<double>();
    c.kmin = j.at("kmin").get<int>();
    c.kmax = j.at("kmax").get<int>();
    c.p = exponent_from_json(j.at("p"));
    c.q = exponent_from_json(j.at("q"));
    c.s = j.at("s").get<double>();
    c.r = exponent_from_json(j.at("r"));
    c.mu = j.at("mu").get<std::vector<int>>();
    c.gamma = j.at("gamma").get<double>();
    c.envelope = j.at("envelope").get<double>();
    c.cutoff = j.at("cutoff").get<double>();
    c.alpha = j.at("alpha").get<double>();
    c.multiplier = j.at("multiplier").get<std::string>();
    c.trials = j.at("trials").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.out = j.at("out").get<std::string>();
    return c;
}

ExperimentConfig preset(const std::string& suite) {
    ExperimentConfig c;
    c.suite = suite;
    if (suite == "partition") {
        c.n = 1024;
        c.half_width = 2.0;
        c.kmin = -3;
        c.kmax = 6;
        c.trials = 0;
    } else if (suite == "roundtrip") {
        c.n = 256;
        c.half_width = 8.0;
        c.kmin = -1;
        c.kmax = 2;
        c.trials = 50;
    } else if (suite == "norms") {
        c.n = 256;
        c.half_width = 8.0;
        c.kmin = -1;
        c.kmax = 3;
        c.trials = 20;
    } else if (suite == "maximal") {
        c.n = 512;
        c.half_width = 16.0;
        c.kmin = 0;
        c.kmax = 3;
        c.trials = 20;
    } else if (suite == "atoms") {
        c.n = 128;
        c.half_width = 4.0;
        c.kmin = -1;
        c.kmax = 2;
        c.q = 2.0;
        c.p = 1.0;
        c.trials = 100;
    } else if (suite == "lemma61") {
        c.n = 256;
        c.half_width = 16.0;
        c.kmin = 0;
        c.kmax = 5;
        c.p = 0.8;
        c.s = 1.0;
        c.r = 1.5;
        c.trials = 50;
    } else if (suite == "theorem11") {
        c.n = 256;
        c.half_width = 8.0;
        c.kmin = -1;
        c.kmax = 3;
        c.trials = 100;
    } else if (suite == "theorem12") {
        // mu stays at least 4 below kmax so every cube still sums five scales.
        c.n = 512;
        c.half_width = 8.0;
        c.kmin = -3;
        c.kmax = 4;
        c.mu = {-3, -2, -1, 0};
        c.trials = 50;
    } else if (suite == "corollary13") {
        c.n = 256;
        c.half_width = 8.0;
        c.kmin = -1;
        c.kmax = 2;
        c.trials = 50;
    } else if (suite == "counterexample") {
        c.n = std::size_t{1} << 18;
        c.half_width = 1024.0;
        c.p = 1.0;
        c.q = 1.0;
        c.s = 0.6;
        c.gamma = 1.6;
        c.trials = 0;
    } else {
        throw ConfigError({"unknown suite \"" + suite + "\""});
    }
    return c;
}

std::vector<std::string> validate(const ExperimentConfig& config) {
    std::vector<std::string> out;
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
        out.push_back("unknown suite \"" + config.suite + "\"");
        return out;
    }
    if (config.multiplier != "random" && config.multiplier != "identity" && config.multiplier != "zero")
        out.push_back("multiplier must be random, identity or zero (got \"" + config.multiplier + "\")");
    if (!(config.envelope >= 0.0)) out.push_back("envelope exponent >= 0 required");
    if (!(config.cutoff > 0.0)) out.push_back("cutoff > 0 required");
    validate_grid(config, out);
    validate_exponents(config, out);
    return out;
}

bool ExperimentReport::passed() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

void ExperimentReport::summarize() {
    if (ratios.empty()) {
        ensemble_max = ensemble_median = 0.0;
        return;
    }
    ensemble_max = *std::max_element(ratios.begin(), ratios.end());
    std::vector<double> sorted = ratios;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size() / 2;
    ensemble_median = sorted.size() % 2 ? sorted[m] : 0.5 * (sorted[m - 1] + sorted[m]);
}

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["suite"] = suite;
    j["header"] =
        "Bounded operator is read as a refinement-stable ensemble maximum of the trial ratios; "
        "a finite sample cannot prove a norm inequality.";
    j["config"] = config.to_json();
    j["ratios"] = ratios;
    j["ensemble_max"] = ensemble_max;
    j["ensemble_median"] = ensemble_median;
    nlohmann::json m = nlohmann::json::object();
    for (const auto& [k, v] : metrics) m[k] = exponent_to_json(v);
    j["metrics"] = m;
    j["checks"] = checks;
    j["passed"] = passed();
    nlohmann::json t = nlohmann::json::array();
    for (const auto& series : trends)
        t.push_back({{"name", series.name}, {"x_label", series.x_label}, {"x", series.x}, {"y", series.y}});
    j["trends"] = t;
    if (refinement) {
        const auto& r = *refinement;
        j["refinement"] = {{"n_coarse", r.n_coarse},       {"n_fine", r.n_fine},
                           {"max_coarse", r.max_coarse},   {"max_fine", r.max_fine},
                           {"relative_change", r.relative_change}, {"tolerance", r.tolerance},
                           {"stable", r.stable}};
    } else {
        j["refinement"] = nullptr;
    }
    j["notes"] = notes;
    return j;
}

std::string ExperimentReport::trends_csv() const {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "trend,x_label,x,y\n";
    for (const auto& series : trends)
        for (std::size_t i = 0; i < series.x.size(); ++i)
            os << series.name << ',' << series.x_label << ',' << series.x[i] << ',' << series.y[i] << '\n';
    return os.str();
}

std::string ExperimentReport::summary_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (d = " << config.dim << ", n = " << config.n << ", L = " << config.half_width
       << ", k in [" << config.kmin << ", " << config.kmax << "], trials = " << config.trials << ", seed = " << config.seed << ")\n";
    if (!ratios.empty()) os << "  ratios: max " << num(ensemble_max) << ", median " << num(ensemble_median) << "\n";
    if (refinement)
        os << "  refinement n=" << refinement->n_coarse << " -> " << refinement->n_fine << ": max " << num(refinement->max_coarse)
           << " -> " << num(refinement->max_fine) << " (change " << num(refinement->relative_change) << ", tolerance "
           << num(refinement->tolerance) << ")\n";
    for (const auto& [k, v] : metrics) os << "  " << k << " = " << num(v) << "\n";
    for (const auto& [k, ok] : checks) os << "  [" << (ok ? "ok" : "FAILED") << "] " << k << "\n";
    for (const auto& n : notes) os << "  note: " << n << "\n";
    os << (passed() ? "all checks hold\n" : "some checks failed\n");
    return os.str();
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    auto v = validate(config);
    if (!v.empty()) throw ConfigError(std::move(v));
    const auto& s = config.suite;
    if (s == "partition") return run_partition_suite(config);
    if (s == "roundtrip") return run_roundtrip_suite(config);
    if (s == "norms") return run_norms_suite(config);
    if (s == "maximal") return run_maximal_suite(config);
    if (s == "atoms") return run_atoms_suite(config);
    if (s == "lemma61") return run_lemma61_suite(config);
    if (s == "theorem11") return run_theorem11_suite(config);
    if (s == "theorem12") return run_theorem12_suite(config);
    if (s == "corollary13") return run_corollary13_suite(config);
    return run_counterexample_suite(config);
}

}  // namespace vvfm
