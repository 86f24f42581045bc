#include "vvfm/atoms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "vvfm/norms.hpp"

namespace vvfm {
namespace {

double density(const DyadicCube& q, cplx b) { return std::abs(b) / std::sqrt(q.volume()); }

// g^q(b) on the scale-`finest` descendants of the entries. Missing leaves are 0.
std::map<DyadicCube, double> leaf_values(const CubeCoefficients& b, double q, int finest) {
    std::map<DyadicCube, double> acc;
    for (const auto& [cube, value] : b) {
        if (value == cplx{}) continue;
        const double c = density(cube, value);
        const double contrib = std::isinf(q) ? c : std::pow(c, q);
        for (const auto& leaf : cubes_in(finest, cube)) {
            double& slot = acc[leaf];
            slot = std::isinf(q) ? std::max(slot, contrib) : slot + contrib;
        }
    }
    if (!std::isinf(q)) {
        for (auto& [leaf, v] : acc) v = std::pow(v, 1.0 / q);
    }
    return acc;
}

// Largest integer j with 2^j < v (v > 0).
int level_below(double v) {
    int e = 0;
    const double m = std::frexp(v, &e);  // v = m 2^e, m in [1/2, 1)
    return m == 0.5 ? e - 2 : e - 1;
}

double power_of_two_at_least(double v) {
    int e = 0;
    const double m = std::frexp(v, &e);
    return m == 0.5 ? v : std::ldexp(1.0, e);
}

}  // namespace

double gq_sup(const CubeCoefficients& b, double q) {
    if (!(q > 0.0)) throw DomainError("gq_sup: q must be positive");
    if (b.empty()) return 0.0;
    double best = 0.0;
    for (const auto& [leaf, v] : leaf_values(b, q, b.max_scale())) best = std::max(best, v);
    return best;
}

bool verify_atom(const InfinityAtom& a) {
    for (const auto& [cube, value] : a.coefficients) {
        if (value != cplx{} && !a.support.contains(cube)) return false;
    }
    const double bound = std::pow(a.support.volume(), -1.0 / a.p);
    return gq_sup(a.coefficients, a.q) <= bound * (1.0 + 1e-14);
}

double AtomicDecomposition::lambda_lp(double p) const {
    double acc = 0.0;
    for (double l : lambdas) acc += std::pow(std::abs(l), p);
    return std::pow(acc, 1.0 / p);
}

CubeCoefficients AtomicDecomposition::reconstruct(int dim) const {
    CubeCoefficients out(dim);
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        for (const auto& [cube, value] : atoms[j].coefficients) out.add(cube, lambdas[j] * value);
    }
    return out;
}

AtomicDecomposition decompose_atoms(const CubeCoefficients& b, double p, double q) {
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("decompose_atoms: p must lie in (0, 1]");
    if (!(q >= p)) {
        std::ostringstream msg;
        msg << "decompose_atoms: q >= p required (got q = " << q << ", p = " << p << ")";
        throw DomainError(msg.str());
    }
    AtomicDecomposition out;
    bool any = false;
    for (const auto& [cube, value] : b) any = any || value != cplx{};
    if (!any) return out;

    const int finest = b.max_scale();
    const auto leaves = leaf_values(b, q, finest);
    const int dim = b.dim();
    const double leaf_volume = std::ldexp(1.0, -finest * dim);

    // Level of each nonzero entry: the largest j with |Q cap Omega_j| > |Q|/2,
    // i.e. 2^j below the upper-median leaf value inside Q.
    std::map<DyadicCube, int> level;
    for (const auto& [cube, value] : b) {
        if (value == cplx{}) continue;
        std::vector<double> vals;
        for (const auto& leaf : cubes_in(finest, cube)) vals.push_back(leaves.at(leaf));
        const std::size_t idx = vals.size() / 2;  // 0-based rank of the (N/2 + 1)-th largest
        std::nth_element(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(idx), vals.end(), std::greater<>());
        level[cube] = level_below(vals[idx]);
    }

    // For every level in use, count Omega_j leaves inside each ancestor cube.
    std::map<int, std::map<DyadicCube, std::size_t>> counts;
    std::map<int, int> coarsest;
    for (const auto& [cube, j] : level) {
        if (counts.count(j)) continue;
        const double threshold = std::ldexp(1.0, j);
        std::size_t omega_leaves = 0;
        for (const auto& [leaf, v] : leaves) omega_leaves += v > threshold ? 1 : 0;
        // Below this scale |P| > 2 |Omega_j|, so the density cannot exceed 1/2.
        const double omega_volume = static_cast<double>(omega_leaves) * leaf_volume;
        int nu_low = finest;
        while (std::ldexp(1.0, -(nu_low - 1) * dim) <= 2.0 * omega_volume) --nu_low;
        coarsest[j] = nu_low;
        auto& c = counts[j];
        for (const auto& [leaf, v] : leaves) {
            if (v <= threshold) continue;
            for (int nu = nu_low; nu <= finest; ++nu) ++c[leaf.ancestor(nu)];
        }
    }

    std::map<std::pair<int, DyadicCube>, CubeCoefficients> buckets;
    for (const auto& [cube, j] : level) {
        const auto& c = counts.at(j);
        DyadicCube top = cube;
        for (int nu = coarsest.at(j); nu <= cube.k; ++nu) {
            const DyadicCube anc = cube.ancestor(nu);
            auto it = c.find(anc);
            if (it != c.end() && static_cast<double>(it->second) * leaf_volume > 0.5 * anc.volume()) {
                top = anc;
                break;
            }
        }
        auto [it, inserted] = buckets.try_emplace({j, top}, CubeCoefficients(dim));
        it->second.set(cube, b.get(cube));
    }

    for (auto& [key, coeffs] : buckets) {
        const DyadicCube& top = key.second;
        const double size = std::pow(top.volume(), 1.0 / p) * gq_sup(coeffs, q);
        const double lambda = power_of_two_at_least(size);
        CubeCoefficients atom(dim);
        for (const auto& [cube, value] : coeffs) atom.set(cube, value / lambda);
        out.lambdas.push_back(lambda);
        out.atoms.push_back(InfinityAtom{top, std::move(atom), p, q});
    }
    return out;
}

}  // namespace vvfm
