#include "levykit/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "levykit/errors.hpp"
#include "levykit/quadrature.hpp"
#include "levykit/rng.hpp"

namespace levykit {

namespace {

constexpr std::size_t kChunk = 16384;  // fixed; determinism across thread counts

struct AtomChannel {
    double y;
    double lambda;
};

// inverse-CDF table for a continuous piece, positive side
struct TableChannel {
    double rate = 0.0;  // t * mass of both signs
    std::vector<double> ys;
    std::vector<double> cdf;  // normalized, same length
};

struct Recipe {
    bool direct_gaussian = false;
    double direct_sigma = 0.0;
    std::vector<AtomChannel> atoms;
    std::vector<TableChannel> tables;
    double comp_sigma = 0.0;
};

TableChannel build_table(const std::function<double(double)>& density, double lo,
                         double hi, double t, bool log_spaced) {
    const int cells = 2048;
    TableChannel table;
    table.ys.resize(cells + 1);
    table.cdf.resize(cells + 1);
    for (int i = 0; i <= cells; ++i) {
        const double s = static_cast<double>(i) / cells;
        table.ys[i] = log_spaced ? lo * std::pow(hi / lo, s) : lo + (hi - lo) * s;
    }
    table.cdf[0] = 0.0;
    for (int i = 1; i <= cells; ++i) {
        QuadResult q = integrate(density, table.ys[i - 1], table.ys[i], 1e-14, 1e-10);
        table.cdf[i] = table.cdf[i - 1] + q.value;
    }
    const double mass = table.cdf.back();
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw numeric_error("jump-size table has no usable mass");
    for (double& v : table.cdf) v /= mass;
    table.rate = 2.0 * t * mass;
    return table;
}

void add_measure(Recipe& recipe, const LevyMeasure& m, double t, double eps,
                 Compensation comp) {
    switch (m.variant()) {
        case MeasureVariant::discrete_atoms: {
            for (const auto& a : m.atom_list()) {
                const double y = a.location[0];
                if (std::fabs(y) >= eps)
                    recipe.atoms.push_back({y, t * a.mass});
                else if (comp == Compensation::gaussian)
                    recipe.comp_sigma += t * a.mass * y * y;  // variance for now
            }
            return;
        }
        case MeasureVariant::radial_density: {
            const auto& rp = m.radial_part();
            if (!(eps > 0.0))
                throw invalid_input_error(
                    "infinite-activity radial measure needs a truncation epsilon > 0");
            if (eps < rp.radius) {
                recipe.tables.push_back(
                    build_table(rp.density, eps, rp.radius, t, true));
            }
            if (comp == Compensation::gaussian) {
                auto second = [&](double r) { return r * r * rp.density(r); };
                recipe.comp_sigma +=
                    2.0 * t *
                    integrate_singular_lower(second, 0.0, std::min(eps, rp.radius)).value;
            }
            return;
        }
        case MeasureVariant::tempered_tail: {
            const auto& tp = m.tempered_part();
            const double beta = tp.beta;
            const double hi = std::pow(46.1, 1.0 / beta) + 1.0;
            const double lo = std::max(1.0, eps);
            if (lo < hi) {
                recipe.tables.push_back(build_table(
                    [beta](double y) { return std::exp(-std::pow(y, beta)); }, lo, hi,
                    t, false));
            }
            if (tp.core) add_measure(recipe, *tp.core, t, eps, comp);
            return;
        }
        case MeasureVariant::composite: {
            for (const auto& p : m.parts()) add_measure(recipe, p, t, eps, comp);
            return;
        }
    }
}

Recipe build_recipe(const SamplePlan& plan) {
    if (plan.count < 1) throw invalid_input_error("sample count must be >= 1");
    if (!(plan.t > 0.0)) throw invalid_input_error("time must be positive");
    Recipe recipe;
    if (plan.model.closed_form() == ClosedForm::gaussian) {
        recipe.direct_gaussian = true;
        recipe.direct_sigma = std::sqrt(2.0 * plan.t);
        return recipe;
    }
    if (!plan.model.has_measure())
        throw feature_error(
            "sampling needs a Levy measure or the gaussian channel (exact stable "
            "simulation is out of scope)");
    if (plan.model.dim() != 1) throw feature_error("sampling is one-dimensional");
    add_measure(recipe, plan.model.measure(), plan.t, plan.epsilon,
                plan.compensation);
    recipe.comp_sigma = std::sqrt(recipe.comp_sigma);

    double expected_jumps = 0.0;
    for (const auto& a : recipe.atoms) expected_jumps += a.lambda;
    for (const auto& tab : recipe.tables) expected_jumps += tab.rate;
    if (expected_jumps > 1e7)
        throw invalid_input_error(
            "expected jump count per sample exceeds 1e7; raise epsilon");
    return recipe;
}

double draw_one(const Recipe& recipe, Rng& rng) {
    if (recipe.direct_gaussian) return recipe.direct_sigma * rng.normal();
    double x = 0.0;
    for (const auto& a : recipe.atoms)
        x += a.y * static_cast<double>(rng.poisson(a.lambda));
    for (const auto& tab : recipe.tables) {
        const long long jumps = rng.poisson(tab.rate);
        for (long long j = 0; j < jumps; ++j) {
            const double u = rng.uniform();
            const auto it = std::lower_bound(tab.cdf.begin(), tab.cdf.end(), u);
            const std::size_t hi = std::min<std::size_t>(
                std::max<std::ptrdiff_t>(1, it - tab.cdf.begin()), tab.cdf.size() - 1);
            const double c0 = tab.cdf[hi - 1], c1 = tab.cdf[hi];
            const double frac = c1 > c0 ? (u - c0) / (c1 - c0) : 0.5;
            const double y = tab.ys[hi - 1] + frac * (tab.ys[hi] - tab.ys[hi - 1]);
            x += rng.uniform() < 0.5 ? -y : y;
        }
    }
    if (recipe.comp_sigma > 0.0) x += recipe.comp_sigma * rng.normal();
    return x;
}

}  // namespace

std::vector<double> sample_increments(const SamplePlan& plan, Exec exec) {
    const Recipe recipe = build_recipe(plan);
    std::vector<double> out(plan.count);
    const std::size_t chunks = (plan.count + kChunk - 1) / kChunk;
    parallel_for(
        chunks,
        [&](std::size_t c) {
            Rng rng(plan.seed, c);
            const std::size_t lo = c * kChunk;
            const std::size_t hi = std::min(lo + kChunk, plan.count);
            for (std::size_t i = lo; i < hi; ++i) out[i] = draw_one(recipe, rng);
        },
        exec);
    return out;
}

EmpiricalComparison empirical_vs_fourier(const SamplePlan& plan,
                                         const DensityGrid& grid, Exec exec) {
    std::vector<double> samples = sample_increments(plan, exec);
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();

    // CDF by cumulative trapezoid over the grid, normalized
    std::vector<double> cdf(grid.p.size(), 0.0);
    for (std::size_t j = 1; j < grid.p.size(); ++j)
        cdf[j] = cdf[j - 1] + 0.5 * (grid.p[j] + grid.p[j - 1]) * grid.dx;
    const double total = cdf.back();
    if (!(total > 0.0)) throw numeric_error("density grid has no mass");
    for (double& v : cdf) v /= total;

    auto cdf_at = [&](double x) {
        if (x <= grid.x.front()) return 0.0;
        if (x >= grid.x.back()) return 1.0;
        const double pos = (x - grid.x.front()) / grid.dx;
        const std::size_t j = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(j);
        return cdf[j] + frac * (cdf[j + 1] - cdf[j]);
    };

    EmpiricalComparison cmp;
    cmp.count = n;
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f = cdf_at(samples[i]);
        ks = std::max(ks, std::fabs(f - static_cast<double>(i) / n));
        ks = std::max(ks, std::fabs(f - static_cast<double>(i + 1) / n));
    }
    cmp.ks_distance = ks;

    std::vector<std::size_t> counts(grid.p.size(), 0);
    for (double s : samples) {
        const double pos = std::round((s - grid.x.front()) / grid.dx);
        if (pos < 0 || pos >= static_cast<double>(counts.size())) continue;
        ++counts[static_cast<std::size_t>(pos)];
    }
    double gap = 0.0;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        const double emp = static_cast<double>(counts[j]) /
                           (static_cast<double>(n) * grid.dx);
        gap = std::max(gap, std::fabs(emp - grid.p[j]));
    }
    cmp.sup_density_gap = gap;
    return cmp;
}

void write_samples(const std::string& path, const SamplePlan& plan,
                   const std::vector<double>& samples) {
    {
        const std::string tmp = path + ".tmp";
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw invalid_input_error("cannot open " + tmp);
        out.write(reinterpret_cast<const char*>(samples.data()),
                  static_cast<std::streamsize>(samples.size() * sizeof(double)));
        out.close();
        if (std::rename(tmp.c_str(), path.c_str()) != 0)
            throw invalid_input_error("cannot move samples into place");
    }
    std::ostringstream sidecar;
    sidecar << "{\"seed\": " << plan.seed << ", \"n\": " << samples.size()
            << ", \"t\": " << plan.t << ", \"epsilon\": " << plan.epsilon
            << ", \"model\": \"" << plan.model.describe() << "\"}\n";
    const std::string jtmp = path + ".json.tmp";
    std::ofstream jout(jtmp);
    jout << sidecar.str();
    jout.close();
    if (std::rename(jtmp.c_str(), (path + ".json").c_str()) != 0)
        throw invalid_input_error("cannot move sidecar into place");
}

}  // namespace levykit
