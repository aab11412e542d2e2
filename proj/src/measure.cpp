#include "levykit/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "levykit/errors.hpp"

namespace levykit {

namespace {

bool same_point(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] + b[i]) > tol) return false;
    return true;
}

}  // namespace

LevyMeasure LevyMeasure::radial(std::function<double(double)> density, double radius,
                                int dim) {
    if (!density || !(radius > 0.0))
        throw invalid_input_error("radial measure needs a density and a positive radius");
    if (dim < 1 || dim > 3)
        throw precondition_error("radial measures support dimensions 1..3");
    LevyMeasure m;
    m.variant_ = MeasureVariant::radial_density;
    m.dim_ = dim;
    m.radial_ = RadialDensityPart{std::move(density), radius};
    m.label_ = "radial_density";
    return m;
}

LevyMeasure LevyMeasure::atoms(std::vector<Atom> atoms, int dim) {
    if (dim < 1) throw invalid_input_error("dimension must be positive");
    for (const auto& a : atoms) {
        if (static_cast<int>(a.location.size()) != dim)
            throw invalid_input_error("atom dimension mismatch");
        if (!(a.mass > 0.0)) throw invalid_input_error("atom masses must be positive");
        double norm = 0.0;
        for (double c : a.location) norm += c * c;
        if (!(norm > 0.0)) throw invalid_input_error("atoms must avoid the origin");
    }
    // symmetry: every atom needs a mirror with equal mass
    for (const auto& a : atoms) {
        bool found = false;
        for (const auto& b : atoms) {
            if (same_point(a.location, b.location, 1e-12) &&
                std::fabs(a.mass - b.mass) <= 1e-12 * a.mass) {
                found = true;
                break;
            }
        }
        if (!found)
            throw precondition_error(
                "atom set is not closed under y -> -y with equal masses");
    }
    LevyMeasure m;
    m.variant_ = MeasureVariant::discrete_atoms;
    m.dim_ = dim;
    m.atoms_ = std::move(atoms);
    m.label_ = "discrete_atoms";
    return m;
}

LevyMeasure LevyMeasure::semi_stable(double alpha, int depth) {
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw precondition_error("semi-stable ladder needs alpha in (0,2)");
    if (depth < 1 || depth > 256) throw invalid_input_error("depth out of range");
    std::vector<Atom> atoms;
    atoms.reserve(2 * static_cast<std::size_t>(depth));
    for (int k = 0; k < depth; ++k) {
        const double y = std::ldexp(1.0, -k);
        const double mass = std::pow(2.0, alpha * k);
        atoms.push_back({{y}, mass});
        atoms.push_back({{-y}, mass});
    }
    LevyMeasure m = LevyMeasure::atoms(std::move(atoms), 1);
    std::ostringstream label;
    label << "semi_stable(alpha=" << alpha << ")";
    m.label_ = label.str();
    return m;
}

LevyMeasure LevyMeasure::tempered_tail(double beta, std::optional<LevyMeasure> core) {
    if (!(beta > 0.0)) throw invalid_input_error("beta must be positive");
    LevyMeasure m;
    m.variant_ = MeasureVariant::tempered_tail;
    m.dim_ = 1;
    m.tempered_.beta = beta;
    if (core) {
        if (core->dim() != 1)
            throw precondition_error("tempered tails are one-dimensional");
        m.tempered_.core = std::make_shared<LevyMeasure>(std::move(*core));
    }
    m.label_ = "tempered_tail";
    return m;
}

LevyMeasure LevyMeasure::composite(std::vector<LevyMeasure> parts) {
    if (parts.empty()) throw invalid_input_error("composite needs at least one part");
    const int dim = parts.front().dim();
    for (const auto& p : parts)
        if (p.dim() != dim) throw invalid_input_error("composite parts disagree on dimension");
    LevyMeasure m;
    m.variant_ = MeasureVariant::composite;
    m.dim_ = dim;
    m.parts_ = std::move(parts);
    m.label_ = "composite";
    return m;
}

bool LevyMeasure::compact_support() const {
    switch (variant_) {
        case MeasureVariant::radial_density:
        case MeasureVariant::discrete_atoms:
            return true;
        case MeasureVariant::tempered_tail:
            return false;
        case MeasureVariant::composite:
            return std::all_of(parts_.begin(), parts_.end(),
                               [](const LevyMeasure& p) { return p.compact_support(); });
    }
    return false;
}

double LevyMeasure::support_radius() const {
    switch (variant_) {
        case MeasureVariant::radial_density:
            return radial_.radius;
        case MeasureVariant::discrete_atoms: {
            double r = 0.0;
            for (const auto& a : atoms_) {
                double norm = 0.0;
                for (double c : a.location) norm += c * c;
                r = std::max(r, std::sqrt(norm));
            }
            return r;
        }
        case MeasureVariant::tempered_tail:
            return std::numeric_limits<double>::infinity();
        case MeasureVariant::composite: {
            double r = 0.0;
            for (const auto& p : parts_) r = std::max(r, p.support_radius());
            return r;
        }
    }
    return 0.0;
}

std::string LevyMeasure::describe() const { return label_; }

bool check_exp_moments(const LevyMeasure& m) {
    switch (m.variant()) {
        case MeasureVariant::radial_density:
        case MeasureVariant::discrete_atoms:
            return true;  // compact support
        case MeasureVariant::tempered_tail: {
            if (!(m.tempered_part().beta > 1.0)) return false;
            return !m.tempered_part().core || check_exp_moments(*m.tempered_part().core);
        }
        case MeasureVariant::composite:
            return std::all_of(m.parts().begin(), m.parts().end(),
                               [](const LevyMeasure& p) { return check_exp_moments(p); });
    }
    return false;
}

}  // namespace levykit
