#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace levykit {

class LevyMeasure;

/// Jump density given by its value at radius r, supported on 0 < |y| <= radius.
struct RadialDensityPart {
    std::function<double(double)> density;
    double radius = 1.0;
};

struct Atom {
    std::vector<double> location;
    double mass = 0.0;
};

/// Density e^{-|y|^beta} on |y| >= 1 plus an optional core measure.
struct TemperedTailPart {
    double beta = 2.0;
    std::shared_ptr<const LevyMeasure> core;
};

enum class MeasureVariant { radial_density, discrete_atoms, tempered_tail, composite };

/// A symmetric Levy measure on R^n \ {0} with int (1 and |y|^2) nu(dy) < inf.
/// Drift and Gaussian part are always zero.
class LevyMeasure {
public:
    static LevyMeasure radial(std::function<double(double)> density, double radius,
                              int dim);
    /// Atom list; must be closed under y -> -y with equal masses.
    static LevyMeasure atoms(std::vector<Atom> atoms, int dim);
    /// 1-D atom ladder with locations 2^{-k} and masses 2^{alpha k} per sign,
    /// k = 0..depth-1. depth = 64 truncates below double precision for every
    /// evaluation at desk scale.
    static LevyMeasure semi_stable(double alpha, int depth = 64);
    static LevyMeasure tempered_tail(double beta,
                                     std::optional<LevyMeasure> core = std::nullopt);
    static LevyMeasure composite(std::vector<LevyMeasure> parts);

    MeasureVariant variant() const { return variant_; }
    int dim() const { return dim_; }

    const std::vector<Atom>& atom_list() const { return atoms_; }
    const RadialDensityPart& radial_part() const { return radial_; }
    const TemperedTailPart& tempered_part() const { return tempered_; }
    const std::vector<LevyMeasure>& parts() const { return parts_; }

    bool compact_support() const;
    /// Smallest R with supp nu inside the closed ball of radius R (inf for
    /// tempered tails).
    double support_radius() const;

    std::string describe() const;

private:
    LevyMeasure() = default;

    MeasureVariant variant_ = MeasureVariant::discrete_atoms;
    int dim_ = 1;
    std::vector<Atom> atoms_;
    RadialDensityPart radial_;
    TemperedTailPart tempered_;
    std::vector<LevyMeasure> parts_;
    std::string label_;
};

/// True when the measure integrates e^{alpha . y} for every alpha: compact
/// support, or a tempered tail with beta > 1 (all parts, for composites).
bool check_exp_moments(const LevyMeasure& m);

}  // namespace levykit
