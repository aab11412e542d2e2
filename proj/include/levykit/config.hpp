#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levykit/bernstein.hpp"
#include "levykit/model.hpp"

namespace levykit {

struct BernsteinConfig {
    std::string kind;  // power | log1p | ratio
    double alpha = 0.0;
};

struct ClosedFormConfig {
    std::string kind;  // gaussian | stable | semi_stable
    double alpha = 0.0;
};

/// JSON model description. Variants: discrete_atoms (atoms [[y,mass],...]),
/// semi_stable (alpha, depth), tempered_tail (beta, optional core),
/// bernstein_radial (bernstein), closed_form (closed_form_psi only).
/// Unknown keys are rejected; serialization is canonical so configs
/// round-trip byte for byte.
struct ModelConfig {
    std::string variant;
    int dim = 1;
    std::vector<std::pair<double, double>> atoms;
    double alpha = 0.0;
    int depth = 64;
    double beta = 0.0;
    std::shared_ptr<ModelConfig> core;
    std::optional<BernsteinConfig> bernstein;
    std::optional<ClosedFormConfig> closed_form_psi;
};

ModelConfig parse_model_config(const std::string& json_text);
ModelConfig load_model_config(const std::string& path);
std::string serialize_model_config(const ModelConfig& config);

/// FNV-1a over the canonical serialization.
std::uint64_t config_hash(const ModelConfig& config);

LevyModel build_model(const ModelConfig& config);
/// The Bernstein function named in the config; throws when absent.
BernsteinFn build_bernstein(const ModelConfig& config);

}  // namespace levykit
