#include "levykit/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "levykit/errors.hpp"

namespace levykit {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw invalid_input_error("unknown key \"" + it.key() + "\" in " + where);
    }
}

ModelConfig parse_object(const json& obj);

ClosedFormConfig parse_closed_form(const json& obj) {
    if (!obj.is_object())
        throw invalid_input_error("closed_form_psi must be an object");
    reject_unknown_keys(obj, {"kind", "alpha"}, "closed_form_psi");
    ClosedFormConfig cf;
    cf.kind = obj.at("kind").get<std::string>();
    if (cf.kind == "gaussian") {
        if (obj.contains("alpha"))
            throw invalid_input_error("gaussian closed form takes no alpha");
    } else if (cf.kind == "stable" || cf.kind == "semi_stable") {
        cf.alpha = obj.at("alpha").get<double>();
    } else {
        throw invalid_input_error("closed_form_psi kind must be gaussian, stable or "
                                  "semi_stable, got \"" + cf.kind + "\"");
    }
    return cf;
}

BernsteinConfig parse_bernstein(const json& obj) {
    if (!obj.is_object()) throw invalid_input_error("bernstein must be an object");
    reject_unknown_keys(obj, {"kind", "alpha"}, "bernstein");
    BernsteinConfig bc;
    bc.kind = obj.at("kind").get<std::string>();
    if (bc.kind == "power") {
        bc.alpha = obj.at("alpha").get<double>();
    } else if (bc.kind == "log1p" || bc.kind == "ratio") {
        if (obj.contains("alpha"))
            throw invalid_input_error(bc.kind + " takes no alpha");
    } else {
        throw invalid_input_error("bernstein kind must be power, log1p or ratio");
    }
    return bc;
}

ModelConfig parse_object(const json& obj) {
    if (!obj.is_object()) throw invalid_input_error("model config must be an object");
    ModelConfig config;
    config.variant = obj.value("variant", std::string{});

    std::set<std::string> allowed{"variant", "dim", "closed_form_psi", "bernstein"};
    if (config.variant == "discrete_atoms") {
        allowed.insert("atoms");
    } else if (config.variant == "semi_stable") {
        allowed.insert("alpha");
        allowed.insert("depth");
    } else if (config.variant == "tempered_tail") {
        allowed.insert("beta");
        allowed.insert("core");
    } else if (config.variant == "bernstein_radial") {
        // bernstein carries the data
    } else if (config.variant == "closed_form") {
        // closed_form_psi carries the data
    } else {
        throw invalid_input_error("variant must be one of discrete_atoms, semi_stable, "
                                  "tempered_tail, bernstein_radial, closed_form");
    }
    reject_unknown_keys(obj, allowed, "model config");

    config.dim = obj.value("dim", 1);
    if (config.variant == "discrete_atoms") {
        if (!obj.contains("atoms"))
            throw invalid_input_error("discrete_atoms needs an atoms array");
        for (const auto& entry : obj.at("atoms")) {
            if (!entry.is_array() || entry.size() != 2)
                throw invalid_input_error("atoms entries must be [location, mass]");
            config.atoms.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
    } else if (config.variant == "semi_stable") {
        config.alpha = obj.at("alpha").get<double>();
        config.depth = obj.value("depth", 64);
    } else if (config.variant == "tempered_tail") {
        config.beta = obj.at("beta").get<double>();
        if (obj.contains("core"))
            config.core = std::make_shared<ModelConfig>(parse_object(obj.at("core")));
    } else if (config.variant == "bernstein_radial") {
        if (!obj.contains("bernstein"))
            throw invalid_input_error("bernstein_radial needs a bernstein object");
    } else if (config.variant == "closed_form") {
        if (!obj.contains("closed_form_psi"))
            throw invalid_input_error("closed_form variant needs closed_form_psi");
    }

    if (obj.contains("bernstein"))
        config.bernstein = parse_bernstein(obj.at("bernstein"));
    if (obj.contains("closed_form_psi"))
        config.closed_form_psi = parse_closed_form(obj.at("closed_form_psi"));
    return config;
}

json to_json(const ModelConfig& config) {
    json obj;
    obj["variant"] = config.variant;
    obj["dim"] = config.dim;
    if (config.variant == "discrete_atoms") {
        json atoms = json::array();
        for (const auto& [y, m] : config.atoms) atoms.push_back({y, m});
        obj["atoms"] = atoms;
    } else if (config.variant == "semi_stable") {
        obj["alpha"] = config.alpha;
        obj["depth"] = config.depth;
    } else if (config.variant == "tempered_tail") {
        obj["beta"] = config.beta;
        if (config.core) obj["core"] = to_json(*config.core);
    }
    if (config.bernstein) {
        json b;
        b["kind"] = config.bernstein->kind;
        if (config.bernstein->kind == "power") b["alpha"] = config.bernstein->alpha;
        obj["bernstein"] = b;
    }
    if (config.closed_form_psi) {
        json cf;
        cf["kind"] = config.closed_form_psi->kind;
        if (config.closed_form_psi->kind != "gaussian")
            cf["alpha"] = config.closed_form_psi->alpha;
        obj["closed_form_psi"] = cf;
    }
    return obj;
}

}  // namespace

ModelConfig parse_model_config(const std::string& json_text) {
    json obj;
    try {
        obj = json::parse(json_text);
    } catch (const json::exception& e) {
        throw invalid_input_error(std::string("config is not valid JSON: ") + e.what());
    }
    try {
        return parse_object(obj);
    } catch (const json::exception& e) {
        throw invalid_input_error(std::string("malformed config: ") + e.what());
    }
}

ModelConfig load_model_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open config file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_model_config(buffer.str());
}

std::string serialize_model_config(const ModelConfig& config) {
    return to_json(config).dump();
}

std::uint64_t config_hash(const ModelConfig& config) {
    const std::string canonical = serialize_model_config(config);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

LevyModel build_model(const ModelConfig& config) {
    if (config.dim != 1 &&
        (config.variant == "discrete_atoms" || config.variant == "semi_stable" ||
         config.variant == "tempered_tail"))
        throw invalid_input_error("variant " + config.variant +
                                  " is one-dimensional in config form");
    std::optional<LevyMeasure> measure;
    if (config.variant == "discrete_atoms") {
        std::vector<Atom> atoms;
        for (const auto& [y, m] : config.atoms) atoms.push_back({{y}, m});
        measure = LevyMeasure::atoms(std::move(atoms), config.dim);
    } else if (config.variant == "semi_stable") {
        measure = LevyMeasure::semi_stable(config.alpha, config.depth);
    } else if (config.variant == "tempered_tail") {
        std::optional<LevyMeasure> core;
        if (config.core) {
            LevyModel core_model = build_model(*config.core);
            core = core_model.measure();
        }
        measure = LevyMeasure::tempered_tail(config.beta, std::move(core));
    } else if (config.variant == "bernstein_radial") {
        return bernstein_radial_model(build_bernstein(config), config.dim);
    }

    if (config.variant == "closed_form" || !measure) {
        const auto& cf = *config.closed_form_psi;
        if (cf.kind == "gaussian") return LevyModel::gaussian_channel(config.dim);
        if (cf.kind == "stable") return LevyModel::stable_channel(cf.alpha, config.dim);
        return LevyModel::semi_stable_channel(cf.alpha, config.dim);
    }
    if (config.closed_form_psi)
        throw invalid_input_error(
            "closed_form_psi override on a measure variant is not supported; use "
            "variant closed_form");
    return LevyModel::from_measure(std::move(*measure));
}

BernsteinFn build_bernstein(const ModelConfig& config) {
    if (!config.bernstein)
        throw invalid_input_error("config has no bernstein object");
    const auto& bc = *config.bernstein;
    if (bc.kind == "power") return BernsteinFn::power(bc.alpha);
    if (bc.kind == "log1p") return BernsteinFn::log1p();
    return BernsteinFn::ratio();
}

}  // namespace levykit
