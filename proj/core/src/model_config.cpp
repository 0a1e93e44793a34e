#include "chebfilter/model_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chebfilter/error.hpp"

namespace chebfilter {

using nlohmann::json;

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "mlp") return ModelKind::Mlp;
    if (name == "gcn") return ModelKind::Gcn;
    if (name == "chebnet") return ModelKind::ChebNet;
    if (name == "chebbase") return ModelKind::ChebBase;
    if (name == "chebbase_k") return ModelKind::ChebBaseK;
    if (name == "gprgnn") return ModelKind::GprGnn;
    if (name == "bernnet") return ModelKind::BernNet;
    if (name == "chebnet2") return ModelKind::ChebNet2;
    throw Error("unknown model '" + name + "'");
}

const char* model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::Mlp: return "mlp";
        case ModelKind::Gcn: return "gcn";
        case ModelKind::ChebNet: return "chebnet";
        case ModelKind::ChebBase: return "chebbase";
        case ModelKind::ChebBaseK: return "chebbase_k";
        case ModelKind::GprGnn: return "gprgnn";
        case ModelKind::BernNet: return "bernnet";
        case ModelKind::ChebNet2: return "chebnet2";
    }
    return "unknown";
}

void ModelConfig::validate() const {
    if (uses_propagation() && K < 1) {
        throw Error("config: K must be >= 1 for propagation models");
    }
    if (hidden < 1) throw Error("config: hidden must be >= 1");
    if (lr_linear < 0 || lr_prop < 0 || wd_linear < 0 || wd_prop < 0) {
        throw Error("config: rates must be nonnegative");
    }
    if (dropout_linear < 0 || dropout_linear >= 1 || dropout_prop < 0 || dropout_prop >= 1) {
        throw Error("config: dropout must lie in [0, 1)");
    }
    if (epochs < 1) throw Error("config: epochs must be >= 1");
    if (patience < 0 || patience > epochs) {
        throw Error("config: patience must lie in [0, epochs]");
    }
    if (alpha <= 0 || alpha >= 1) throw Error("config: alpha must lie in (0, 1)");
}

ModelConfig default_model_config(ModelKind kind) {
    ModelConfig cfg;
    cfg.model = kind;
    switch (kind) {
        case ModelKind::ChebNet:
            cfg.hidden = 32;
            cfg.K = 2;
            break;
        case ModelKind::Mlp:
        case ModelKind::Gcn:
            cfg.K = 1;
            break;
        default: break;
    }
    return cfg;
}

ModelConfig model_config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw IoError("config: top level must be a JSON object");

    ModelKind kind = ModelKind::ChebNet2;
    if (j.contains("model")) kind = model_kind_from_string(j.at("model").get<std::string>());
    ModelConfig cfg = default_model_config(kind);

    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "model") continue;
            else if (key == "K") cfg.K = value.get<int>();
            else if (key == "hidden") cfg.hidden = value.get<int>();
            else if (key == "lr_linear") cfg.lr_linear = value.get<double>();
            else if (key == "lr_prop") cfg.lr_prop = value.get<double>();
            else if (key == "wd_linear") cfg.wd_linear = value.get<double>();
            else if (key == "wd_prop") cfg.wd_prop = value.get<double>();
            else if (key == "dropout_linear") cfg.dropout_linear = value.get<double>();
            else if (key == "dropout_prop") cfg.dropout_prop = value.get<double>();
            else if (key == "epochs") cfg.epochs = value.get<int>();
            else if (key == "patience") cfg.patience = value.get<int>();
            else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
            else if (key == "extra_linear_after_prop")
                cfg.extra_linear_after_prop = value.get<bool>();
            else if (key == "alpha") cfg.alpha = value.get<double>();
            else if (key == "halve_first_coeff") cfg.halve_first_coeff = value.get<bool>();
            else throw Error("config: unknown key '" + key + "'");
        }
    } catch (const json::exception& e) {
        throw IoError(std::string("config: bad value type: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

ModelConfig load_model_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return model_config_from_json_text(buffer.str());
}

std::string model_config_to_json_text(const ModelConfig& config) {
    json j;
    j["model"] = model_kind_name(config.model);
    j["K"] = config.K;
    j["hidden"] = config.hidden;
    j["lr_linear"] = config.lr_linear;
    j["lr_prop"] = config.lr_prop;
    j["wd_linear"] = config.wd_linear;
    j["wd_prop"] = config.wd_prop;
    j["dropout_linear"] = config.dropout_linear;
    j["dropout_prop"] = config.dropout_prop;
    j["epochs"] = config.epochs;
    j["patience"] = config.patience;
    j["seed"] = config.seed;
    j["extra_linear_after_prop"] = config.extra_linear_after_prop;
    j["alpha"] = config.alpha;
    j["halve_first_coeff"] = config.halve_first_coeff;
    return j.dump(2);
}

}  // namespace chebfilter
