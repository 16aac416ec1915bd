#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mil/dataset.hpp"
#include "mil/rng.hpp"

namespace mil {

/// Generator for two-Gaussian MIL data. Negative bags draw every instance
/// from the background; a positive bag gets ceil(witness_fraction * inst_per_bag)
/// witness instances displaced by cluster_separation along the first axis,
/// the rest background. Positive bags therefore contain at least one witness
/// and negative bags none.
struct SynthConfig {
    int n_pos_bags = 10;
    int n_neg_bags = 10;
    int inst_per_bag = 10;
    int d = 2;
    double witness_fraction = 0.2;
    double cluster_separation = 4.0;
    std::uint64_t seed = 0;
};

inline void validate(const SynthConfig& cfg) {
    if (cfg.n_pos_bags < 1 || cfg.n_neg_bags < 1)
        throw std::invalid_argument("synth: bag counts must be >= 1");
    if (cfg.inst_per_bag < 1) throw std::invalid_argument("synth: inst_per_bag must be >= 1");
    if (cfg.d < 1) throw std::invalid_argument("synth: d must be >= 1");
    if (!(cfg.witness_fraction > 0.0 && cfg.witness_fraction <= 1.0))
        throw std::invalid_argument("synth: witness_fraction must be in (0,1]");
    if (!(cfg.cluster_separation > 0.0))
        throw std::invalid_argument("synth: cluster_separation must be positive");
}

inline SynthConfig synth_config_from_json(const nlohmann::json& j) {
    static const char* fields[] = {"n_pos_bags",       "n_neg_bags",
                                   "inst_per_bag",     "d",
                                   "witness_fraction", "cluster_separation",
                                   "seed"};
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* f : fields) known |= key == f;
        if (!known) throw std::invalid_argument("synth config: unknown field '" + key + "'");
    }
    for (const char* f : fields)
        if (!j.contains(f)) throw std::invalid_argument("synth config: missing field '" + std::string(f) + "'");

    SynthConfig cfg;
    cfg.n_pos_bags = j.at("n_pos_bags").get<int>();
    cfg.n_neg_bags = j.at("n_neg_bags").get<int>();
    cfg.inst_per_bag = j.at("inst_per_bag").get<int>();
    cfg.d = j.at("d").get<int>();
    cfg.witness_fraction = j.at("witness_fraction").get<double>();
    cfg.cluster_separation = j.at("cluster_separation").get<double>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    validate(cfg);
    return cfg;
}

inline SynthConfig load_synth_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open synth config: " + path);
    nlohmann::json j;
    in >> j;
    return synth_config_from_json(j);
}

struct SyntheticData {
    Dataset dataset;
    /// Ground-truth instance labels in dataset order. Oracle material for
    /// tests only; nothing in the training path reads them.
    std::vector<std::uint8_t> true_instance_labels;
};

inline SyntheticData generate_synthetic(const SynthConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);
    SyntheticData out;
    out.dataset.name = "synthetic";
    out.dataset.dim = static_cast<std::size_t>(cfg.d);

    const int witnesses = static_cast<int>(
        std::ceil(cfg.witness_fraction * static_cast<double>(cfg.inst_per_bag)));

    auto draw = [&](bool witness) {
        Instance inst(cfg.d);
        for (int j = 0; j < cfg.d; ++j) inst[j] = rng.normal();
        if (witness) inst[0] += cfg.cluster_separation;
        return inst;
    };

    auto pad_width = [](int n) {
        int w = 1;
        while (n >= 10) n /= 10, ++w;
        return w;
    };
    const int width = pad_width(std::max(cfg.n_pos_bags, cfg.n_neg_bags) - 1);
    auto bag_id = [&](const char* prefix, int i) {
        std::string num = std::to_string(i);
        return prefix + std::string(width - static_cast<int>(num.size()), '0') + num;
    };

    for (int i = 0; i < cfg.n_pos_bags; ++i) {
        Bag bag{bag_id("pos", i), 1, {}};
        for (int k = 0; k < cfg.inst_per_bag; ++k) {
            const bool witness = k < witnesses;
            bag.instances.push_back(draw(witness));
            out.true_instance_labels.push_back(witness ? 1 : 0);
        }
        out.dataset.bags.push_back(std::move(bag));
    }
    for (int i = 0; i < cfg.n_neg_bags; ++i) {
        Bag bag{bag_id("neg", i), 0, {}};
        for (int k = 0; k < cfg.inst_per_bag; ++k) {
            bag.instances.push_back(draw(false));
            out.true_instance_labels.push_back(0);
        }
        out.dataset.bags.push_back(std::move(bag));
    }
    validate(out.dataset);
    return out;
}

/// Ground-truth labels as CSV, aligned with the dataset rows.
inline void write_instance_labels(const SyntheticData& data, std::ostream& out) {
    out << "bag_id,instance_index,true_label\n";
    std::size_t row = 0;
    for (const auto& bag : data.dataset.bags)
        for (std::size_t k = 0; k < bag.instances.size(); ++k, ++row)
            out << bag.id << ',' << k << ',' << int(data.true_instance_labels[row]) << '\n';
}

inline void write_instance_labels(const SyntheticData& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_instance_labels(data, out);
}

}  // namespace mil
