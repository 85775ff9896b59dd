#include "evoseq/potts.hpp"

#include "evoseq/error.hpp"
#include "evoseq/rng.hpp"
#include "evoseq/util.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

namespace evoseq {

namespace {

int residue_index(const PottsParams& params, const Sequence& seq, std::size_t pos) {
    const int r = aa_index(seq.at(pos));
    if (r >= params.q) {
        throw OracleError("potts: residue '" + std::string(1, seq.at(pos)) + "' at position " +
                          std::to_string(pos + 1) + " outside the model's " +
                          std::to_string(params.q) + "-letter alphabet");
    }
    return r;
}

void check_params(const PottsParams& p) {
    if (p.length < 1 || p.q < 2 || p.q > kAlphabetSize) {
        throw ConfigError("potts: invalid dimensions L=" + std::to_string(p.length) +
                          " q=" + std::to_string(p.q));
    }
    if (p.sign != 1 && p.sign != -1) {
        throw ConfigError("potts: sign must be +1 or -1");
    }
    if (p.fields.size() != static_cast<std::size_t>(p.length)) {
        throw ConfigError("potts: field matrix must have L rows");
    }
    for (const auto& row : p.fields) {
        if (row.size() != static_cast<std::size_t>(p.q)) {
            throw ConfigError("potts: field rows must have q entries");
        }
        for (double v : row) {
            if (!std::isfinite(v)) {
                throw ConfigError("potts: non-finite field entry");
            }
        }
    }
    for (const auto& block : p.couplings) {
        if (block.i < 0 || block.j <= block.i || block.j >= p.length) {
            throw ConfigError("potts: coupling pair must satisfy 0 <= i < j < L");
        }
        if (block.matrix.size() != static_cast<std::size_t>(p.q) * static_cast<std::size_t>(p.q)) {
            throw ConfigError("potts: coupling matrix must be q x q");
        }
        for (double v : block.matrix) {
            if (!std::isfinite(v)) {
                throw ConfigError("potts: non-finite coupling entry");
            }
        }
    }
}

} // namespace

double PottsParams::coupling(int i, int j, int a, int b) const {
    for (const auto& block : couplings) {
        if (block.i == i && block.j == j) {
            return block.matrix[static_cast<std::size_t>(a) * static_cast<std::size_t>(q) +
                                static_cast<std::size_t>(b)];
        }
    }
    return 0.0;
}

double potts_energy(const PottsParams& params, const Sequence& seq) {
    if (seq.length() != static_cast<std::size_t>(params.length)) {
        throw OracleError("potts: sequence length " + std::to_string(seq.length()) +
                          " does not match L=" + std::to_string(params.length));
    }
    double energy = 0.0;
    for (std::size_t i = 0; i < seq.length(); ++i) {
        energy += params.fields[i][static_cast<std::size_t>(residue_index(params, seq, i))];
    }
    for (const auto& block : params.couplings) {
        const int a = residue_index(params, seq, static_cast<std::size_t>(block.i));
        const int b = residue_index(params, seq, static_cast<std::size_t>(block.j));
        energy += block.matrix[static_cast<std::size_t>(a) * static_cast<std::size_t>(params.q) +
                               static_cast<std::size_t>(b)];
    }
    return energy;
}

double potts_fitness(const PottsParams& params, const Sequence& seq, const Sequence& wild_type,
                     int sign) {
    if (sign != 1 && sign != -1) {
        throw Error("potts_fitness: sign must be +1 or -1");
    }
    if (seq == wild_type) {
        return 0.0; // exact zero, independent of float summation order
    }
    return static_cast<double>(sign) * (potts_energy(params, seq) - potts_energy(params, wild_type));
}

PottsParams generate_potts_params(int length, int q, double field_scale, double coupling_scale,
                                  double coupling_density, std::uint64_t seed) {
    if (length < 2) {
        throw ConfigError("generate_potts_params: L must be >= 2");
    }
    if (q < 2 || q > kAlphabetSize) {
        throw ConfigError("generate_potts_params: q must be in 2..20");
    }
    if (field_scale < 0 || coupling_scale < 0) {
        throw ConfigError("generate_potts_params: scales must be >= 0");
    }
    if (coupling_density < 0.0 || coupling_density > 1.0) {
        throw ConfigError("generate_potts_params: density must be in [0, 1]");
    }
    Rng rng(seed);
    PottsParams params;
    params.length = length;
    params.q = q;
    params.fields.assign(static_cast<std::size_t>(length),
                         std::vector<double>(static_cast<std::size_t>(q), 0.0));
    for (auto& row : params.fields) {
        for (auto& v : row) {
            v = rng.normal(0.0, field_scale);
        }
    }
    for (int i = 0; i < length; ++i) {
        for (int j = i + 1; j < length; ++j) {
            if (!rng.bernoulli(coupling_density)) {
                continue;
            }
            CouplingBlock block;
            block.i = i;
            block.j = j;
            block.matrix.resize(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
            for (auto& v : block.matrix) {
                v = rng.normal(0.0, coupling_scale);
            }
            params.couplings.push_back(std::move(block));
        }
    }
    return params;
}

Sequence greedy_reference_sequence(const PottsParams& params, int sign) {
    check_params(params);
    std::string out(static_cast<std::size_t>(params.length), 'A');
    for (int i = 0; i < params.length; ++i) {
        int best = 0;
        double best_value = static_cast<double>(sign) * params.fields[static_cast<std::size_t>(i)][0];
        for (int a = 1; a < params.q; ++a) {
            const double v =
                static_cast<double>(sign) * params.fields[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
            if (v > best_value) {
                best_value = v;
                best = a;
            }
        }
        out[static_cast<std::size_t>(i)] = aa_letter(best);
    }
    return Sequence::parse(out);
}

PottsParams load_potts_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open potts parameter file: " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    PottsParams params;
    try {
        params.length = doc.at("L").get<int>();
        const std::string alphabet = doc.at("alphabet").get<std::string>();
        params.q = static_cast<int>(alphabet.size());
        if (kAlphabet.substr(0, alphabet.size()) != alphabet) {
            throw ParseError(path + ": alphabet must be a prefix of \"" + std::string(kAlphabet) +
                             "\"");
        }
        params.fields = doc.at("h").get<std::vector<std::vector<double>>>();
        for (const auto& entry : doc.at("J")) {
            CouplingBlock block;
            block.i = entry.at("i").get<int>() - 1; // file positions are 1-based
            block.j = entry.at("j").get<int>() - 1;
            const auto matrix = entry.at("matrix").get<std::vector<std::vector<double>>>();
            for (const auto& row : matrix) {
                block.matrix.insert(block.matrix.end(), row.begin(), row.end());
            }
            params.couplings.push_back(std::move(block));
        }
        params.sign = doc.value("sign", 1);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    check_params(params);
    return params;
}

void save_potts_params(const PottsParams& params, const std::string& path) {
    check_params(params);
    nlohmann::ordered_json doc;
    doc["L"] = params.length;
    doc["alphabet"] = std::string(kAlphabet.substr(0, static_cast<std::size_t>(params.q)));
    doc["h"] = params.fields;
    auto blocks = nlohmann::ordered_json::array();
    for (const auto& block : params.couplings) {
        nlohmann::ordered_json entry;
        entry["i"] = block.i + 1;
        entry["j"] = block.j + 1;
        std::vector<std::vector<double>> matrix(static_cast<std::size_t>(params.q));
        for (int a = 0; a < params.q; ++a) {
            matrix[static_cast<std::size_t>(a)].assign(
                block.matrix.begin() + static_cast<std::ptrdiff_t>(a) * params.q,
                block.matrix.begin() + static_cast<std::ptrdiff_t>(a + 1) * params.q);
        }
        entry["matrix"] = matrix;
        blocks.push_back(std::move(entry));
    }
    doc["J"] = std::move(blocks);
    doc["sign"] = params.sign;
    write_file(path, doc.dump(2) + "\n");
}

PottsOracle::PottsOracle(PottsParams params, VariantSpace space)
    : params_(std::move(params)), space_(std::move(space)) {
    check_params(params_);
    if (space_.wild_type().length() != static_cast<std::size_t>(params_.length)) {
        throw ConfigError("potts: wild-type length " + std::to_string(space_.wild_type().length()) +
                          " does not match L=" + std::to_string(params_.length));
    }
    wild_energy_ = potts_energy(params_, space_.wild_type());
}

double PottsOracle::score(const Sequence& variant) const {
    const Sequence full = apply_variant(space_, variant);
    if (full == space_.wild_type()) {
        return 0.0;
    }
    return static_cast<double>(params_.sign) * (potts_energy(params_, full) - wild_energy_);
}

} // namespace evoseq
