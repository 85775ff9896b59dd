#include "evoseq/landscape.hpp"

#include "evoseq/error.hpp"
#include "evoseq/util.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace evoseq {

std::vector<double> Oracle::score_batch(const std::vector<Sequence>& variants) const {
    std::vector<double> out;
    out.reserve(variants.size());
    for (const auto& v : variants) {
        out.push_back(score(v));
    }
    return out;
}

ExactTable load_exact_table(const std::string& path, std::size_t expected_arity) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open landscape file: " + path);
    }
    ExactTable table;
    table.arity = expected_arity;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected `sequence,fitness`");
        }
        std::string seq_text = line.substr(0, comma);
        std::string fit_text = line.substr(comma + 1);
        if (!saw_header) {
            saw_header = true;
            // Header row is optional but recommended.
            if (seq_text == "sequence") {
                continue;
            }
        }
        Sequence seq;
        try {
            seq = Sequence::parse(seq_text);
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        if (table.arity == 0) {
            table.arity = seq.length();
        } else if (seq.length() != table.arity) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": variant length " +
                             std::to_string(seq.length()) + " does not match arity " +
                             std::to_string(table.arity));
        }
        double fitness = 0.0;
        try {
            std::size_t used = 0;
            fitness = std::stod(fit_text, &used);
            while (used < fit_text.size() && (fit_text[used] == ' ' || fit_text[used] == '\t')) {
                ++used;
            }
            if (used != fit_text.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception&) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": non-numeric fitness \"" +
                             fit_text + "\"");
        }
        if (!std::isfinite(fitness)) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": non-finite fitness");
        }
        auto [it, inserted] = table.values.emplace(seq.str(), fitness);
        if (!inserted) {
            ++table.duplicate_rows; // keep first
        }
    }
    if (table.values.empty()) {
        throw ParseError(path + ": no records");
    }
    return table;
}

ExactOracle::ExactOracle(ExactTable table, VariantSpace space, MissingPolicy policy)
    : table_(std::move(table)), space_(std::move(space)), policy_(policy) {
    if (table_.arity != space_.site_count()) {
        throw ConfigError("landscape arity " + std::to_string(table_.arity) +
                          " does not match variant space site count " +
                          std::to_string(space_.site_count()));
    }
}

double ExactOracle::score(const Sequence& variant) const {
    if (variant.length() != table_.arity) {
        throw OracleError("exact oracle: variant length " + std::to_string(variant.length()) +
                          " does not match arity " + std::to_string(table_.arity));
    }
    auto it = table_.values.find(variant.str());
    if (it == table_.values.end()) {
        if (policy_ == MissingPolicy::error) {
            throw OracleError("exact oracle: unknown variant \"" + variant.str() + "\"");
        }
        miss_count_.fetch_add(1);
        return 0.0;
    }
    return it->second;
}

ExactOracle load_exact_landscape(const std::string& path, VariantSpace space,
                                 MissingPolicy policy) {
    ExactTable table = load_exact_table(path, space.site_count());
    return ExactOracle(std::move(table), std::move(space), policy);
}

double minmax_normalize(double x, double lo, double hi, bool* clamped) {
    if (!(hi > lo)) {
        throw Error("minmax_normalize: hi (" + format_double(hi) + ") must exceed lo (" +
                    format_double(lo) + ")");
    }
    if (clamped) {
        *clamped = x < lo || x > hi;
    }
    double y = (x - lo) / (hi - lo);
    if (y < 0.0) {
        return 0.0;
    }
    if (y > 1.0) {
        return 1.0;
    }
    return y;
}

std::map<std::string, CombinationStats>
position_combination_stats(const ExactTable& table, const std::vector<int>& positions) {
    if (positions.empty()) {
        throw Error("position_combination_stats: positions must be nonempty");
    }
    for (int p : positions) {
        if (p < 1 || static_cast<std::size_t>(p) > table.arity) {
            throw Error("position_combination_stats: position " + std::to_string(p) +
                        " outside 1.." + std::to_string(table.arity));
        }
    }
    std::map<std::string, CombinationStats> sums;
    std::string key(positions.size(), ' ');
    for (const auto& [variant, fitness] : table.values) {
        for (std::size_t k = 0; k < positions.size(); ++k) {
            key[k] = variant[static_cast<std::size_t>(positions[k] - 1)];
        }
        auto& slot = sums[key];
        slot.mean += fitness; // accumulate; divide below
        slot.count += 1;
    }
    for (auto& [combo, stats] : sums) {
        stats.mean /= static_cast<double>(stats.count);
    }
    return sums;
}

void write_combination_stats(std::ostream& out,
                             const std::map<std::string, CombinationStats>& stats) {
    out << "combination,mean_fitness,count\n";
    for (const auto& [combo, s] : stats) {
        out << combo << ',' << format_double(s.mean) << ',' << s.count << '\n';
    }
}

} // namespace evoseq
