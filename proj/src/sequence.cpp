#include "evoseq/sequence.hpp"

#include "evoseq/error.hpp"

#include <array>
#include <numeric>

namespace evoseq {

namespace {

constexpr std::array<signed char, 26> build_index_table() {
    std::array<signed char, 26> table{};
    for (auto& v : table) {
        v = -1;
    }
    for (int i = 0; i < kAlphabetSize; ++i) {
        table[static_cast<std::size_t>(kAlphabet[static_cast<std::size_t>(i)] - 'A')] =
            static_cast<signed char>(i);
    }
    return table;
}

constexpr auto kIndexTable = build_index_table();

} // namespace

int aa_index(char c) {
    if (c < 'A' || c > 'Z') {
        return -1;
    }
    return kIndexTable[static_cast<std::size_t>(c - 'A')];
}

Sequence Sequence::parse(std::string_view text) {
    if (text.empty()) {
        throw ParseError("sequence is empty");
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!is_canonical_aa(text[i])) {
            throw ParseError("non-canonical residue '" + std::string(1, text[i]) +
                             "' at position " + std::to_string(i + 1) + " in sequence \"" +
                             std::string(text) + "\"");
        }
    }
    return Sequence(std::string(text));
}

VariantSpace::VariantSpace(Sequence wild_type, std::vector<int> sites_1based, std::string name)
    : wild_type_(std::move(wild_type)), name_(std::move(name)) {
    if (sites_1based.empty()) {
        sites_.resize(wild_type_.length());
        std::iota(sites_.begin(), sites_.end(), std::size_t{0});
    } else {
        sites_.reserve(sites_1based.size());
        int prev = 0;
        for (int pos : sites_1based) {
            if (pos < 1 || static_cast<std::size_t>(pos) > wild_type_.length()) {
                throw ConfigError("site position " + std::to_string(pos) +
                                  " outside 1.." + std::to_string(wild_type_.length()));
            }
            if (pos <= prev) {
                throw ConfigError("site positions must be strictly increasing (got " +
                                  std::to_string(pos) + " after " + std::to_string(prev) + ")");
            }
            sites_.push_back(static_cast<std::size_t>(pos - 1));
            prev = pos;
        }
    }
    wild_variant_ = extract_sites(wild_type_, *this);
}

std::size_t hamming(const Sequence& a, const Sequence& b) {
    if (a.length() != b.length()) {
        throw Error("hamming: length mismatch (" + std::to_string(a.length()) + " vs " +
                    std::to_string(b.length()) + ")");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.length(); ++i) {
        d += a.at(i) != b.at(i) ? 1 : 0;
    }
    return d;
}

Sequence extract_sites(const Sequence& full, const VariantSpace& space) {
    if (full.length() != space.wild_type().length()) {
        throw Error("extract_sites: sequence length " + std::to_string(full.length()) +
                    " does not match wild-type length " +
                    std::to_string(space.wild_type().length()));
    }
    std::string out;
    out.reserve(space.site_count());
    for (std::size_t site : space.sites()) {
        out.push_back(full.at(site));
    }
    return Sequence::parse(out);
}

Sequence apply_variant(const VariantSpace& space, const Sequence& variant) {
    if (variant.length() != space.site_count()) {
        throw Error("apply_variant: variant length " + std::to_string(variant.length()) +
                    " does not match site count " + std::to_string(space.site_count()));
    }
    std::string out = space.wild_type().str();
    for (std::size_t k = 0; k < space.site_count(); ++k) {
        out[space.sites()[k]] = variant.at(k);
    }
    return Sequence::parse(out);
}

} // namespace evoseq
