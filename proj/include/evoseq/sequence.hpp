#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace evoseq {

/// The 20 canonical amino acids, one-letter codes, in fixed index order.
inline constexpr std::string_view kAlphabet = "ACDEFGHIKLMNPQRSTVWY";
inline constexpr int kAlphabetSize = 20;

/// Index of a residue letter in kAlphabet, or -1 for anything else
/// (including the non-canonical codes B, J, O, U, X, Z).
int aa_index(char c);

inline bool is_canonical_aa(char c) { return aa_index(c) >= 0; }

inline char aa_letter(int index) { return kAlphabet[static_cast<std::size_t>(index)]; }

/// Fixed-length protein sequence over the canonical alphabet.
///
/// Immutable after construction; construction validates every residue, so a
/// Sequence in hand is always well-formed. Non-canonical letters are rejected
/// rather than coerced -- a silently "fixed" residue would corrupt oracle
/// table lookups downstream.
class Sequence {
  public:
    Sequence() = default;

    /// Throws ParseError on empty input or non-canonical letters.
    static Sequence parse(std::string_view text);

    const std::string& str() const { return residues_; }
    std::size_t length() const { return residues_.size(); }
    char at(std::size_t i) const { return residues_[i]; }
    bool empty() const { return residues_.empty(); }

    friend bool operator==(const Sequence& a, const Sequence& b) = default;
    friend auto operator<=>(const Sequence& a, const Sequence& b) = default;

  private:
    explicit Sequence(std::string residues) : residues_(std::move(residues)) {}

    std::string residues_;
};

/// A wild-type sequence plus the ordered set of mutable positions.
///
/// Site positions are 1-indexed in configs and file formats and converted to
/// 0-indexed storage here, at the type boundary.
class VariantSpace {
  public:
    VariantSpace() = default;

    /// `sites_1based` must be strictly increasing and within
    /// [1, wild_type.length()]. An empty list means every position is mutable.
    VariantSpace(Sequence wild_type, std::vector<int> sites_1based, std::string name = "");

    const Sequence& wild_type() const { return wild_type_; }
    const std::vector<std::size_t>& sites() const { return sites_; } // 0-based
    std::size_t site_count() const { return sites_.size(); }
    const std::string& name() const { return name_; }

    /// The wild type projected onto the mutable sites.
    const Sequence& wild_variant() const { return wild_variant_; }

  private:
    Sequence wild_type_;
    std::vector<std::size_t> sites_;
    std::string name_;
    Sequence wild_variant_;
};

/// Count of differing positions. Throws Error on length mismatch,
/// identifying both lengths.
std::size_t hamming(const Sequence& a, const Sequence& b);

/// The |sites|-length sequence of residues of `full` at the space's sites.
Sequence extract_sites(const Sequence& full, const VariantSpace& space);

/// Full-length sequence equal to the wild type everywhere except the sites,
/// which carry `variant`'s residues.
Sequence apply_variant(const VariantSpace& space, const Sequence& variant);

} // namespace evoseq
