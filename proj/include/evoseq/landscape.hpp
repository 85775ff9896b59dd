#pragma once

#include "evoseq/sequence.hpp"

#include <atomic>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace evoseq {

/// A scalar fitness oracle. Implementations are immutable after construction
/// and safe to share across concurrently running campaigns. Each call models
/// one wet-lab measurement; budget accounting happens in the ledger, not here.
class Oracle {
  public:
    virtual ~Oracle() = default;

    /// Score one variant-arity sequence. Throws OracleError when the
    /// sequence cannot be scored.
    virtual double score(const Sequence& variant) const = 0;

    /// Batch scoring, order-preserving. Default loops over score().
    virtual std::vector<double> score_batch(const std::vector<Sequence>& variants) const;

    virtual std::string kind() const = 0;
};

/// What to do when an exact table has no entry for a queried variant.
enum class MissingPolicy { error, zero };

/// In-memory fitness table keyed by variant string.
struct ExactTable {
    std::unordered_map<std::string, double> values;
    std::size_t arity = 0;          // variant length
    std::size_t duplicate_rows = 0; // rows dropped on load (first kept)
};

/// Parse a `sequence,fitness` CSV. When expected_arity is 0 the arity is
/// taken from the first data row. Malformed rows raise ParseError with the
/// line number; duplicates keep the first occurrence.
ExactTable load_exact_table(const std::string& path, std::size_t expected_arity = 0);

/// Measured (DMS-style) landscape: a lookup table over a variant space.
class ExactOracle : public Oracle {
  public:
    ExactOracle(ExactTable table, VariantSpace space, MissingPolicy policy = MissingPolicy::error);

    double score(const Sequence& variant) const override;
    std::string kind() const override { return "exact"; }

    const ExactTable& table() const { return table_; }
    const VariantSpace& space() const { return space_; }
    std::size_t miss_count() const { return miss_count_.load(); }

  private:
    ExactTable table_;
    VariantSpace space_;
    MissingPolicy policy_;
    mutable std::atomic<std::size_t> miss_count_{0};
};

ExactOracle load_exact_landscape(const std::string& path, VariantSpace space,
                                 MissingPolicy policy = MissingPolicy::error);

/// (x - lo) / (hi - lo), clamped to [0, 1]. `clamped`, when given, reports
/// whether the input fell outside [lo, hi]. Throws Error when hi <= lo.
double minmax_normalize(double x, double lo, double hi, bool* clamped = nullptr);

struct CombinationStats {
    double mean = 0.0;
    std::size_t count = 0;
};

/// Mean fitness over all table entries sharing each residue combination at
/// the given positions (1-based indices into the variant string). Ordered
/// map so emission order is deterministic.
std::map<std::string, CombinationStats>
position_combination_stats(const ExactTable& table, const std::vector<int>& positions);

/// CSV emission: header `combination,mean_fitness,count`.
void write_combination_stats(std::ostream& out,
                             const std::map<std::string, CombinationStats>& stats);

} // namespace evoseq
