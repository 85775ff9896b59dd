#pragma once

#include "evoseq/landscape.hpp"
#include "evoseq/objective.hpp"
#include "evoseq/sequence.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace evoseq {

/// One evaluated candidate: the set of all ledger records is the paper's
/// pool of previously evaluated sequences that budget constraints are
/// measured against.
struct LedgerRecord {
    std::string sequence; // variant string
    ObjectiveVector objectives;
    int iteration = 0;
};

/// Append-only evaluation history with cache deduplication: a sequence
/// appears at most once, and call_count tracks actual oracle charges.
class EvaluationLedger {
  public:
    bool contains(const std::string& sequence) const { return index_.count(sequence) > 0; }

    const LedgerRecord* find(const std::string& sequence) const {
        auto it = index_.find(sequence);
        return it == index_.end() ? nullptr : &records_[it->second];
    }

    /// Record a fresh oracle evaluation (one charge). Duplicate sequences are
    /// a logic error upstream and throw.
    void record(std::string sequence, ObjectiveVector objectives, int iteration);

    const std::vector<LedgerRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    std::size_t call_count() const { return call_count_; }

    std::vector<std::string> sequences() const;

  private:
    std::vector<LedgerRecord> records_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t call_count_ = 0;
};

/// Maps a raw oracle score to the campaign's objective vector (identity,
/// min-max normalization, extra Hamming objective, ...).
using ObjectiveAssembler = std::function<ObjectiveVector(const Sequence&, double)>;

/// Caching evaluation front end: deterministic oracles are charged once per
/// distinct sequence; repeats are served from the ledger.
class Evaluator {
  public:
    Evaluator(std::shared_ptr<const Oracle> oracle, ObjectiveAssembler assembler);

    struct Result {
        ObjectiveVector objectives;
        bool cached = false;
    };

    Result evaluate(const Sequence& sequence, int iteration);

    /// Order-preserving batch evaluation. Distinct uncached sequences go to
    /// the oracle in one batch call; duplicates within the batch are charged
    /// once and results are merged back in submission order.
    std::vector<Result> evaluate_batch(const std::vector<Sequence>& sequences, int iteration);

    const EvaluationLedger& ledger() const { return ledger_; }
    const Oracle& oracle() const { return *oracle_; }

  private:
    ObjectiveVector assemble(const Sequence& sequence, double raw) const;

    std::shared_ptr<const Oracle> oracle_;
    ObjectiveAssembler assembler_;
    EvaluationLedger ledger_;
};

} // namespace evoseq
