#include "evoseq/ledger.hpp"

#include "evoseq/error.hpp"

namespace evoseq {

void EvaluationLedger::record(std::string sequence, ObjectiveVector objectives, int iteration) {
    if (contains(sequence)) {
        throw Error("ledger: duplicate record for \"" + sequence + "\"");
    }
    index_.emplace(sequence, records_.size());
    records_.push_back({std::move(sequence), std::move(objectives), iteration});
    ++call_count_;
}

std::vector<std::string> EvaluationLedger::sequences() const {
    std::vector<std::string> out;
    out.reserve(records_.size());
    for (const auto& r : records_) {
        out.push_back(r.sequence);
    }
    return out;
}

Evaluator::Evaluator(std::shared_ptr<const Oracle> oracle, ObjectiveAssembler assembler)
    : oracle_(std::move(oracle)), assembler_(std::move(assembler)) {
    if (!oracle_) {
        throw Error("evaluator: null oracle");
    }
}

ObjectiveVector Evaluator::assemble(const Sequence& sequence, double raw) const {
    ObjectiveVector objectives =
        assembler_ ? assembler_(sequence, raw) : ObjectiveVector{raw};
    if (objectives.empty() || !all_finite(objectives)) {
        throw OracleError("non-finite objective for sequence \"" + sequence.str() + "\"");
    }
    return objectives;
}

Evaluator::Result Evaluator::evaluate(const Sequence& sequence, int iteration) {
    if (const LedgerRecord* hit = ledger_.find(sequence.str())) {
        return {hit->objectives, true};
    }
    ObjectiveVector objectives = assemble(sequence, oracle_->score(sequence));
    ledger_.record(sequence.str(), objectives, iteration);
    return {std::move(objectives), false};
}

std::vector<Evaluator::Result> Evaluator::evaluate_batch(const std::vector<Sequence>& sequences,
                                                         int iteration) {
    // Collect distinct uncached sequences, first occurrence order.
    std::vector<Sequence> fresh;
    std::unordered_map<std::string, std::size_t> fresh_index;
    for (const auto& seq : sequences) {
        if (!ledger_.contains(seq.str()) && fresh_index.count(seq.str()) == 0) {
            fresh_index.emplace(seq.str(), fresh.size());
            fresh.push_back(seq);
        }
    }
    if (!fresh.empty()) {
        const std::vector<double> scores = oracle_->score_batch(fresh);
        if (scores.size() != fresh.size()) {
            throw OracleError("oracle returned " + std::to_string(scores.size()) +
                              " scores for " + std::to_string(fresh.size()) + " sequences");
        }
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            ledger_.record(fresh[i].str(), assemble(fresh[i], scores[i]), iteration);
        }
    }
    std::vector<Result> out;
    out.reserve(sequences.size());
    std::unordered_map<std::string, bool> charge_reported;
    for (const auto& seq : sequences) {
        const LedgerRecord* hit = ledger_.find(seq.str());
        // Only the first occurrence of a freshly charged sequence reports the
        // charge; batch duplicates after it are cache hits.
        bool cached = true;
        if (fresh_index.count(seq.str()) > 0 && !charge_reported[seq.str()]) {
            charge_reported[seq.str()] = true;
            cached = false;
        }
        out.push_back({hit->objectives, cached});
    }
    return out;
}

} // namespace evoseq
