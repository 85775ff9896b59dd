#pragma once

#include "evoseq/objective.hpp"
#include "evoseq/sequence.hpp"

#include <array>
#include <string>

namespace evoseq {

/// How a candidate entered the population.
enum class ProposalSource { init, llm, crossover, mutation };

const char* to_string(ProposalSource source);
ProposalSource proposal_source_from_string(const std::string& text);

/// An evaluated member of the search: sequence, objective vector, lineage.
struct Candidate {
    Sequence sequence; // variant-arity
    ObjectiveVector objectives;
    int iteration = 0; // iteration the candidate was proposed in (0 = initial pool)
    std::array<std::string, 2> parents{}; // parent variant strings; empty for init
    ProposalSource source = ProposalSource::init;
};

} // namespace evoseq
