#include "evoseq/candidate.hpp"

#include "evoseq/error.hpp"

namespace evoseq {

const char* to_string(ProposalSource source) {
    switch (source) {
    case ProposalSource::init:
        return "init";
    case ProposalSource::llm:
        return "llm";
    case ProposalSource::crossover:
        return "crossover";
    case ProposalSource::mutation:
        return "mutation";
    }
    return "unknown";
}

ProposalSource proposal_source_from_string(const std::string& text) {
    if (text == "init") {
        return ProposalSource::init;
    }
    if (text == "llm") {
        return ProposalSource::llm;
    }
    if (text == "crossover") {
        return ProposalSource::crossover;
    }
    if (text == "mutation") {
        return ProposalSource::mutation;
    }
    throw ParseError("unknown proposal source: " + text);
}

} // namespace evoseq
