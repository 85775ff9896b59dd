#pragma once

#include "evoseq/landscape.hpp"
#include "evoseq/sequence.hpp"

#include <string>
#include <vector>

namespace evoseq {

/// Batch-scoring HTTP endpoint: POST {url}/score with
/// {"sequences": [...]}; response {"scores": [...]}, same order and length.
struct EndpointConfig {
    std::string url;        // e.g. "http://127.0.0.1:8900"
    int timeout_ms = 10000;
    int max_retries = 3;    // additional attempts after the first
    int backoff_ms = 250;   // doubles per retry
};

/// One score per input sequence, order-preserving. Retries transport and
/// non-200 failures with exponential backoff; throws TransportError once the
/// retry budget is exhausted and OracleError on malformed or non-finite
/// responses.
std::vector<double> external_evaluate(const EndpointConfig& endpoint,
                                      const std::vector<Sequence>& batch);

/// ML-model landscape behind a wire boundary. Variants are expanded to
/// full-length sequences before they are sent.
class ExternalOracle : public Oracle {
  public:
    ExternalOracle(EndpointConfig endpoint, VariantSpace space)
        : endpoint_(std::move(endpoint)), space_(std::move(space)) {}

    double score(const Sequence& variant) const override;
    std::vector<double> score_batch(const std::vector<Sequence>& variants) const override;
    std::string kind() const override { return "external"; }

    const VariantSpace& space() const { return space_; }

  private:
    EndpointConfig endpoint_;
    VariantSpace space_;
};

} // namespace evoseq
