#include "evoseq/external_oracle.hpp"

#include "evoseq/error.hpp"

#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <thread>

namespace evoseq {

namespace {

struct SplitUrl {
    std::string base;   // scheme://host:port
    std::string prefix; // path prefix, possibly empty
};

SplitUrl split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("endpoint url must include a scheme: " + url);
    }
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        return {url, ""};
    }
    std::string prefix = url.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') {
        prefix.pop_back();
    }
    return {url.substr(0, path_start), prefix};
}

} // namespace

std::vector<double> external_evaluate(const EndpointConfig& endpoint,
                                      const std::vector<Sequence>& batch) {
    if (batch.empty()) {
        throw Error("external_evaluate: empty batch");
    }
    const SplitUrl url = split_url(endpoint.url);

    nlohmann::json request;
    auto& sequences = request["sequences"];
    sequences = nlohmann::json::array();
    for (const auto& seq : batch) {
        sequences.push_back(seq.str());
    }
    const std::string body = request.dump();

    std::string last_failure;
    for (int attempt = 0; attempt <= endpoint.max_retries; ++attempt) {
        if (attempt > 0) {
            const auto delay = endpoint.backoff_ms * (1 << (attempt - 1));
            std::this_thread::sleep_for(std::chrono::milliseconds(delay));
        }
        httplib::Client client(url.base);
        client.set_connection_timeout(0, endpoint.timeout_ms * 1000);
        client.set_read_timeout(endpoint.timeout_ms / 1000, (endpoint.timeout_ms % 1000) * 1000);
        auto res = client.Post(url.prefix + "/score", body, "application/json");
        if (!res) {
            last_failure = "transport error: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status != 200) {
            last_failure = "HTTP " + std::to_string(res->status);
            continue;
        }
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(res->body);
        } catch (const nlohmann::json::exception& e) {
            throw OracleError(std::string("external oracle: invalid response JSON: ") + e.what());
        }
        if (!doc.contains("scores") || !doc["scores"].is_array()) {
            throw OracleError("external oracle: response missing \"scores\" array");
        }
        const auto& scores = doc["scores"];
        if (scores.size() != batch.size()) {
            throw OracleError("external oracle: got " + std::to_string(scores.size()) +
                              " scores for " + std::to_string(batch.size()) + " sequences");
        }
        std::vector<double> out;
        out.reserve(batch.size());
        for (std::size_t i = 0; i < scores.size(); ++i) {
            double v = std::nan("");
            if (scores[i].is_number()) {
                v = scores[i].get<double>();
            }
            if (!std::isfinite(v)) {
                throw OracleError("external oracle: non-finite score for sequence \"" +
                                  batch[i].str() + "\"");
            }
            out.push_back(v);
        }
        return out;
    }
    throw TransportError("external oracle unreachable after " +
                         std::to_string(endpoint.max_retries + 1) + " attempts (" + last_failure +
                         "): " + endpoint.url);
}

double ExternalOracle::score(const Sequence& variant) const {
    return score_batch({variant})[0];
}

std::vector<double> ExternalOracle::score_batch(const std::vector<Sequence>& variants) const {
    std::vector<Sequence> full;
    full.reserve(variants.size());
    for (const auto& v : variants) {
        full.push_back(apply_variant(space_, v));
    }
    return external_evaluate(endpoint_, full);
}

} // namespace evoseq
