#pragma once

#include "evoseq/candidate.hpp"
#include "evoseq/ledger.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace evoseq {

enum class RegimeKind { single, constrained, budget, multi_sum, multi_pareto };

const char* to_string(RegimeKind kind);
RegimeKind regime_kind_from_string(const std::string& text);

/// Which problem formulation a campaign optimizes: plain fitness
/// maximization, edit-constrained or budget-constrained variants, or the two
/// multi-objective modes (weighted sum, Pareto set selection).
struct Regime {
    RegimeKind kind = RegimeKind::single;
    int max_edits = 0;       // H: max Hamming distance from the wild type (constrained)
    int budget_edits = 0;    // BH: max min-distance to previously evaluated (budget)
    std::vector<double> weights; // multi_sum scalarization weights

    /// Objective vector dimension implied by the regime.
    std::size_t dimension() const {
        return kind == RegimeKind::multi_sum || kind == RegimeKind::multi_pareto ? 2 : 1;
    }

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Weak dominance: every coordinate of u >= the corresponding coordinate of
/// v. Equal vectors dominate each other.
bool dominates(const ObjectiveVector& u, const ObjectiveVector& v);

/// Non-dominated candidates. The frontier is computed over distinct
/// objective vectors; every candidate carrying a frontier vector is
/// retained, so duplicated frontier points do not eliminate each other.
/// Input order is preserved.
std::vector<Candidate> pareto_frontier(const std::vector<Candidate>& candidates);

/// Elitist merge: the K highest-key candidates of pool + offspring,
/// descending; ties broken by earlier iteration, then lexicographic
/// sequence. Returns the whole union when it has fewer than K members.
std::vector<Candidate> select_topk(const std::vector<Candidate>& pool,
                                   const std::vector<Candidate>& offspring, std::size_t k,
                                   const std::function<double(const Candidate&)>& key);

/// Keep candidates with 1 <= d_H(x, wild_variant) <= max_edits.
std::vector<Candidate> filter_constrained(const std::vector<Candidate>& candidates,
                                          const Sequence& wild_variant, int max_edits);

/// Keep candidates whose minimum Hamming distance to the previously
/// evaluated sequences lies in [1, budget_edits]. Distance 0 (an exact
/// duplicate of a prior trial) is rejected.
std::vector<Candidate> filter_budget(const std::vector<Candidate>& candidates,
                                     const std::vector<std::string>& evaluated, int budget_edits);

/// Weighted sum over the objective vector; weights must be nonnegative and
/// sum to 1 within 1e-9.
double scalarize(const ObjectiveVector& v, const std::vector<double>& weights);

/// 1 - d_H(x, wild_variant) / span, the paper's second objective.
double hamming_objective(const Sequence& x, const Sequence& wild_variant, int span);

/// Best first-objective fitness at each Hamming distance from the wild
/// variant that occurs among the candidates.
std::map<std::size_t, double> best_per_distance(const std::vector<Candidate>& evaluated,
                                                const Sequence& wild_variant);

/// Pareto-regime pool update: frontier of pool + offspring, truncated to K
/// by crowding (greatest minimum pairwise objective-space distance first)
/// when the frontier is larger than K.
std::vector<Candidate> select_pareto_pool(const std::vector<Candidate>& pool,
                                          const std::vector<Candidate>& offspring, std::size_t k);

} // namespace evoseq
