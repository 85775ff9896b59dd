#pragma once

#include "evoseq/landscape.hpp"
#include "evoseq/sequence.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace evoseq {

/// Pairwise coupling between positions i < j (0-based internally; the file
/// format uses 1-based positions, like every other user-facing index).
struct CouplingBlock {
    int i = 0;
    int j = 0;
    std::vector<double> matrix; // row-major q x q: matrix[a*q + b] = J_ij(a, b)
};

/// Fields-plus-couplings statistical energy model.
///
/// q is the residue alphabet size; sequences scored against these parameters
/// must use only the first q letters of the canonical alphabet.
struct PottsParams {
    int length = 0;
    int q = kAlphabetSize;
    std::vector<std::vector<double>> fields; // length x q
    std::vector<CouplingBlock> couplings;    // i < j, at most one block per pair
    int sign = 1;                            // energy-to-fitness orientation

    double coupling(int i, int j, int a, int b) const; // 0 when the pair carries no block
};

/// E(x) = sum_i h_i(x_i) + sum_{i<j} J_ij(x_i, x_j).
double potts_energy(const PottsParams& params, const Sequence& seq);

/// sign * (E(seq) - E(wild_type)); the wild type itself maps to exactly 0.
double potts_fitness(const PottsParams& params, const Sequence& seq, const Sequence& wild_type,
                     int sign);

/// Synthetic landscape parameters: fields i.i.d. Normal(0, field_scale^2);
/// each (i, j) pair carries a coupling block with probability
/// coupling_density, entries Normal(0, coupling_scale^2). Deterministic in
/// the seed.
PottsParams generate_potts_params(int length, int q, double field_scale, double coupling_scale,
                                  double coupling_density, std::uint64_t seed);

/// Per-site argmax of sign * h — a field-greedy high-fitness reference,
/// useful as the wild type of a generated landscape.
Sequence greedy_reference_sequence(const PottsParams& params, int sign);

PottsParams load_potts_params(const std::string& path);
void save_potts_params(const PottsParams& params, const std::string& path);

/// Potts landscape over a variant space. Variants are expanded onto the
/// wild type before scoring, so campaigns on site-restricted spaces work the
/// same way they do for exact tables.
class PottsOracle : public Oracle {
  public:
    PottsOracle(PottsParams params, VariantSpace space);

    double score(const Sequence& variant) const override;
    std::string kind() const override { return "potts"; }

    const PottsParams& params() const { return params_; }
    const VariantSpace& space() const { return space_; }

  private:
    PottsParams params_;
    VariantSpace space_;
    double wild_energy_ = 0.0;
};

} // namespace evoseq
