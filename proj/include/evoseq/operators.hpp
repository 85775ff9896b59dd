#pragma once

#include "evoseq/rng.hpp"
#include "evoseq/sequence.hpp"

namespace evoseq {

/// Substitute one uniformly chosen position with a uniformly chosen residue
/// different from the original. `alphabet_size` restricts draws to the first
/// n alphabet letters (20 = full canonical alphabet; smaller values are used
/// by reduced-alphabet synthetic landscapes).
Sequence random_mutation(const Sequence& s, Rng& rng, int alphabet_size = kAlphabetSize);

/// Default crossover: with probability `uniform_prob` each position is drawn
/// independently from either parent with equal probability; otherwise a
/// one-point crossover at a uniform split keeps the prefix of s0 and the
/// suffix of s1. Parents must have equal length.
Sequence crossover(const Sequence& s0, const Sequence& s1, Rng& rng, double uniform_prob = 0.5);

} // namespace evoseq
