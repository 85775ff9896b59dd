#include "evoseq/operators.hpp"

#include "evoseq/error.hpp"

namespace evoseq {

Sequence random_mutation(const Sequence& s, Rng& rng, int alphabet_size) {
    if (s.empty()) {
        throw Error("random_mutation: empty sequence");
    }
    if (alphabet_size < 2 || alphabet_size > kAlphabetSize) {
        throw Error("random_mutation: alphabet size " + std::to_string(alphabet_size) +
                    " outside 2..20");
    }
    std::string out = s.str();
    const std::size_t pos = rng.uniform_index(out.size());
    const int current = aa_index(out[pos]);
    // Draw among the alphabet_size - 1 residues that differ from the current
    // one; skipping over the current index keeps the draw uniform.
    int pick = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(alphabet_size - 1)));
    if (pick >= current) {
        ++pick;
    }
    out[pos] = aa_letter(pick);
    return Sequence::parse(out);
}

Sequence crossover(const Sequence& s0, const Sequence& s1, Rng& rng, double uniform_prob) {
    if (s0.length() != s1.length()) {
        throw Error("crossover: length mismatch (" + std::to_string(s0.length()) + " vs " +
                    std::to_string(s1.length()) + ")");
    }
    const std::size_t len = s0.length();
    if (rng.bernoulli(uniform_prob)) {
        // Uniform: each position independently from either parent.
        std::string out(len, 'A');
        for (std::size_t i = 0; i < len; ++i) {
            out[i] = rng.uniform_int(0, 1) == 0 ? s0.at(i) : s1.at(i);
        }
        return Sequence::parse(out);
    }
    if (len == 1) {
        // No interior split exists; fall back to an even parent pick.
        return rng.uniform_int(0, 1) == 0 ? s0 : s1;
    }
    // One-point: split in [1, len-1] so both parents contribute.
    const std::size_t cut = static_cast<std::size_t>(rng.uniform_int(1, len - 1));
    std::string out = s0.str().substr(0, cut) + s1.str().substr(cut);
    return Sequence::parse(out);
}

} // namespace evoseq
