#pragma once

#include "raag/combinatorics.hpp"
#include "raag/freegroup.hpp"

#include <cstdint>
#include <random>

namespace raag {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Uniform-ish integer in [lo, hi] by modulo reduction; the same sequence on
/// every platform, unlike std::uniform_int_distribution.
int draw(std::mt19937_64& rng, int lo, int hi);

/// Each of the m(m-1)/2 possible edges present with probability 1/2.
Graph random_graph(int m, std::mt19937_64& rng);

/// Random element of the commutator subgroup of F(g1, g2): alternating
/// syllables with exponents in -5..5, closed up by two correcting syllables.
/// Retries until the reduced length is at most max_length.
Word random_f2_commutator_word(std::mt19937_64& rng, std::size_t max_length);

}  // namespace raag
