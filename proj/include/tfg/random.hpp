#pragma once

// Seeded samplers for words, partitions, points and elements of V.

#include "tfg/thompson.hpp"

#include <cstdint>
#include <random>

namespace tfg {

using Rng = std::mt19937_64;

// splitmix64 of (seed, index): per-case seeds independent of run order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

std::size_t uniform_index(Rng& rng, std::size_t n);
Word random_word(Rng& rng, std::size_t min_len, std::size_t max_len);
// Partition with the requested number of leaves (fewer if max_depth caps it).
Sdp random_sdp(Rng& rng, std::size_t leaves, std::size_t max_depth);
// Random refinement of the given cells into exactly n cells (n ≥ cells.size()).
std::vector<Word> random_split(Rng& rng, std::vector<Word> cells, std::size_t n, std::size_t max_len);

// Random tree pair with at most max_leaves leaves of depth ≤ max_depth and a
// uniform leaf permutation, reduced.
VElement random_v(Rng& rng, std::size_t max_leaves = 16, std::size_t max_depth = 5);
NormalizerElement random_normalizer(Rng& rng, std::size_t max_leaves = 8, std::size_t max_depth = 4);
CPoint random_cpoint(Rng& rng, std::size_t max_pre = 5, std::size_t max_period = 4);
// Point w·0^∞.
CPoint random_dyadic_point(Rng& rng, std::size_t max_len = 6);
// Random v with v(I_from) = I_to; neither word may be empty.
VElement random_v_sending(Rng& rng, const Word& from, const Word& to, std::size_t extra = 3);
// Random v fixing u pointwise and permuting the complement.
VElement random_fix(Rng& rng, const SdiUnion& u, std::size_t extra = 3);

}  // namespace tfg
