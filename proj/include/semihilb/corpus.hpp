#pragma once

#include "semihilb/search.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace semihilb {

/// Seed used by every corpus driver when none is given.
inline constexpr std::uint64_t default_seed = 20240611;

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]; portable across standard libraries.
Int draw(Rng& rng, Int lo, Int hi);

/// Multiplicity in [e_lo, e_hi] plus 1..max_extra random values in (e, 4e],
/// minimized. Retries until the values are coprime.
NumericalSemigroup random_semigroup(Rng& rng, Int e_lo, Int e_hi, int max_extra = 8);
std::vector<NumericalSemigroup> random_semigroups(std::uint64_t seed, std::size_t count, Int e_lo, Int e_hi);

/// Semigroup generated by e and one value k_c e + c per class, k_c in [1, kmax].
NumericalSemigroup random_kunz(Rng& rng, Int e, Int kmax);

/// Instances with v = e - v_offset, e in [e_lo, e_hi], from random Kunz
/// coordinates. Gives up after 2000 draws per instance.
std::vector<NumericalSemigroup> random_with_profile(std::uint64_t seed, std::size_t count, Int e_lo, Int e_hi,
                                                    int v_offset);

/// Every symmetric semigroup of multiplicity e whose Kunz coordinates are at
/// most kmax.
std::vector<NumericalSemigroup> kunz_symmetric(Int e, Int kmax);

/// Random symmetric semigroups built by pairing Apery classes around a
/// random maximal element; only those with v >= e - max_offset are kept.
std::vector<NumericalSemigroup> random_symmetric(std::uint64_t seed, std::size_t count, Int e_lo, Int e_hi,
                                                 int max_offset);

/// Random parameter draws accepted by construct_sp.
std::vector<NumericalSemigroup> random_sp(std::uint64_t seed, std::size_t count);

/// Each instance takes a random skeleton from enumerate_skeletons(c) and a
/// random value in every free class, then minimizes.
std::vector<NumericalSemigroup> skeleton_filler(std::uint64_t seed, std::size_t count, const SearchConfig& c);

/// Decreasing instances: random S_p and skeleton fillers for v = e-3 and
/// v = e-4 that turn out decreasing.
std::vector<NumericalSemigroup> decreasing_corpus(std::uint64_t seed, std::size_t count);

} // namespace semihilb
