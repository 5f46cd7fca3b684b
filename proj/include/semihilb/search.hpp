#pragma once

#include "semihilb/filtration.hpp"

#include <string>
#include <vector>

namespace semihilb {

/// One row of the residue table: n_i taken as the unit class, n_j = h n_i.
struct ResidueRow {
    Int e = 0;
    Int h = 0;
    std::vector<Int> base_classes;  // 1, 2, 3, h, h+1, h+2, 2h, 2h+1, 3h  (mod e)
    std::vector<Int> extra_classes; // 2h+2, h+3, 3h+1, 2h+3, 3h+2       (mod e)
    bool admissible = false;
};

/// Admissible iff the base classes are distinct and nonzero and every other
/// nonzero class is among the extra classes. Throws BadRange unless
/// e >= 2 and 1 <= h <= e - 1.
ResidueRow residue_admissible(Int e, Int h);

/// Rows h = 4 .. e-1. Throws BadRange for e < 10.
std::vector<ResidueRow> residue_table(Int e);

/// e = 13, n_i = 13k + p, n_j = 13k' + 4p.
struct SpParameters {
    int p = 0;
    int k = 0;
    int k_prime = 0;
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
};

/// e, n_i, n_j, 3n_i-e, 2n_i+n_j-e, n_i+2n_j-e, 3n_j-e, 2n_i+2n_j-alpha e,
/// 3n_i+n_j-beta e, 3n_i+2n_j-gamma e. Throws ConstraintViolation when the
/// parameter constraints fail.
std::vector<Int> sp_generators(const SpParameters& p);

/// Throws ConstraintViolation, or NotMinimal when the ten values do not form
/// a minimal generating set of a numerical semigroup of multiplicity 13.
NumericalSemigroup construct_sp(const SpParameters& p);

struct SearchConfig {
    Int e_lo = 0;
    Int e_hi = -1; // empty range when e_lo > e_hi
    int v_offset = 3;
    Int gen_bound = 0;         // absolute cap on generators; 0 selects factor * e
    Int gen_bound_factor = 20;
    int workers = 1;

    Int bound_for(Int e) const { return gen_bound > 0 ? gen_bound : gen_bound_factor * e; }
};

/// Throws BadConfig: v_offset outside {3, 4}, workers < 1, e_lo < 2 on a
/// non-empty range, or a bound below 3e.
void validate(const SearchConfig& c);

/// Forced part of a candidate: generators other than e, and the Apery
/// elements of higher order that the pattern fixes.
struct Skeleton {
    Int e = 0;
    std::vector<Int> gens;
    std::vector<Int> apery_extra;
};

/// Skeletons for every e in range that survive the residue and membership
/// prefilters, in a fixed order.
std::vector<Skeleton> enumerate_skeletons(const SearchConfig& c);

/// Minimal generating sets with multiplicity in range, v = e - v_offset,
/// generators <= bound, and a decreasing Hilbert function, sorted by
/// (e, generators). Runs skeleton completion on `workers` OpenMP threads.
std::vector<NumericalSemigroup> search_decreasing(const SearchConfig& c);

/// Single-threaded reference for search_decreasing.
std::vector<NumericalSemigroup> search_decreasing_serial(const SearchConfig& c);

/// Brute force over all minimal generating sets with multiplicity e,
/// embedding dimension v and generators <= bound. Small bounds only.
std::vector<NumericalSemigroup> search_decreasing_exhaustive(Int e, int v, Int bound);

/// Header e,v,generators,hilbert,decreasing_levels; lists inside a field
/// are ';'-separated.
std::string search_csv(const std::vector<NumericalSemigroup>& hits);

} // namespace semihilb
