#pragma once

#include "semihilb/grading.hpp"

#include <string>
#include <utility>
#include <vector>

namespace semihilb {

/// Elements x_r = a_r n_i + b_r n_j of a common order k, and a target level h.
struct TwoGenConfig {
    Int n_i = 0;
    Int n_j = 0;
    std::vector<std::pair<int, int>> reps; // (a_r, b_r), a_r strictly ascending
    int k = 0;
    int h = 0;
};

struct BetaCount {
    int formal = 0;  // distinct coefficient pairs (q, h - q)
    int numeric = 0; // distinct values q n_i + (h - q) n_j
};

/// Throws BadConfig on malformed configs: n_i == n_j, non-positive
/// generators, empty reps, a + b != k, a not strictly ascending, h outside [0, k].
void validate(const TwoGenConfig& c);

/// Case formula for the number of induced pairs at level h. Requires k >= 3
/// and 2 <= h <= k - 1.
int beta_closed_form(const TwoGenConfig& c);

BetaCount beta_brute_force(const TwoGenConfig& c);

/// Sorted distinct values q n_i + (h - q) n_j over the induced pairs.
std::vector<Int> induced_values(const TwoGenConfig& c);

/// For three reps in the a_1 < h <= a_2 branch, names the listed exception
/// ("i", "ii", "iii") that the configuration falls under, or "" if none.
/// Reported only; nothing depends on it.
std::string beta3_exception(const TwoGenConfig& c);

/// Guaranteed lower bound on |C_h| from one maximal representation of an
/// element of C_k whose support avoids the multiplicity: h(q - h) + 1 when
/// q >= h + 1, q otherwise. Throws BadConfig unless 2 <= h < k and the
/// multiplicity coefficient (index 0) is zero.
Int support_count_bound(const MaximalRepresentation& x, int h);

} // namespace semihilb
