#pragma once

#include "semihilb/semigroup.hpp"

#include <vector>

namespace semihilb {

/// ord(s) = max{h : s in hM} for every s in [0, horizon]; -1 marks gaps.
class OrderTable {
public:
    OrderTable(const NumericalSemigroup& s, Int horizon);

    Int horizon() const noexcept { return static_cast<Int>(ord_.size()) - 1; }

    /// Order of s, or -1 when s is not in S. Requires 0 <= s <= horizon().
    int operator[](Int s) const noexcept { return ord_[static_cast<std::size_t>(s)]; }

    /// Bounds-checked lookup: -1 for s < 0 or gaps, throws BadLevel above the horizon.
    int at(Int s) const;

private:
    std::vector<int> ord_;
};

/// Horizon guaranteeing that every element of order <= max_level lies in
/// the window: any s > f + (h + 1)e has ord(s) > h.
Int order_horizon(const NumericalSemigroup& s, int max_level);

struct MaximalRepresentation {
    std::vector<Int> coeffs; // indexed like NumericalSemigroup::generators()
    Int value = 0;
    int order = 0;

    friend bool operator==(const MaximalRepresentation&, const MaximalRepresentation&) = default;
};

struct SupportInfo {
    int size = 0;
    // One generator subset per maximal representation, same order as
    // maximal_representations().
    std::vector<std::vector<Int>> per_rep_supports;
};

struct AperyStratification {
    std::vector<std::vector<Int>> strata; // strata[k] = Ap_k, k = 0..d
    int d = 0;
    std::vector<Int> h_r_prime; // [1, |Ap_1|, ..., |Ap_d|]

    const std::vector<Int>& level(int k) const;
    std::size_t size_of(int k) const { return level(k).size(); }
};

/// Throws NotMember if s is not in S.
int order_of(const NumericalSemigroup& s, Int element);
int order_of(const OrderTable& table, Int element);

/// All coefficient vectors a with sum a_i n_i = s and sum a_i = ord(s),
/// deduplicated and sorted lexicographically.
std::vector<MaximalRepresentation> maximal_representations(const NumericalSemigroup& s, const OrderTable& table,
                                                           Int element);
std::vector<MaximalRepresentation> maximal_representations(const NumericalSemigroup& s, Int element);

/// Support counted as nonzero coefficient positions (the multiplicity
/// included), maximized over maximal representations. s = 0 has size 0.
SupportInfo support_size(const NumericalSemigroup& s, const OrderTable& table, Int element);
SupportInfo support_size(const NumericalSemigroup& s, Int element);

/// Values sum b_j n_j with 0 <= b_j <= a_j and sum b_j = h, sorted and
/// deduplicated. Throws BadLevel unless 0 <= h <= rep.order.
std::vector<Int> induced_elements(std::span<const Int> gens, const MaximalRepresentation& rep, int h);

AperyStratification apery_strata(const NumericalSemigroup& s, const OrderTable& table);
AperyStratification apery_strata(const NumericalSemigroup& s);

} // namespace semihilb
