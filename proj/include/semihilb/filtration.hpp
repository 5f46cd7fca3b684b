#pragma once

#include "semihilb/grading.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace semihilb {

struct HilbertProfile {
    std::vector<Int> values; // H_R(0..N), N = max(stable_at, 1)
    int stable_at = 0;
    std::vector<int> decreasing_levels;

    /// H_R(n) for any n >= 0; values past the stored prefix equal e.
    Int at(int n) const;
    bool decreasing() const noexcept { return !decreasing_levels.empty(); }
};

struct FiltrationTables {
    std::map<int, std::vector<Int>> D; // k = 2..r_stop
    std::map<int, std::vector<Int>> C; // k = 1..r_stop
    std::map<std::pair<int, int>, std::vector<Int>> D_split; // (k, t), non-empty only
    std::optional<int> k0;
    int r_stop = 0;

    const std::vector<Int>& d_set(int k) const;
    const std::vector<Int>& c_set(int k) const;
};

struct AnalysisOptions {
    // Recheck that H_R(n) = e on e consecutive levels past r_stop.
    bool certify_stabilization = true;
};

/// Everything derived from the M-adic filtration of one semigroup. Immutable
/// once constructed.
class Analysis {
public:
    explicit Analysis(NumericalSemigroup s, AnalysisOptions opts = {});

    const NumericalSemigroup& semigroup() const noexcept { return s_; }
    const OrderTable& orders() const noexcept { return table_; }
    const AperyStratification& apery_strata() const noexcept { return strata_; }
    const HilbertProfile& hilbert() const noexcept { return profile_; }
    const FiltrationTables& tables() const noexcept { return tables_; }

    /// Least h with (h+1)M = e + hM.
    int reduction_number() const noexcept { return tables_.r_stop; }

    Int multiplicity() const noexcept { return s_.multiplicity(); }

private:
    NumericalSemigroup s_;
    int r_ = 0; // set while growing table_
    OrderTable table_;
    AperyStratification strata_;
    HilbertProfile profile_;
    FiltrationTables tables_;
};

struct DeltaLevel {
    int k = 0;
    Int delta_h = 0;
    Int c_size = 0;
    Int d_size = 0;
    bool ok = false;
};

struct DeltaReport {
    std::vector<DeltaLevel> levels;
    bool all_ok() const;
};

HilbertProfile hilbert_function(const NumericalSemigroup& s);
FiltrationTables strata_tables(const NumericalSemigroup& s);

/// Checks H_R(k) - H_R(k-1) = |C_k| - |D_k| for k = 2..r_stop + 1. Throws
/// InternalInconsistency on any mismatch.
DeltaReport audit_delta(const Analysis& a);

bool is_tangent_cone_cm(const Analysis& a);
bool is_tangent_cone_cm(const NumericalSemigroup& s);

} // namespace semihilb
