#pragma once

#include "semihilb/filtration.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semihilb {

/// x in S iff f - x not in S, for 0 <= x <= f.
bool is_symmetric(const NumericalSemigroup& s);
/// Every w in Ap has (e + f) - w in Ap.
bool is_symmetric_apery(const NumericalSemigroup& s);

/// Outcome of checking a conditional statement on one instance.
enum class Verdict {
    NotApplicable, // hypotheses do not hold
    Consistent,    // every checked claim holds
    Violated,      // a claim fails on this instance
};

std::string_view to_string(Verdict v);

struct NamedFlag {
    std::string name;
    bool value = false;
};

/// C_2 = {2a, a+b, 2b} and C_3 = {3a, 2a+b, a+2b, 3b} with a < b.
struct C3Pattern {
    Int n_i = 0;
    Int n_j = 0;
    bool c2_matches = false;
};

/// Requires |Ap_2| = 3 (HypothesisFailed otherwise). Empty when |C_3| <= 3
/// or no pair realizes the pattern.
std::vector<C3Pattern> classify_c3(const Analysis& a);

struct Ap24Match {
    char tag = '?';          // 'a'..'e'
    std::vector<Int> witnesses; // (n_i, n_j, n_k) or (n_i, n_j, n_h, n_k) for 'c'
    Int partner = 0;         // case 'b': the member of {n_i, n_j} summed with n_k
    bool contained = false;  // C_3 inside the listed set
    bool equal = false;      // C_3 equal to the listed set
};

/// All case matches for |Ap_2| = 4 (HypothesisFailed otherwise). A case
/// matches when Ap_2 equals its listed set and C_3 satisfies the listed
/// relation (containment for b and d, equality otherwise). Case b lists
/// n_i < n_j and names the one added to n_k in `partner`.
std::vector<Ap24Match> match_ap24_case(const Analysis& a);

struct TheoremCheck {
    Verdict verdict = Verdict::NotApplicable;
    std::string reason;
    std::vector<NamedFlag> conditions;
    std::vector<std::vector<Int>> witnesses;
    std::string pattern; // which alternative matched, if any
    int level = 0;       // level h of the matched alternative, 0 if none
    std::vector<NamedFlag> notes; // reported facts that are not part of the claim
};

/// v = e - 3: decreasing, decreasing at 2, and H_R' = [1, e-4, 3] plus the
/// C_2 / D_2 + e = C_3 pattern are all equivalent.
TheoremCheck check_thm_e3(const Analysis& a);

/// v = e - 4 with (|Ap_2|, |Ap_3|) = (4, 0) or (3, 1).
TheoremCheck check_thm_e4(const Analysis& a);

struct ApJ1Report {
    Verdict verdict = Verdict::NotApplicable;
    std::string reason;
    int ell = 0;
    int d = 0;
    std::optional<std::pair<Int, Int>> witness; // (n_i, n_j), (d+1) n_i in D_ell + e
    std::vector<NamedFlag> checks;
};

/// |Ap_2| = 3, |Ap_3| = 1 and H_R decreasing.
ApJ1Report check_apj1(const Analysis& a);

struct LemmaR0Report {
    Verdict verdict = Verdict::NotApplicable;
    std::string reason;
    int r0 = 0;
    int d = 0;
    std::optional<Int> n_i;
    std::vector<NamedFlag> checks;
};

/// Some 3 <= r < d has |Ap_r| = 1; then one generator n_i gives Ap_k = {k n_i}
/// from the first such level to d, and k n_i in Ap_k below it.
LemmaR0Report check_lemma_r0(const Analysis& a);

struct ClassificationReport {
    bool symmetric = false;
    std::optional<std::vector<C3Pattern>> c3;       // set when |Ap_2| = 3
    std::optional<std::vector<Ap24Match>> ap24;     // set when |Ap_2| = 4
    TheoremCheck thm_e3;
    TheoremCheck thm_e4;
    ApJ1Report apj1;
    LemmaR0Report lemma_r0;
};

ClassificationReport classify(const Analysis& a);

} // namespace semihilb
