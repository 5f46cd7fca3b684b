#include "semihilb/combinatorics.hpp"

#include "semihilb/error.hpp"

#include <algorithm>
#include <set>

namespace semihilb {

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw Error(ErrorCode::BadConfig, msg);
}

} // namespace

void validate(const TwoGenConfig& c) {
    if (c.n_i <= 0 || c.n_j <= 0) bad("generators must be positive");
    if (c.n_i == c.n_j) bad("n_i and n_j must differ");
    if (c.reps.empty()) bad("no representations given");
    if (c.k < 0) bad("negative order");
    for (std::size_t r = 0; r < c.reps.size(); ++r) {
        auto [a, b] = c.reps[r];
        if (a < 0 || b < 0 || a + b != c.k)
            bad("pair (" + std::to_string(a) + "," + std::to_string(b) + ") does not sum to k = " + std::to_string(c.k));
        if (r > 0 && c.reps[r - 1].first >= a) bad("pairs must be strictly ascending in a");
    }
    if (c.h < 0 || c.h > c.k) bad("level h outside [0, k]");
}

int beta_closed_form(const TwoGenConfig& c) {
    validate(c);
    if (c.k < 3 || c.h < 2 || c.h > c.k - 1) bad("closed form needs k >= 3 and 2 <= h <= k - 1");
    const int h = c.h;
    const int kh = c.k - h;
    const int p = static_cast<int>(c.reps.size());
    auto a = [&](int i) { return c.reps[static_cast<std::size_t>(i - 1)].first; };
    auto b = [&](int i) { return c.reps[static_cast<std::size_t>(i - 1)].second; };

    if (h <= a(1)) return 1 + std::min(b(1), h);

    // Gap contributions of the reps with a_m < h.
    int i = 1;
    while (i < p && a(i + 1) < h) ++i;
    int total = std::min(a(1), kh);
    for (int m = 2; m <= i; ++m) total += std::min(a(m) - a(m - 1) - 1, kh);
    if (i == p) return p + total;
    return i + 1 + total + std::min(h - a(i) - 1, b(i + 1));
}

BetaCount beta_brute_force(const TwoGenConfig& c) {
    validate(c);
    std::set<int> pairs;
    for (auto [a, b] : c.reps)
        for (int q = 0; q <= c.h; ++q)
            if (q <= a && c.h - q <= b) pairs.insert(q);
    std::set<Int> values;
    for (int q : pairs) values.insert(q * c.n_i + (c.h - q) * c.n_j);
    return {static_cast<int>(pairs.size()), static_cast<int>(values.size())};
}

std::vector<Int> induced_values(const TwoGenConfig& c) {
    validate(c);
    std::set<Int> values;
    for (auto [a, b] : c.reps)
        for (int q = 0; q <= c.h; ++q)
            if (q <= a && c.h - q <= b) values.insert(q * c.n_i + (c.h - q) * c.n_j);
    return {values.begin(), values.end()};
}

std::string beta3_exception(const TwoGenConfig& c) {
    validate(c);
    if (c.reps.size() != 3) return "";
    const auto [a1, b1] = c.reps[0];
    const auto [a2, b2] = c.reps[1];
    if (!(a1 < c.h && c.h <= a2)) return "";
    if (c.h == 2 && (a1 == 0 || a1 == 1)) return "i";
    if (c.k == c.h + 1 && a1 == c.h - 1 && b1 == 2) return "ii";
    if (a1 == 0 && b2 == 1) return "iii";
    return "";
}

Int support_count_bound(const MaximalRepresentation& x, int h) {
    if (x.coeffs.empty()) bad("empty representation");
    if (x.coeffs[0] != 0) bad("support must avoid the multiplicity");
    if (h < 2 || h >= x.order) bad("need 2 <= h < k");
    Int q = 0;
    for (std::size_t i = 1; i < x.coeffs.size(); ++i)
        if (x.coeffs[i] > 0) ++q;
    if (q >= h + 1) return h * (q - h) + 1;
    return q;
}

} // namespace semihilb
