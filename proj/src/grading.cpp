#include "semihilb/grading.hpp"

#include "semihilb/error.hpp"

#include <algorithm>
#include <set>

namespace semihilb {

OrderTable::OrderTable(const NumericalSemigroup& s, Int horizon) {
    const auto& gens = s.generators();
    ord_.assign(static_cast<std::size_t>(std::max<Int>(horizon, 0) + 1), -1);
    ord_[0] = 0;
    for (Int x = 1; x <= horizon; ++x) {
        if (!s.contains(x)) continue;
        int best = -1;
        for (Int g : gens) {
            if (g > x) break;
            int prev = ord_[static_cast<std::size_t>(x - g)];
            if (prev >= 0 && prev + 1 > best) best = prev + 1;
        }
        ord_[static_cast<std::size_t>(x)] = best;
    }
}

int OrderTable::at(Int s) const {
    if (s < 0) return -1;
    if (s > horizon())
        throw Error(ErrorCode::BadLevel, "element " + std::to_string(s) + " beyond order table horizon " +
                                             std::to_string(horizon()));
    return (*this)[s];
}

Int order_horizon(const NumericalSemigroup& s, int max_level) {
    return std::max<Int>(s.frobenius(), 0) + static_cast<Int>(max_level + 2) * s.multiplicity();
}

const std::vector<Int>& AperyStratification::level(int k) const {
    static const std::vector<Int> empty;
    if (k < 0 || k >= static_cast<int>(strata.size())) return empty;
    return strata[static_cast<std::size_t>(k)];
}

int order_of(const OrderTable& table, Int element) {
    int o = table.at(element);
    if (o < 0) throw Error(ErrorCode::NotMember, std::to_string(element) + " is not in S");
    return o;
}

int order_of(const NumericalSemigroup& s, Int element) {
    if (!s.contains(element)) throw Error(ErrorCode::NotMember, std::to_string(element) + " is not in S");
    OrderTable table(s, element);
    return table[element];
}

namespace {

// Every sub-sum of a maximal representation is itself maximal, so peeling one
// generator at a time along order-decreasing steps reaches exactly the
// maximal representations. Non-increasing generator index avoids permutations.
void collect_reps(const std::vector<Int>& gens, const OrderTable& table, Int rest, std::size_t max_index,
                  std::vector<Int>& coeffs, std::vector<std::vector<Int>>& out) {
    if (rest == 0) {
        out.push_back(coeffs);
        return;
    }
    const int o = table[rest];
    for (std::size_t i = max_index + 1; i-- > 0;) {
        const Int g = gens[i];
        if (g > rest) continue;
        if (table[rest - g] != o - 1) continue;
        ++coeffs[i];
        collect_reps(gens, table, rest - g, i, coeffs, out);
        --coeffs[i];
    }
}

} // namespace

std::vector<MaximalRepresentation> maximal_representations(const NumericalSemigroup& s, const OrderTable& table,
                                                           Int element) {
    const int o = order_of(table, element);
    const auto& gens = s.generators();
    std::vector<Int> coeffs(gens.size(), 0);
    std::vector<std::vector<Int>> raw;
    collect_reps(gens, table, element, gens.size() - 1, coeffs, raw);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    std::vector<MaximalRepresentation> out;
    out.reserve(raw.size());
    for (auto& c : raw) out.push_back({std::move(c), element, o});
    return out;
}

std::vector<MaximalRepresentation> maximal_representations(const NumericalSemigroup& s, Int element) {
    if (!s.contains(element)) throw Error(ErrorCode::NotMember, std::to_string(element) + " is not in S");
    return maximal_representations(s, OrderTable(s, element), element);
}

SupportInfo support_size(const NumericalSemigroup& s, const OrderTable& table, Int element) {
    SupportInfo info;
    const auto& gens = s.generators();
    for (const auto& rep : maximal_representations(s, table, element)) {
        std::vector<Int> supp;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (rep.coeffs[i] != 0) supp.push_back(gens[i]);
        info.size = std::max(info.size, static_cast<int>(supp.size()));
        info.per_rep_supports.push_back(std::move(supp));
    }
    return info;
}

SupportInfo support_size(const NumericalSemigroup& s, Int element) {
    if (!s.contains(element)) throw Error(ErrorCode::NotMember, std::to_string(element) + " is not in S");
    return support_size(s, OrderTable(s, element), element);
}

std::vector<Int> induced_elements(std::span<const Int> gens, const MaximalRepresentation& rep, int h) {
    if (h < 0 || h > rep.order)
        throw Error(ErrorCode::BadLevel,
                    "level " + std::to_string(h) + " outside [0, " + std::to_string(rep.order) + "]");
    std::set<Int> values;
    // Enumerate b <= a coordinate-wise with sum b = h.
    auto rec = [&](auto&& self, std::size_t i, int left, Int acc) -> void {
        if (i == rep.coeffs.size()) {
            if (left == 0) values.insert(acc);
            return;
        }
        const Int cap = std::min<Int>(rep.coeffs[i], left);
        for (Int c = 0; c <= cap; ++c) self(self, i + 1, left - static_cast<int>(c), acc + c * gens[i]);
    };
    rec(rec, 0, h, 0);
    return {values.begin(), values.end()};
}

AperyStratification apery_strata(const NumericalSemigroup& s, const OrderTable& table) {
    AperyStratification out;
    for (Int w : s.apery()) out.d = std::max(out.d, order_of(table, w));
    out.strata.assign(static_cast<std::size_t>(out.d + 1), {});
    for (Int w : s.apery()) out.strata[static_cast<std::size_t>(table[w])].push_back(w);
    out.h_r_prime.push_back(1);
    for (int k = 1; k <= out.d; ++k) out.h_r_prime.push_back(static_cast<Int>(out.strata[static_cast<std::size_t>(k)].size()));
    return out;
}

AperyStratification apery_strata(const NumericalSemigroup& s) {
    return apery_strata(s, OrderTable(s, s.frobenius() + s.multiplicity()));
}

} // namespace semihilb
