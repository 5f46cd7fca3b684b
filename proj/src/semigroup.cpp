#include "semihilb/semigroup.hpp"

#include "semihilb/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace semihilb {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::BadGenerator: return "BadGenerator";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::NonMinimal: return "NonMinimal";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::BadLevel: return "BadLevel";
    case ErrorCode::BadConfig: return "BadConfig";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

Int gcd_of(std::span<const Int> values) {
    Int g = 0;
    for (Int x : values) g = std::gcd(g, x);
    return g;
}

namespace {

void check_input(std::span<const Int> gens) {
    if (gens.empty()) throw Error(ErrorCode::EmptyInput, "generator list is empty");
    for (Int g : gens)
        if (g <= 0) throw Error(ErrorCode::BadGenerator, "generator " + std::to_string(g) + " is not positive");
    if (Int g = gcd_of(gens); g != 1)
        throw Error(ErrorCode::GcdNotOne, "gcd of generators is " + std::to_string(g));
}

// Adds generator g to a membership table in place (unbounded knapsack closure).
void close_under(std::vector<char>& member, Int g) {
    const auto n = static_cast<Int>(member.size());
    for (Int x = g; x < n; ++x)
        if (member[static_cast<std::size_t>(x - g)]) member[static_cast<std::size_t>(x)] = 1;
}

// Every x > (e - 1) * max(gens) is a member, so the table up to that bound
// contains the Frobenius number.
Int membership_cutoff(const std::vector<Int>& sorted) {
    constexpr Int kMaxTable = 50'000'000;
    const Int e = sorted.front();
    const Int top = sorted.back();
    if (top > kMaxTable || (e - 1) > kMaxTable / top)
        throw Error(ErrorCode::BadGenerator, "generators too large for the membership table");
    return std::max((e - 1) * top + 1, top);
}

} // namespace

NumericalSemigroup NumericalSemigroup::build(std::span<const Int> gens) {
    check_input(gens);
    std::vector<Int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<char> member(static_cast<std::size_t>(membership_cutoff(sorted) + 1), 0);
    member[0] = 1;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const Int g = sorted[i];
        // Only smaller generators can represent g.
        if (member[static_cast<std::size_t>(g)])
            throw Error(ErrorCode::NonMinimal,
                        "generator " + std::to_string(g) + " lies in the semigroup generated by the others");
        close_under(member, g);
    }

    NumericalSemigroup s;
    s.gens_ = std::move(sorted);
    s.member_ = std::move(member);
    s.finish();
    return s;
}

NumericalSemigroup NumericalSemigroup::generated_by(std::span<const Int> values) {
    check_input(values);
    std::vector<Int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<char> member(static_cast<std::size_t>(membership_cutoff(sorted) + 1), 0);
    member[0] = 1;
    std::vector<Int> minimal;
    for (Int g : sorted) {
        if (member[static_cast<std::size_t>(g)]) continue;
        minimal.push_back(g);
        close_under(member, g);
    }

    NumericalSemigroup s;
    s.gens_ = std::move(minimal);
    s.member_ = std::move(member);
    s.finish();
    return s;
}

void NumericalSemigroup::finish() {
    frobenius_ = -1;
    for (Int x = static_cast<Int>(member_.size()) - 1; x >= 0; --x) {
        if (!member_[static_cast<std::size_t>(x)]) {
            frobenius_ = x;
            break;
        }
    }
    const Int e = multiplicity();
    member_.resize(static_cast<std::size_t>(frobenius_ + 3 * e + 1), 1);

    apery_by_class_.assign(static_cast<std::size_t>(e), -1);
    Int found = 0;
    for (Int x = 0; found < e; ++x) {
        auto r = static_cast<std::size_t>(x % e);
        if (apery_by_class_[r] < 0 && contains(x)) {
            apery_by_class_[r] = x;
            ++found;
        }
    }
    apery_ = apery_by_class_;
    std::sort(apery_.begin(), apery_.end());
}

std::vector<Int> NumericalSemigroup::gaps() const {
    std::vector<Int> out;
    for (Int x = 1; x <= frobenius_; ++x)
        if (!contains(x)) out.push_back(x);
    return out;
}

Int NumericalSemigroup::genus() const {
    return static_cast<Int>(gaps().size());
}

std::vector<Int> parse_generators(std::string_view text) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
        while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
        Int value = 0;
        auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || end != item.data() + item.size())
            throw Error(ErrorCode::UsageError, "malformed generator list entry '" + std::string(item) + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

std::string format_list(std::span<const Int> values, std::string_view sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << sep;
        os << values[i];
    }
    return os.str();
}

} // namespace semihilb
