#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semihilb {

using Int = std::int64_t;

/// A numerical semigroup given by its minimal generating set.
///
/// The membership table covers [0, horizon] with horizon = f + 3e. Queries
/// above the horizon need no table: every integer larger than the Frobenius
/// number belongs to S, so the object stays immutable after construction and
/// can be shared across threads without locking.
class NumericalSemigroup {
public:
    /// Validates that `gens` is the minimal generating set of a numerical
    /// semigroup (coprime, no generator representable by the others). Order of
    /// the input does not matter. Throws Error{EmptyInput, BadGenerator,
    /// GcdNotOne, NonMinimal}.
    static NumericalSemigroup build(std::span<const Int> gens);

    /// Semigroup generated by an arbitrary coprime list; non-minimal entries
    /// and duplicates are dropped. Throws on empty input or gcd > 1.
    static NumericalSemigroup generated_by(std::span<const Int> values);

    const std::vector<Int>& generators() const noexcept { return gens_; }
    Int multiplicity() const noexcept { return gens_.front(); }
    int embedding_dimension() const noexcept { return static_cast<int>(gens_.size()); }
    Int frobenius() const noexcept { return frobenius_; }
    Int horizon() const noexcept { return static_cast<Int>(member_.size()) - 1; }

    bool contains(Int s) const noexcept {
        if (s < 0) return false;
        if (s > frobenius_) return true;
        return member_[static_cast<std::size_t>(s)] != 0;
    }

    /// Apéry set with respect to the multiplicity, sorted ascending.
    const std::vector<Int>& apery() const noexcept { return apery_; }

    /// Apéry element of residue class r (0 <= r < e).
    Int apery_of_class(Int r) const noexcept { return apery_by_class_[static_cast<std::size_t>(r)]; }

    std::vector<Int> gaps() const;
    Int genus() const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.gens_ == b.gens_;
    }

private:
    NumericalSemigroup() = default;
    void finish();

    std::vector<Int> gens_;
    std::vector<char> member_;
    Int frobenius_ = -1;
    std::vector<Int> apery_;
    std::vector<Int> apery_by_class_;
};

/// Parses "13,19,24,44" into integers. Whitespace around entries is ignored.
/// Throws Error{UsageError} on malformed input.
std::vector<Int> parse_generators(std::string_view text);

std::string format_list(std::span<const Int> values, std::string_view sep = ",");

Int gcd_of(std::span<const Int> values);

} // namespace semihilb
