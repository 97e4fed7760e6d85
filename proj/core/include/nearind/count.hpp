#ifndef NEARIND_COUNT_HPP
#define NEARIND_COUNT_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace nearind {

/// Thrown when an exact count no longer fits in 128 bits.
class CountOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Exact non-negative integer used for every subset count.
///
/// Backed by an unsigned 128-bit word. All arithmetic is checked: an
/// overflow or a negative subtraction result throws instead of wrapping.
class Count {
public:
    __extension__ typedef unsigned __int128 word;

    constexpr Count() noexcept = default;
    constexpr Count(std::uint64_t v) noexcept : value_(v) {}  // NOLINT: implicit by intent

    static constexpr Count from_word(word w) noexcept {
        Count c;
        c.value_ = w;
        return c;
    }

    /// 2^e, for 0 <= e <= 127.
    static Count pow2(int e);

    constexpr word raw() const noexcept { return value_; }
    bool fits_u64() const noexcept { return value_ >> 64 == 0; }
    std::uint64_t to_u64() const;

    Count& operator+=(const Count& rhs);
    Count& operator-=(const Count& rhs);
    Count& operator*=(const Count& rhs);

    friend Count operator+(Count a, const Count& b) { return a += b; }
    friend Count operator-(Count a, const Count& b) { return a -= b; }
    friend Count operator*(Count a, const Count& b) { return a *= b; }

    /// Quotient of an exact division; throws std::domain_error if `divisor`
    /// does not divide this value.
    Count divide_exact(const Count& divisor) const;

    friend constexpr bool operator==(const Count&, const Count&) = default;
    friend constexpr std::strong_ordering operator<=>(const Count& a, const Count& b) noexcept {
        return a.value_ <=> b.value_;
    }

    std::string to_string() const;

    /// Parses a decimal string; throws std::invalid_argument on bad input.
    static Count parse(const std::string& text);

private:
    word value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Count& c);

}  // namespace nearind

template <>
struct std::hash<nearind::Count> {
    std::size_t operator()(const nearind::Count& c) const noexcept {
        auto w = c.raw();
        return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(w) ^
                                          static_cast<std::uint64_t>(w >> 64) * 0x9e3779b97f4a7c15ULL);
    }
};

#endif  // NEARIND_COUNT_HPP
