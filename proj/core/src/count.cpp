#include "nearind/count.hpp"

#include <algorithm>
#include <ostream>

namespace nearind {

Count Count::pow2(int e) {
    if (e < 0 || e > 127) {
        throw CountOverflow("2^" + std::to_string(e) + " is outside the 128-bit count range");
    }
    return from_word(word{1} << e);
}

std::uint64_t Count::to_u64() const {
    if (!fits_u64()) {
        throw CountOverflow("count " + to_string() + " does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(value_);
}

Count& Count::operator+=(const Count& rhs) {
    if (__builtin_add_overflow(value_, rhs.value_, &value_)) {
        throw CountOverflow("count addition overflowed 128 bits");
    }
    return *this;
}

Count& Count::operator-=(const Count& rhs) {
    if (rhs.value_ > value_) {
        throw CountOverflow("count subtraction would go negative");
    }
    value_ -= rhs.value_;
    return *this;
}

Count& Count::operator*=(const Count& rhs) {
    if (__builtin_mul_overflow(value_, rhs.value_, &value_)) {
        throw CountOverflow("count multiplication overflowed 128 bits");
    }
    return *this;
}

Count Count::divide_exact(const Count& divisor) const {
    if (divisor.value_ == 0) {
        throw std::domain_error("division of a count by zero");
    }
    if (value_ % divisor.value_ != 0) {
        throw std::domain_error(to_string() + " is not divisible by " + divisor.to_string());
    }
    return from_word(value_ / divisor.value_);
}

std::string Count::to_string() const {
    if (value_ == 0) return "0";
    std::string out;
    word v = value_;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Count Count::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty count literal");
    Count out;
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("invalid digit in count literal '" + text + "'");
        }
        out *= Count(10);
        out += Count(static_cast<std::uint64_t>(ch - '0'));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.to_string(); }

}  // namespace nearind
