#pragma once

// Natural: an arbitrary-precision whole number >= 1.
//
// Zero and negative values are unrepresentable. The unit 1 is a legal
// Natural and takes part in every operation like any other value.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arithmos {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a value that must be a Natural is zero, negative or malformed.
class NotANatural : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when serialized input (JSON, CSV) does not describe a valid value.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a caller breaks an operation's documented precondition.
class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal cross-check between two independent routes fails.
/// Seeing one means a bug in this library, not bad input.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class Natural {
public:
    template <std::integral T>
    Natural(T v) // NOLINT(google-explicit-constructor): literals read naturally
    {
        if (v < 1) {
            throw NotANatural("natural numbers start at 1, got " + std::to_string(v));
        }
        value_ = static_cast<unsigned long long>(v);
    }

    explicit Natural(BigInt v) : value_(std::move(v))
    {
        if (value_ < 1) {
            throw NotANatural("natural numbers start at 1, got " + value_.str());
        }
    }

    /// Parses a plain decimal literal ("17"). Signs, blanks and zero are rejected.
    static Natural parse(std::string_view text)
    {
        if (text.empty()) {
            throw NotANatural("empty string is not a natural number");
        }
        for (char ch : text) {
            if (ch < '0' || ch > '9') {
                throw NotANatural("'" + std::string(text) + "' is not a natural number");
            }
        }
        BigInt v{std::string(text)};
        if (v < 1) {
            throw NotANatural("'" + std::string(text) + "' is not a natural number");
        }
        return Natural(std::move(v));
    }

    /// Empty when v < 1.
    static std::optional<Natural> from(BigInt v)
    {
        if (v < 1) {
            return std::nullopt;
        }
        return Natural(std::move(v));
    }

    const BigInt& value() const noexcept { return value_; }
    std::string to_string() const { return value_.str(); }
    bool is_unit() const { return value_ == 1; }

    bool fits_u64() const { return value_ <= std::numeric_limits<std::uint64_t>::max(); }
    std::uint64_t to_u64() const
    {
        if (!fits_u64()) {
            throw std::overflow_error(to_string() + " does not fit in 64 bits");
        }
        return value_.convert_to<std::uint64_t>();
    }

    /// True when *this measures `other` exactly (Euclid's "measures").
    bool measures(const Natural& other) const { return other.value_ % value_ == 0; }

    /// other / *this, requiring exact division.
    Natural measure_count(const Natural& other) const
    {
        if (!measures(other)) {
            throw PreconditionViolation(to_string() + " does not measure " + other.to_string());
        }
        return Natural(BigInt(other.value_ / value_));
    }

    friend Natural operator+(const Natural& a, const Natural& b) { return Natural(BigInt(a.value_ + b.value_)); }
    friend Natural operator*(const Natural& a, const Natural& b) { return Natural(BigInt(a.value_ * b.value_)); }

    friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b)
    {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value_; }

private:
    BigInt value_;
};

/// Exponent of a root or power. Only squares and cubes exist in this arithmetic.
enum class Degree : unsigned { square = 2, cube = 3 };

inline unsigned exponent(Degree e) { return static_cast<unsigned>(e); }

inline std::optional<Degree> degree_from(long long e)
{
    switch (e) {
    case 2: return Degree::square;
    case 3: return Degree::cube;
    default: return std::nullopt;
    }
}

inline std::string_view degree_name(Degree e) { return e == Degree::square ? "square" : "cube"; }

} // namespace arithmos
