#pragma once

// Whole-number and ratio arithmetic after Euclid's Elements, Book VII.
//
// Products are counted additions, the common measure is found by reciprocal
// subtraction (with a division shortcut), and every ratio reduces to a unique
// lowest-terms ratio whose terms measure the original ones.

#include "natural.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

namespace arithmos {

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

/// Multipliers up to this count are evaluated as literal repeated addition.
/// Above it the native product is used; tests pin agreement on both sides.
inline constexpr std::uint64_t kRepeatedAdditionLimit = 1u << 16;

/// "m times n": n added to itself as many times as there are units in m.
///
/// The evaluation is asymmetric (m counts, n is added); the result equals the
/// symmetric product, which is exactly the property the tests check.
inline Natural mul_repeated(const Natural& times, const Natural& n)
{
    if (times.value() > kRepeatedAdditionLimit) {
        return Natural(BigInt(times.value() * n.value()));
    }
    const auto count = times.value().convert_to<std::uint64_t>();
    BigInt sum = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        sum += n.value();
    }
    return Natural(std::move(sum));
}

/// n raised to the given degree, by repeated multiplication.
inline Natural power(const Natural& n, Degree e)
{
    BigInt p = n.value();
    for (unsigned i = 1; i < exponent(e); ++i) {
        p *= n.value();
    }
    return Natural(std::move(p));
}

// ---------------------------------------------------------------------------
// Common measure
// ---------------------------------------------------------------------------

/// Greatest common measure by reciprocal subtraction (anthyphairesis): the
/// lesser is taken from the greater until the two are equal.
///
/// Runs in O(max/min) steps; use gcd() for general inputs.
inline Natural gcd_anthyphairesis(const Natural& a, const Natural& b)
{
    BigInt x = a.value();
    BigInt y = b.value();
    while (x != y) {
        if (x > y) {
            x -= y;
        } else {
            y -= x;
        }
    }
    return Natural(std::move(x));
}

/// Greatest common measure by division with remainder.
inline Natural gcd(const Natural& a, const Natural& b)
{
    if (a.fits_u64() && b.fits_u64()) {
        std::uint64_t x = a.to_u64();
        std::uint64_t y = b.to_u64();
        while (y != 0) {
            const std::uint64_t r = x % y;
            x = y;
            y = r;
        }
        return Natural(x);
    }
    BigInt x = a.value();
    BigInt y = b.value();
    while (y != 0) {
        BigInt r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return Natural(std::move(x));
}

/// "Prime to one another": measured by the unit alone as a common measure.
inline bool are_relatively_prime(const Natural& a, const Natural& b) { return gcd(a, b).is_unit(); }

// ---------------------------------------------------------------------------
// Ratios
// ---------------------------------------------------------------------------

/// An ordered pair of Naturals. Carries neither sign nor zero.
///
/// Equality is proportion: a/b == c/d iff a*d == b*c. Use same_terms() to
/// compare the stored numerator and denominator literally.
struct Ratio {
    Natural num;
    Natural den;

    bool same_terms(const Ratio& other) const { return num == other.num && den == other.den; }
    std::string to_string() const { return num.to_string() + "/" + den.to_string(); }

    friend bool operator==(const Ratio& x, const Ratio& y)
    {
        return x.num.value() * y.den.value() == x.den.value() * y.num.value();
    }
    friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.num << '/' << r.den; }
};

/// A ratio, its lowest-terms form, and the common measure linking the two.
///
/// Invariants: reduced.num and reduced.den are relatively prime;
/// original.num == reduced.num * num_factor; original.den == reduced.den * den_factor;
/// num_factor == den_factor.
struct ReductionWitness {
    Ratio original;
    Ratio reduced;
    Natural num_factor;
    Natural den_factor;
};

/// Lowest terms of r, together with the factors by which the reduced terms
/// measure the original ones.
inline ReductionWitness reduce(const Ratio& r)
{
    const Natural g = gcd(r.num, r.den);
    Ratio lowest{g.measure_count(r.num), g.measure_count(r.den)};
    return ReductionWitness{r, std::move(lowest), g, g};
}

/// Checks every clause of a ReductionWitness against exact arithmetic.
inline bool witness_holds(const ReductionWitness& w)
{
    return are_relatively_prime(w.reduced.num, w.reduced.den)
        && w.reduced.num * w.num_factor == w.original.num
        && w.reduced.den * w.den_factor == w.original.den
        && w.num_factor == w.den_factor;
}

// ---------------------------------------------------------------------------
// Roots (no floating point anywhere)
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t pow_u64(std::uint64_t x, unsigned e)
{
    std::uint64_t p = x;
    for (unsigned i = 1; i < e; ++i) {
        p *= x;
    }
    return p;
}

// Integer Newton iteration from an estimate at or above the true root; the
// iterates decrease monotonically to floor(n^(1/e)).
inline std::uint64_t floor_root_u64(std::uint64_t n, unsigned e)
{
    if (n < 2) {
        return n;
    }
    const unsigned bits = static_cast<unsigned>(std::bit_width(n));
    std::uint64_t x = std::uint64_t{1} << ((bits + e - 1) / e);
    for (;;) {
        const std::uint64_t y = ((e - 1) * x + n / pow_u64(x, e - 1)) / e;
        if (y >= x) {
            return x;
        }
        x = y;
    }
}

inline BigInt floor_root_big(const BigInt& n, unsigned e)
{
    if (n < 2) {
        return n;
    }
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    BigInt x = BigInt(1) << ((bits + e - 1) / e);
    for (;;) {
        BigInt xp = x;
        for (unsigned i = 2; i < e; ++i) {
            xp *= x;
        }
        BigInt y = ((e - 1) * x + n / xp) / e;
        if (y >= x) {
            return x;
        }
        x = std::move(y);
    }
}

} // namespace detail

/// Largest k with k^e <= n. Always >= 1 because n >= 1.
inline Natural floor_root(const Natural& n, Degree e)
{
    if (n.fits_u64()) {
        return Natural(detail::floor_root_u64(n.to_u64(), exponent(e)));
    }
    return Natural(detail::floor_root_big(n.value(), exponent(e)));
}

/// k such that k^e == n exactly, or empty when n is not a perfect e-th power.
inline std::optional<Natural> integer_root(const Natural& n, Degree e)
{
    Natural k = floor_root(n, e);
    if (power(k, e) == n) {
        return k;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// The two lemmas behind the irrationality proofs
// ---------------------------------------------------------------------------

/// Whether a^e and b^e are prime to one another.
///
/// The answer is cross-checked against the coprimality of a and b themselves
/// (powers of coprime numbers are coprime, and only those); a mismatch throws
/// ContractViolation.
inline bool coprime_power_lemma(const Natural& a, const Natural& b, Degree e)
{
    const bool powers = are_relatively_prime(power(a, e), power(b, e));
    const bool bases = are_relatively_prime(a, b);
    if (powers != bases) {
        throw ContractViolation("coprime powers lemma failed for " + a.to_string() + ", " + b.to_string());
    }
    return powers;
}

/// If d measures b*c and d is prime to c, then d measures b; returns b / d.
///
/// Follows the classical route: from b*c = k*d we get c/d = k/b, and since
/// c/d is in lowest terms its denominator measures b.
inline Natural prestet_divisor(const Natural& b, const Natural& c, const Natural& d)
{
    const Natural bc = b * c;
    if (!d.measures(bc)) {
        throw PreconditionViolation(d.to_string() + " does not measure " + b.to_string() + "*" + c.to_string());
    }
    if (!are_relatively_prime(c, d)) {
        throw PreconditionViolation(c.to_string() + " and " + d.to_string() + " are not relatively prime");
    }
    const Natural k = d.measure_count(bc);
    const ReductionWitness w = reduce(Ratio{k, b});
    // c/d is already lowest terms, so it is the reduced form of k/b.
    if (!w.reduced.same_terms(Ratio{c, d})) {
        throw ContractViolation("lowest terms of " + w.original.to_string() + " are not " + c.to_string() + "/"
                                + d.to_string());
    }
    const Natural quotient = w.den_factor;
    if (d * quotient != b) {
        throw ContractViolation("prestet quotient does not reconstruct " + b.to_string());
    }
    return quotient;
}

} // namespace arithmos
