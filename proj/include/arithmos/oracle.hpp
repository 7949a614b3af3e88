#pragma once

// Brute-force witness searches used to validate the decision procedures.
//
// These share nothing with the decision code beyond integer_root: no
// reduction, no coprimality, no proof traces. Agreement between the two is
// therefore evidence rather than a tautology. An empty result is only
// evidence up to its search bound, which is always reported.

#include "euclid.hpp"

#include <optional>
#include <utility>

namespace arithmos {

struct OracleWitness {
    Natural p;
    Natural q;
    friend bool operator==(const OracleWitness&, const OracleWitness&) = default;
};

struct OracleResult {
    std::optional<OracleWitness> found;
    Natural search_bound;
};

inline constexpr unsigned kDefaultRootBound = 1000;
inline constexpr unsigned kDefaultRatioBound = 1000;

/// Looks for p/q with p^e == n * q^e, scanning q = 1..q_bound in order and
/// returning the first hit.
inline OracleResult oracle_root_rational(const Natural& n, Degree e, const Natural& q_bound)
{
    const unsigned k = exponent(e);
    for (BigInt q = 1; q <= q_bound.value(); ++q) {
        BigInt target = n.value();
        for (unsigned i = 0; i < k; ++i) {
            target *= q;
        }
        if (auto p = integer_root(Natural(target), e)) {
            BigInt check = p->value();
            for (unsigned i = 1; i < k; ++i) {
                check *= p->value();
            }
            if (check != target) {
                throw ContractViolation("oracle witness fails p^e == n*q^e for n = " + n.to_string());
            }
            return OracleResult{OracleWitness{*p, Natural(q)}, q_bound};
        }
    }
    return OracleResult{std::nullopt, q_bound};
}

/// Looks for p, q <= bound with a * q^2 == b * p^2, in lexicographic (q, p)
/// order. For each q the only candidate p is the square root of a*q^2/b.
inline OracleResult oracle_surd_ratio(const Natural& a, const Natural& b, const Natural& bound)
{
    for (BigInt q = 1; q <= bound.value(); ++q) {
        const BigInt lhs = a.value() * q * q;
        if (lhs % b.value() != 0) {
            continue;
        }
        const auto p = integer_root(Natural(BigInt(lhs / b.value())), Degree::square);
        if (!p || p->value() > bound.value()) {
            continue;
        }
        if (lhs != b.value() * p->value() * p->value()) {
            throw ContractViolation("oracle witness fails a*q^2 == b*p^2 for " + a.to_string() + ", "
                                    + b.to_string());
        }
        return OracleResult{OracleWitness{*p, Natural(q)}, bound};
    }
    return OracleResult{std::nullopt, bound};
}

} // namespace arithmos
