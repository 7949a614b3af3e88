#pragma once

// Decision procedures for the rationality of square and cube roots of
// integers, for the commensurability of two square roots, and the audit of
// the length/power partition against commensurability among powers.

#include "classify.hpp"
#include "proof_trace.hpp"

#include <variant>

namespace arithmos {

/// Root is the Natural k with k^degree == radicand.
struct RationalInteger {
    Natural root;
    friend bool operator==(const RationalInteger&, const RationalInteger&) = default;
};

/// Root is not a ratio of integers; the trace derives the contradiction.
struct Irrational {
    ProofTrace trace;
    friend bool operator==(const Irrational&, const Irrational&) = default;
};

/// There is deliberately no "rational but not an integer" alternative.
using RationalityVerdict = std::variant<RationalInteger, Irrational>;

/// "e-th root of n is an integer iff n is a perfect e-th power", checked in
/// both directions with no appeal to coprimality.
inline bool equivalence1_check(const Natural& n, Degree e)
{
    const auto k = integer_root(n, e);
    if (k) {
        if (power(*k, e) != n) {
            throw ContractViolation("integer_root returned a non-root for " + n.to_string());
        }
        return true;
    }
    // No root: n must sit strictly between two consecutive powers.
    const Natural f = floor_root(n, e);
    if (!(power(f, e) < n && n < power(f + Natural(1), e))) {
        throw ContractViolation("no root found but " + n.to_string() + " is not between consecutive powers");
    }
    return false;
}

/// Decides whether the surd is rational. Every decision goes through the
/// proof trace and is confirmed by replaying it.
inline RationalityVerdict decide_rationality(const Surd& s)
{
    ProofTrace trace = build_trace(s);
    const ReplayReport check = replay(trace);
    if (!check.ok) {
        throw ContractViolation("proof trace for " + surd_text(s) + " fails replay at step "
                                + std::to_string(check.failed_step) + ": " + check.message);
    }
    if (check.rational) {
        const auto& test = std::get<step::PerfectPowerTest>(trace.steps.back());
        return RationalInteger{test.floor_root};
    }
    return Irrational{std::move(trace)};
}

inline bool is_rational(const RationalityVerdict& v) { return std::holds_alternative<RationalInteger>(v); }

/// A line commensurable with the unit ("length"), or one only commensurable
/// through the square or cube it produces ("power").
enum class LineKind { length, power };

inline std::string_view line_kind_name(LineKind k) { return k == LineKind::length ? "length" : "power"; }

inline LineKind classify_line(const Surd& s)
{
    // The e-th power of the line is the radicand itself, a Natural; it is
    // always commensurable as area (or volume), whatever the verdict below.
    const LineKind kind = is_rational(decide_rationality(s)) ? LineKind::length : LineKind::power;
    if ((kind == LineKind::length) != integer_root(s.radicand, s.degree).has_value()) {
        throw ContractViolation("line kind of " + surd_text(s) + " disagrees with the perfect power test");
    }
    return kind;
}

// ---------------------------------------------------------------------------
// Commensurability of sqrt(a) and sqrt(b)
// ---------------------------------------------------------------------------

/// sqrt(a) : sqrt(b) == ratio.num : ratio.den, so a * den^2 == b * num^2.
struct Commensurable {
    Ratio ratio;
    friend bool operator==(const Commensurable& x, const Commensurable& y) { return x.ratio.same_terms(y.ratio); }
};

/// a : b in lowest terms; at least one of its terms is not a square.
struct Incommensurable {
    Ratio reduced;
    friend bool operator==(const Incommensurable& x, const Incommensurable& y)
    {
        return x.reduced.same_terms(y.reduced);
    }
};

using CommensurabilityVerdict = std::variant<Commensurable, Incommensurable>;

inline bool is_commensurable(const CommensurabilityVerdict& v) { return std::holds_alternative<Commensurable>(v); }

/// sqrt(a) and sqrt(b) are commensurable in length iff a : b is the ratio of
/// a square number to a square number. Decided on the lowest terms of a : b.
inline CommensurabilityVerdict surd_ratio_commensurable(const Natural& a, const Natural& b)
{
    const ReductionWitness w = reduce(Ratio{a, b});
    const auto p = integer_root(w.reduced.num, Degree::square);
    const auto q = integer_root(w.reduced.den, Degree::square);
    if (!p || !q) {
        return Incommensurable{w.reduced};
    }
    if (a * *q * *q != b * *p * *p) {
        throw ContractViolation("commensurable ratio " + p->to_string() + "/" + q->to_string()
                                + " fails a*q^2 == b*p^2 for " + a.to_string() + ", " + b.to_string());
    }
    return Commensurable{Ratio{*p, *q}};
}

/// Both lines of a pair, their mutual relation, and whether the pair falls
/// through the length/power partition: two powers that are nonetheless
/// commensurable with one another (sqrt(8) and sqrt(2)).
struct AuditReport {
    Natural a;
    Natural b;
    LineKind kind_a;
    LineKind kind_b;
    CommensurabilityVerdict relation;
    bool gap;
};

inline AuditReport partition_audit(const Natural& a, const Natural& b)
{
    const LineKind ka = classify_line(Surd{a, Degree::square});
    const LineKind kb = classify_line(Surd{b, Degree::square});
    CommensurabilityVerdict rel = surd_ratio_commensurable(a, b);
    const bool gap = ka == LineKind::power && kb == LineKind::power && is_commensurable(rel);
    return AuditReport{a, b, ka, kb, std::move(rel), gap};
}

} // namespace arithmos
