#pragma once

// Proof traces for "the e-th root of n is rational only if n is a perfect
// e-th power".
//
// A trace is the six-step derivation
//
//   1. AssumeRational           root(n) = t/q
//   2. ReduceToLowestTerms      t/q = r/s, r and s prime to one another
//   3. SquareBothSides          n/1 = r^e/s^e
//   4. InvokeCoprimePowers      r^e and s^e prime to one another
//   5. ConcludeUnitDenominator  n/1 is in lowest terms with denominator 1,
//                               so s^e = 1, s = 1 and n = r^e
//   6. PerfectPowerTest         k^e <= n < (k+1)^e decides whether n = r^e
//                               is possible
//
// instantiated at a concrete radicand. Steps 1, 2 and 4 speak about the
// hypothetical t/q and r/s; every number that does appear is recomputed by
// replay() from the steps before it using only the Book VII operations.

#include "euclid.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace arithmos {

/// The side of a square (degree 2) or cube (degree 3) of area/volume `radicand`.
struct Surd {
    Natural radicand;
    Degree degree = Degree::square;
    friend bool operator==(const Surd&, const Surd&) = default;
};

inline std::string surd_text(const Surd& s)
{
    return std::string(s.degree == Degree::square ? "sqrt(" : "cbrt(") + s.radicand.to_string() + ")";
}

namespace step {

struct AssumeRational {
    Natural radicand;
    Degree degree;
    friend bool operator==(const AssumeRational&, const AssumeRational&) = default;
};

struct ReduceToLowestTerms {
    friend bool operator==(const ReduceToLowestTerms&, const ReduceToLowestTerms&) = default;
};

/// lhs is the radicand as the ratio n/1.
struct SquareBothSides {
    Ratio lhs;
    Degree degree;
    friend bool operator==(const SquareBothSides& a, const SquareBothSides& b)
    {
        return a.lhs.same_terms(b.lhs) && a.degree == b.degree;
    }
};

struct InvokeCoprimePowers {
    Degree degree;
    friend bool operator==(const InvokeCoprimePowers&, const InvokeCoprimePowers&) = default;
};

/// lowest: the reduction of n/1; its denominator is what s^e must equal.
struct ConcludeUnitDenominator {
    ReductionWitness lowest;
    Natural s;
    friend bool operator==(const ConcludeUnitDenominator& a, const ConcludeUnitDenominator& b)
    {
        return a.lowest.original.same_terms(b.lowest.original) && a.lowest.reduced.same_terms(b.lowest.reduced)
            && a.lowest.num_factor == b.lowest.num_factor && a.lowest.den_factor == b.lowest.den_factor
            && a.s == b.s;
    }
};

/// floor_root^e = lower <= radicand < upper = (floor_root + 1)^e.
struct PerfectPowerTest {
    Natural radicand;
    Degree degree;
    Natural floor_root;
    Natural lower;
    Natural upper;
    bool perfect;
    friend bool operator==(const PerfectPowerTest&, const PerfectPowerTest&) = default;
};

} // namespace step

using TraceStep = std::variant<step::AssumeRational, step::ReduceToLowestTerms, step::SquareBothSides,
                               step::InvokeCoprimePowers, step::ConcludeUnitDenominator, step::PerfectPowerTest>;

inline constexpr std::size_t kTraceLength = std::variant_size_v<TraceStep>;

inline std::string_view step_name(const TraceStep& s)
{
    static constexpr std::string_view names[] = {"AssumeRational",      "ReduceToLowestTerms",
                                                 "SquareBothSides",     "InvokeCoprimePowers",
                                                 "ConcludeUnitDenominator", "PerfectPowerTest"};
    return names[s.index()];
}

struct ProofTrace {
    Surd surd;
    std::vector<TraceStep> steps;

    /// Outcome recorded in the final step; false for an ill-formed trace.
    bool concludes_rational() const
    {
        if (steps.empty()) {
            return false;
        }
        const auto* last = std::get_if<step::PerfectPowerTest>(&steps.back());
        return last != nullptr && last->perfect;
    }

    friend bool operator==(const ProofTrace&, const ProofTrace&) = default;
};

/// Builds the trace for `s`. The final step records whether the radicand is a
/// perfect power; when it is not, the trace ends in a contradiction.
inline ProofTrace build_trace(const Surd& s)
{
    const Natural& n = s.radicand;
    const Degree e = s.degree;
    const Ratio lhs{n, Natural(1)};
    const Natural k = floor_root(n, e);
    const Natural lower = power(k, e);

    ProofTrace trace{s, {}};
    trace.steps.reserve(kTraceLength);
    trace.steps.emplace_back(step::AssumeRational{n, e});
    trace.steps.emplace_back(step::ReduceToLowestTerms{});
    trace.steps.emplace_back(step::SquareBothSides{lhs, e});
    trace.steps.emplace_back(step::InvokeCoprimePowers{e});
    trace.steps.emplace_back(step::ConcludeUnitDenominator{reduce(lhs), Natural(1)});
    trace.steps.emplace_back(step::PerfectPowerTest{n, e, k, lower, power(k + Natural(1), e), lower == n});
    return trace;
}

// ---------------------------------------------------------------------------
// Replay
// ---------------------------------------------------------------------------

struct ReplayReport {
    bool ok = false;
    std::size_t failed_step = 0; ///< 1-based; 0 when ok or when the trace shape is wrong
    std::string message;
    bool rational = false;
};

namespace detail {

inline ReplayReport replay_failure(std::size_t index, std::string msg)
{
    return ReplayReport{false, index, std::move(msg), false};
}

/// k^e by counted additions only.
inline Natural power_by_addition(const Natural& k, Degree e)
{
    Natural p = k;
    for (unsigned i = 1; i < exponent(e); ++i) {
        p = mul_repeated(k, p);
    }
    return p;
}

} // namespace detail

/// Re-executes each step of `trace` from the ones before it and checks that it
/// reaches the conclusion recorded in its final step.
inline ReplayReport replay(const ProofTrace& trace)
{
    using detail::replay_failure;
    if (trace.steps.size() != kTraceLength) {
        return replay_failure(0, "expected " + std::to_string(kTraceLength) + " steps, found "
                                     + std::to_string(trace.steps.size()));
    }
    for (std::size_t i = 0; i < kTraceLength; ++i) {
        if (trace.steps[i].index() != i) {
            return replay_failure(i + 1, "step " + std::to_string(i + 1) + " is " + std::string(step_name(trace.steps[i]))
                                             + ", out of order");
        }
    }

    const auto& assume = std::get<step::AssumeRational>(trace.steps[0]);
    const auto& squared = std::get<step::SquareBothSides>(trace.steps[2]);
    const auto& coprime = std::get<step::InvokeCoprimePowers>(trace.steps[3]);
    const auto& unit = std::get<step::ConcludeUnitDenominator>(trace.steps[4]);
    const auto& test = std::get<step::PerfectPowerTest>(trace.steps[5]);

    const Natural& n = assume.radicand;
    const Degree e = assume.degree;
    if (!(trace.surd == Surd{n, e})) {
        return replay_failure(1, "hypothesis does not concern " + surd_text(trace.surd));
    }

    // 2: the fundamental result applied to the radicand ratio must yield a witness.
    const Ratio lhs{n, Natural(1)};
    if (!witness_holds(reduce(lhs))) {
        return replay_failure(2, "reduction of " + lhs.to_string() + " has no valid witness");
    }

    if (!squared.lhs.same_terms(lhs) || squared.degree != e) {
        return replay_failure(3, "raised equation does not start from " + lhs.to_string());
    }

    if (coprime.degree != e) {
        return replay_failure(4, "coprime powers invoked at the wrong degree");
    }
    if (!coprime_power_lemma(squared.lhs.num, squared.lhs.den, e)) {
        return replay_failure(4, "terms of " + squared.lhs.to_string() + " are not coprime");
    }

    const ReductionWitness recomputed = reduce(squared.lhs);
    if (!unit.lowest.original.same_terms(recomputed.original) || !unit.lowest.reduced.same_terms(recomputed.reduced)
        || unit.lowest.num_factor != recomputed.num_factor || unit.lowest.den_factor != recomputed.den_factor) {
        return replay_failure(5, "recorded lowest terms differ from reduce(" + squared.lhs.to_string() + ")");
    }
    if (!witness_holds(unit.lowest)) {
        return replay_failure(5, "reduction witness does not hold");
    }
    // s^e equals the lowest-terms denominator; only s = 1 has s^e = 1.
    const auto s = integer_root(unit.lowest.reduced.den, e);
    if (!s || *s != unit.s || !unit.s.is_unit()) {
        return replay_failure(5, "denominator power does not force s = 1");
    }

    if (test.radicand != n || test.degree != e) {
        return replay_failure(6, "perfect power test is about a different number");
    }
    if (test.floor_root != floor_root(n, e)) {
        return replay_failure(6, "recorded floor root is wrong");
    }
    const Natural lower = detail::power_by_addition(test.floor_root, e);
    const Natural upper = detail::power_by_addition(test.floor_root + Natural(1), e);
    if (lower != test.lower || upper != test.upper) {
        return replay_failure(6, "recorded bracket does not match the floor root");
    }
    if (!(lower <= n && n < upper)) {
        return replay_failure(6, "radicand is not bracketed by consecutive powers");
    }
    const bool perfect = lower == n;
    if (perfect != test.perfect) {
        return replay_failure(6, "recorded outcome disagrees with the bracket");
    }
    if (perfect != integer_root(n, e).has_value()) {
        return replay_failure(6, "bracket disagrees with integer_root");
    }

    ReplayReport ok;
    ok.ok = true;
    ok.rational = perfect;
    ok.message = perfect ? surd_text(trace.surd) + " = " + test.floor_root.to_string()
                         : "contradiction: " + surd_text(trace.surd) + " is irrational";
    return ok;
}

// ---------------------------------------------------------------------------
// Text form: one step per line, "<index> <StepName> key=value ... | claim"
// ---------------------------------------------------------------------------

namespace detail {

inline std::string power_text(std::string_view base, Degree e)
{
    return std::string(base) + "^" + std::to_string(exponent(e));
}

struct StepText {
    std::string fields;
    std::string claim;
};

inline StepText describe(const TraceStep& s, const Surd& surd)
{
    const std::string root = surd_text(surd);
    return std::visit(
        [&](const auto& v) -> StepText {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, step::AssumeRational>) {
                return {"radicand=" + v.radicand.to_string() + " degree=" + std::to_string(exponent(v.degree)),
                        root + " = t/q for some naturals t, q"};
            } else if constexpr (std::is_same_v<T, step::ReduceToLowestTerms>) {
                return {"", "t/q = r/s with r, s prime to one another"};
            } else if constexpr (std::is_same_v<T, step::SquareBothSides>) {
                return {"lhs=" + v.lhs.to_string() + " degree=" + std::to_string(exponent(v.degree)),
                        v.lhs.to_string() + " = " + power_text("r", v.degree) + "/" + power_text("s", v.degree)};
            } else if constexpr (std::is_same_v<T, step::InvokeCoprimePowers>) {
                return {"degree=" + std::to_string(exponent(v.degree)),
                        power_text("r", v.degree) + " and " + power_text("s", v.degree) + " are prime to one another"};
            } else if constexpr (std::is_same_v<T, step::ConcludeUnitDenominator>) {
                const Degree e = surd.degree;
                return {"lowest=" + v.lowest.reduced.to_string() + " factor=" + v.lowest.num_factor.to_string()
                            + " s=" + v.s.to_string(),
                        power_text("s", e) + " measures " + v.lowest.reduced.den.to_string() + ", so s = "
                            + v.s.to_string() + " and " + surd.radicand.to_string() + " = " + power_text("r", e)};
            } else {
                const std::string k = v.floor_root.to_string();
                const std::string k1 = (v.floor_root + Natural(1)).to_string();
                std::string fields = "radicand=" + v.radicand.to_string() + " degree="
                                   + std::to_string(exponent(v.degree)) + " floor_root=" + k + " lower="
                                   + v.lower.to_string() + " upper=" + v.upper.to_string()
                                   + " outcome=" + (v.perfect ? "perfect" : "not-perfect");
                std::string claim = v.perfect
                                      ? power_text(k, v.degree) + " = " + v.radicand.to_string() + ", so " + root
                                            + " = " + k
                                      : power_text(k, v.degree) + " < " + v.radicand.to_string() + " < "
                                            + power_text(k1, v.degree) + ", contradiction: " + root
                                            + " is irrational";
                return {std::move(fields), std::move(claim)};
            }
        },
        s);
}

} // namespace detail

inline std::string to_text(const ProofTrace& trace)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto d = detail::describe(trace.steps[i], trace.surd);
        os << (i + 1) << ' ' << step_name(trace.steps[i]);
        if (!d.fields.empty()) {
            os << ' ' << d.fields;
        }
        os << " | " << d.claim << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// JSON form. Naturals are decimal strings so that any size survives.
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json ratio_json(const Ratio& r)
{
    return {{"num", r.num.to_string()}, {"den", r.den.to_string()}};
}

inline nlohmann::ordered_json to_json(const ProofTrace& trace)
{
    using nlohmann::ordered_json;
    ordered_json steps = ordered_json::array();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        ordered_json j;
        j["index"] = i + 1;
        j["step"] = step_name(trace.steps[i]);
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, step::AssumeRational>) {
                    j["radicand"] = v.radicand.to_string();
                    j["degree"] = exponent(v.degree);
                } else if constexpr (std::is_same_v<T, step::SquareBothSides>) {
                    j["lhs"] = ratio_json(v.lhs);
                    j["degree"] = exponent(v.degree);
                } else if constexpr (std::is_same_v<T, step::InvokeCoprimePowers>) {
                    j["degree"] = exponent(v.degree);
                } else if constexpr (std::is_same_v<T, step::ConcludeUnitDenominator>) {
                    j["original"] = ratio_json(v.lowest.original);
                    j["reduced"] = ratio_json(v.lowest.reduced);
                    j["factor"] = v.lowest.num_factor.to_string();
                    j["s"] = v.s.to_string();
                } else if constexpr (std::is_same_v<T, step::PerfectPowerTest>) {
                    j["radicand"] = v.radicand.to_string();
                    j["degree"] = exponent(v.degree);
                    j["floor_root"] = v.floor_root.to_string();
                    j["lower"] = v.lower.to_string();
                    j["upper"] = v.upper.to_string();
                    j["outcome"] = v.perfect ? "perfect" : "not-perfect";
                }
            },
            trace.steps[i]);
        j["claim"] = detail::describe(trace.steps[i], trace.surd).claim;
        steps.push_back(std::move(j));
    }
    return {{"radicand", trace.surd.radicand.to_string()},
            {"degree", exponent(trace.surd.degree)},
            {"verdict", trace.concludes_rational() ? "rational-integer" : "irrational"},
            {"steps", std::move(steps)}};
}

namespace detail {

inline Natural natural_field(const nlohmann::ordered_json& j, const char* key)
{
    return Natural::parse(j.at(key).get<std::string>());
}

inline Degree degree_field(const nlohmann::ordered_json& j)
{
    const auto e = degree_from(j.at("degree").get<long long>());
    if (!e) {
        throw FormatError("degree must be 2 or 3");
    }
    return *e;
}

inline Ratio ratio_field(const nlohmann::ordered_json& j, const char* key)
{
    const auto& r = j.at(key);
    return Ratio{natural_field(r, "num"), natural_field(r, "den")};
}

} // namespace detail

/// Inverse of to_json(). Claims are derived data and are not read back.
/// Throws nlohmann::json::exception, FormatError or NotANatural on malformed input.
inline ProofTrace trace_from_json(const nlohmann::ordered_json& j)
{
    using namespace detail;
    ProofTrace trace{Surd{natural_field(j, "radicand"), degree_field(j)}, {}};
    for (const auto& s : j.at("steps")) {
        const auto name = s.at("step").get<std::string>();
        if (name == "AssumeRational") {
            trace.steps.emplace_back(step::AssumeRational{natural_field(s, "radicand"), degree_field(s)});
        } else if (name == "ReduceToLowestTerms") {
            trace.steps.emplace_back(step::ReduceToLowestTerms{});
        } else if (name == "SquareBothSides") {
            trace.steps.emplace_back(step::SquareBothSides{ratio_field(s, "lhs"), degree_field(s)});
        } else if (name == "InvokeCoprimePowers") {
            trace.steps.emplace_back(step::InvokeCoprimePowers{degree_field(s)});
        } else if (name == "ConcludeUnitDenominator") {
            const Natural factor = natural_field(s, "factor");
            trace.steps.emplace_back(step::ConcludeUnitDenominator{
                ReductionWitness{ratio_field(s, "original"), ratio_field(s, "reduced"), factor, factor},
                natural_field(s, "s")});
        } else if (name == "PerfectPowerTest") {
            const auto outcome = s.at("outcome").get<std::string>();
            if (outcome != "perfect" && outcome != "not-perfect") {
                throw FormatError("unknown outcome '" + outcome + "'");
            }
            trace.steps.emplace_back(step::PerfectPowerTest{natural_field(s, "radicand"), degree_field(s),
                                                            natural_field(s, "floor_root"), natural_field(s, "lower"),
                                                            natural_field(s, "upper"), outcome == "perfect"});
        } else {
            throw FormatError("unknown proof step '" + name + "'");
        }
    }
    return trace;
}

} // namespace arithmos
