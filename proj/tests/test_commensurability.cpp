#include "arithmos/commensurability.hpp"
#include "arithmos/oracle.hpp"

#include "reference.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

using namespace arithmos;

TEST(Equivalence1, Examples)
{
    EXPECT_TRUE(equivalence1_check(9, Degree::square));
    EXPECT_FALSE(equivalence1_check(2, Degree::square));
    EXPECT_TRUE(equivalence1_check(1, Degree::cube));
}

TEST(DecideRationality, Examples)
{
    EXPECT_EQ(decide_rationality(Surd{9, Degree::square}), RationalityVerdict(RationalInteger{3}));
    EXPECT_FALSE(is_rational(decide_rationality(Surd{2, Degree::square})));
    EXPECT_FALSE(is_rational(decide_rationality(Surd{3, Degree::cube})));
    EXPECT_EQ(decide_rationality(Surd{27, Degree::cube}), RationalityVerdict(RationalInteger{3}));
}

TEST(DecideRationality, Sqrt17HasNoWitnessUpTo10000)
{
    EXPECT_FALSE(is_rational(decide_rationality(Surd{17, Degree::square})));
    // p^2 = 17 q^2 with q <= 10^4: p is the only candidate floor(sqrt(17) q).
    for (std::uint64_t q = 1; q <= 10000; ++q) {
        const std::uint64_t target = 17 * q * q;
        std::uint64_t p = 4 * q;
        while ((p + 1) * (p + 1) <= target) {
            ++p;
        }
        ASSERT_NE(p * p, target) << q;
    }
}

TEST(DecideRationality, IrrationalVerdictCarriesReplayableTrace)
{
    const auto v = decide_rationality(Surd{2, Degree::square});
    const auto& trace = std::get<Irrational>(v).trace;
    ASSERT_EQ(trace.steps.size(), kTraceLength);
    const auto report = replay(trace);
    EXPECT_TRUE(report.ok) << report.message;
    EXPECT_FALSE(report.rational);
}

TEST(DecideRationality, NoRationalNonIntegerRoots)
{
    // Whenever the oracle finds p/q it reduces to denominator 1.
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        for (Degree e : {Degree::square, Degree::cube}) {
            const auto o = oracle_root_rational(n, e, 200);
            if (o.found) {
                const auto w = reduce(Ratio{o.found->p, o.found->q});
                ASSERT_TRUE(w.reduced.den.is_unit()) << n;
                ASSERT_EQ(decide_rationality(Surd{n, e}), RationalityVerdict(RationalInteger{w.reduced.num}));
            }
        }
    }
}

TEST(Equivalence1, AgreesWithDecisionButNeedsNoTrace)
{
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        for (Degree e : {Degree::square, Degree::cube}) {
            ASSERT_EQ(equivalence1_check(n, e), is_rational(decide_rationality(Surd{n, e}))) << n;
        }
    }
}

TEST(ClassifyLine, Examples)
{
    EXPECT_EQ(classify_line(Surd{4, Degree::square}), LineKind::length);
    EXPECT_EQ(classify_line(Surd{3, Degree::square}), LineKind::power);
    EXPECT_EQ(classify_line(Surd{8, Degree::cube}), LineKind::length);
    EXPECT_EQ(classify_line(Surd{3, Degree::cube}), LineKind::power);
}

TEST(ClassifyLine, LengthIsTheSameInPlaneAndSolid)
{
    // The line of integer length n is sqrt(n^2) in the plane and cbrt(n^3) in space.
    for (std::uint64_t n = 1; n <= 500; ++n) {
        ASSERT_EQ(classify_line(Surd{n * n, Degree::square}), LineKind::length);
        ASSERT_EQ(classify_line(Surd{n * n * n, Degree::cube}), LineKind::length);
    }
}

TEST(SurdRatio, Examples)
{
    EXPECT_EQ(surd_ratio_commensurable(8, 2), CommensurabilityVerdict(Commensurable{{2, 1}}));
    EXPECT_EQ(surd_ratio_commensurable(9, 4), CommensurabilityVerdict(Commensurable{{3, 2}}));
    EXPECT_EQ(surd_ratio_commensurable(2, 3), CommensurabilityVerdict(Incommensurable{{2, 3}}));
    for (std::uint64_t n = 1; n <= 100; ++n) {
        EXPECT_EQ(surd_ratio_commensurable(n, n), CommensurabilityVerdict(Commensurable{{1, 1}}));
    }
}

TEST(SurdRatio, ExampleWitnessesFromExhaustiveSearch)
{
    // 9 q^2 = 4 p^2 over p, q <= 100: first (q, p) is (2, 3).
    std::optional<std::pair<int, int>> first;
    for (int q = 1; q <= 100 && !first; ++q) {
        for (int p = 1; p <= 100 && !first; ++p) {
            if (9 * q * q == 4 * p * p) {
                first = std::pair{p, q};
            }
        }
    }
    ASSERT_TRUE(first);
    EXPECT_EQ(*first, (std::pair{3, 2}));

    // 2 q^2 = 3 p^2 has no solution with p, q <= 1000.
    for (std::uint64_t q = 1; q <= 1000; ++q) {
        for (std::uint64_t p = 1; p <= 1000; ++p) {
            ASSERT_NE(2 * q * q, 3 * p * p);
        }
    }
}

TEST(SurdRatio, CommensurableVerdictsSatisfyTheIdentity)
{
    for (std::uint64_t a = 1; a <= 150; ++a) {
        for (std::uint64_t b = 1; b <= 150; ++b) {
            const auto v = surd_ratio_commensurable(a, b);
            if (const auto* c = std::get_if<Commensurable>(&v)) {
                ASSERT_EQ(Natural(a) * c->ratio.den * c->ratio.den, Natural(b) * c->ratio.num * c->ratio.num);
                ASSERT_TRUE(are_relatively_prime(c->ratio.num, c->ratio.den));
            } else {
                const auto& r = std::get<Incommensurable>(v).reduced;
                ASSERT_EQ(r, (Ratio{a, b}));
                ASSERT_TRUE(!reference::scan_root(r.num.to_u64(), 2) || !reference::scan_root(r.den.to_u64(), 2));
            }
        }
    }
}

TEST(PartitionAudit, Examples)
{
    auto r = partition_audit(8, 2);
    EXPECT_EQ(r.kind_a, LineKind::power);
    EXPECT_EQ(r.kind_b, LineKind::power);
    EXPECT_EQ(r.relation, CommensurabilityVerdict(Commensurable{{2, 1}}));
    EXPECT_TRUE(r.gap);

    r = partition_audit(4, 9);
    EXPECT_EQ(r.kind_a, LineKind::length);
    EXPECT_EQ(r.kind_b, LineKind::length);
    EXPECT_TRUE(is_commensurable(r.relation));
    EXPECT_FALSE(r.gap);

    r = partition_audit(2, 3);
    EXPECT_EQ(r.kind_a, LineKind::power);
    EXPECT_EQ(r.kind_b, LineKind::power);
    EXPECT_FALSE(is_commensurable(r.relation));
    EXPECT_FALSE(r.gap);
}

TEST(PartitionAudit, MixedKindsAreNeverCommensurable)
{
    for (std::uint64_t a = 1; a <= 80; ++a) {
        for (std::uint64_t b = 1; b <= 80; ++b) {
            const auto r = partition_audit(a, b);
            if (r.kind_a != r.kind_b) {
                ASSERT_FALSE(is_commensurable(r.relation)) << a << "," << b;
            }
            if (r.kind_a == LineKind::length && r.kind_b == LineKind::length) {
                ASSERT_TRUE(is_commensurable(r.relation));
            }
            ASSERT_EQ(r.gap, r.kind_a == LineKind::power && r.kind_b == LineKind::power && is_commensurable(r.relation));
        }
    }
}

TEST(DecideRationality, ConcurrentCallsMatchSerialResults)
{
    constexpr std::uint64_t kMax = 2000;
    std::vector<char> serial(kMax + 1);
    for (std::uint64_t n = 1; n <= kMax; ++n) {
        serial[n] = is_rational(decide_rationality(Surd{n, Degree::cube}));
    }
    std::vector<char> parallel(kMax + 1);
    std::vector<std::thread> workers;
    for (std::uint64_t w = 0; w < 4; ++w) {
        workers.emplace_back([&parallel, w] {
            for (std::uint64_t n = 1 + w; n <= kMax; n += 4) {
                parallel[n] = is_rational(decide_rationality(Surd{n, Degree::cube}));
            }
        });
    }
    for (auto& t : workers) {
        t.join();
    }
    EXPECT_EQ(parallel, serial);
}
