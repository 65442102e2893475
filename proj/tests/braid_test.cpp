#include <cablekit/braid.hpp>

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace {

using namespace cablekit;

BraidWord trefoil() { return BraidWord::from_signed(2, {1, 1, 1}); }
BraidWord figure_eight() { return BraidWord::from_signed(3, {1, -2, 1, -2}); }

// Closure component count computed by following strands through the word
// directly, independent of Permutation.
int components_by_tracing(const BraidWord& b) {
    const int m = b.strands();
    std::vector<int> end_of(m);
    for (int start = 0; start < m; ++start) {
        int pos = start;
        for (const Letter& l : b.letters()) {
            if (pos == l.index - 1) pos = l.index;
            else if (pos == l.index) pos = l.index - 1;
        }
        end_of[start] = pos;
    }
    std::vector<bool> seen(m, false);
    int cycles = 0;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = end_of[j]) seen[j] = true;
    }
    return cycles;
}

std::vector<Letter> freely_reduce(const BraidWord& b) {
    std::vector<Letter> out;
    for (const Letter& l : b.letters()) {
        if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

TEST(ParseBraid, TranscribesSignedIntegers) {
    const BraidWord b = parse_braid("1 1 1", 2);
    EXPECT_EQ(b, trefoil());
    const BraidWord c = parse_braid("2 1 2 1", 3);
    ASSERT_EQ(c.length(), 4u);
    EXPECT_EQ(c.letters()[0], (Letter{2, 1}));
    EXPECT_EQ(c.letters()[3], (Letter{1, 1}));
    EXPECT_EQ(parse_braid("  -2\t1 ", 3).to_string(), "-2 1");
    EXPECT_TRUE(parse_braid("", 4).empty());
}

TEST(ParseBraid, RejectsBadTokens) {
    EXPECT_THROW(parse_braid("3", 2), ParseError);
    EXPECT_THROW(parse_braid("0", 3), ParseError);
    EXPECT_THROW(parse_braid("1 x", 3), ParseError);
    EXPECT_THROW(parse_braid("1.5", 3), ParseError);
    try {
        parse_braid("1 -7 2", 3);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.token(), "-7");
    }
}

TEST(ParseBraid, RoundTripsCanonicalText) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 5);
        BraidWord b(m);
        for (int i = 0; i < static_cast<int>(rng() % 12); ++i)
            b.push_back({1 + static_cast<int>(rng() % (m - 1)), rng() % 2 ? 1 : -1});
        EXPECT_EQ(parse_braid(b.to_string(), m), b);
    }
}

TEST(ClosureSummary, Examples) {
    const auto t32 = closure_summary(torus_braid(3, 2));
    EXPECT_EQ(t32.components, 1);
    EXPECT_EQ(t32.exponent_sum, 4);
    const auto t33 = closure_summary(torus_braid(3, 3));
    EXPECT_EQ(t33.components, 3);
    EXPECT_EQ(t33.exponent_sum, 6);
    const auto empty = closure_summary(BraidWord(4));
    EXPECT_EQ(empty.components, 4);
    EXPECT_EQ(empty.exponent_sum, 0);
}

TEST(ClosureSummary, MatchesStrandTracing) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 7);
        BraidWord b(m);
        if (m > 1)
            for (int i = 0; i < static_cast<int>(rng() % 15); ++i)
                b.push_back({1 + static_cast<int>(rng() % (m - 1)), rng() % 2 ? 1 : -1});
        EXPECT_EQ(b.closure().components, components_by_tracing(b)) << b.to_string();
    }
}

TEST(Permutation, CyclesPartitionPoints) {
    const Permutation p = torus_braid(5, 2).permutation();
    const auto cycles = p.cycles();
    std::size_t total = 0;
    for (const auto& c : cycles) total += c.size();
    EXPECT_EQ(total, 5u);
    EXPECT_EQ(static_cast<int>(cycles.size()), p.cycle_count());
}

TEST(TorusBraid, Examples) {
    EXPECT_EQ(torus_braid(2, 3), trefoil());
    const BraidWord t34 = torus_braid(3, 4);
    EXPECT_EQ(t34.exponent_sum(), 8);
    EXPECT_EQ(t34.closure().components, 1);
    EXPECT_TRUE(torus_braid(3, 0).empty());
    EXPECT_EQ(torus_braid(3, 0).closure().components, 3);
}

TEST(TorusBraid, ComponentsEqualGcd) {
    for (int m = 1; m <= 8; ++m)
        for (int q = -16; q <= 16; ++q) {
            const int want = q == 0 ? m : std::gcd(m, q < 0 ? -q : q);
            EXPECT_EQ(torus_braid(m, q).closure().components, want) << m << "," << q;
        }
}

TEST(TorusBraid, NegativePowerIsExactInverse) {
    for (int m = 2; m <= 5; ++m)
        for (int q = 1; q <= 4; ++q) EXPECT_EQ(torus_braid(m, -q), inverse(torus_braid(m, q)));
}

TEST(FullTwists, Examples) {
    const BraidWord s1 = BraidWord::from_signed(2, {1});
    EXPECT_EQ(full_twists(s1, 1), trefoil());
    EXPECT_EQ(full_twists(s1, 3), torus_braid(2, 7));
    EXPECT_EQ(full_twists(figure_eight(), 0), figure_eight());
}

TEST(FullTwists, PureAndExponentShift) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 4);
        BraidWord b(m);
        for (int i = 0; i < 6; ++i) b.push_back({1 + static_cast<int>(rng() % (m - 1)), rng() % 2 ? 1 : -1});
        const int r = static_cast<int>(rng() % 7) - 3;
        const BraidWord t = full_twists(b, r);
        EXPECT_EQ(t.exponent_sum(), b.exponent_sum() + m * (m - 1) * r);
        EXPECT_EQ(t.permutation(), b.permutation());
    }
}

TEST(Mirror, Examples) {
    EXPECT_EQ(mirror(trefoil()), BraidWord::from_signed(2, {-1, -1, -1}));
    EXPECT_TRUE(mirror(BraidWord(3)).empty());
    EXPECT_EQ(mirror(mirror(figure_eight())), figure_eight());
    EXPECT_EQ(mirror(figure_eight()).exponent_sum(), -figure_eight().exponent_sum());
}

TEST(Inverse, IsInvolutionAndReversesWord) {
    const BraidWord b = BraidWord::from_signed(3, {1, 2, -1, 2});
    EXPECT_EQ(inverse(b).to_string(), "-2 1 -2 -1");
    EXPECT_EQ(inverse(inverse(b)), b);
}

TEST(ConnectedSum, Examples) {
    const BraidWord s = connected_sum(trefoil(), mirror(trefoil()));
    EXPECT_EQ(s.strands(), 3);
    EXPECT_EQ(s.to_string(), "1 1 1 -2 -2 -2");
    EXPECT_EQ(s.closure().components, 1);
    EXPECT_EQ(connected_sum(figure_eight(), BraidWord(1)), figure_eight());
    EXPECT_THROW(connected_sum(BraidWord::from_signed(2, {1, 1}), trefoil()), PreconditionError);
}

TEST(MParallel, Examples) {
    EXPECT_EQ(m_parallel(trefoil(), 1), trefoil());
    const BraidWord p = m_parallel(BraidWord::from_signed(2, {1}), 2);
    EXPECT_EQ(p.strands(), 4);
    EXPECT_EQ(p.length(), 4u);
    for (const Letter& l : p.letters()) EXPECT_EQ(l.sign, 1);
    EXPECT_EQ(m_parallel(trefoil(), 2).exponent_sum(), 12);
}

TEST(MParallel, ParallelOfKnotHasMComponents) {
    for (int m = 1; m <= 4; ++m) {
        EXPECT_EQ(m_parallel(trefoil(), m).closure().components, m);
        EXPECT_EQ(m_parallel(figure_eight(), m).closure().components, m);
        EXPECT_EQ(m_parallel(figure_eight(), m).exponent_sum(), 0);
    }
}

TEST(BlockCrossing, NegativeIsExactInverse) {
    for (int m = 1; m <= 4; ++m) {
        BraidWord pos(2 * m + 1, block_crossing(2, m, 1));
        BraidWord neg(2 * m + 1, block_crossing(2, m, -1));
        EXPECT_EQ(neg, inverse(pos));
        EXPECT_EQ(pos.length(), static_cast<std::size_t>(m * m));
    }
}

TEST(CableBraid, Examples) {
    EXPECT_EQ(cable_braid(BraidWord(1), 3, 2), torus_braid(3, 2));
    BraidWord want = m_parallel(trefoil(), 2);
    want.push_back({1, 1});
    const BraidWord c = cable_braid(trefoil(), 2, 7);
    EXPECT_EQ(c, want);
    EXPECT_EQ(c.length(), 13u);
    EXPECT_EQ(c.closure().components, 1);
    EXPECT_EQ(cable_braid(trefoil(), 2, 6).closure().components, 2);
    EXPECT_THROW(cable_braid(BraidWord::from_signed(2, {1, 1}), 2, 3), PreconditionError);
}

TEST(CableBraid, UnknotCompanionIsTorusBraid) {
    for (int m = 1; m <= 5; ++m)
        for (int n = -7; n <= 7; ++n) EXPECT_EQ(cable_braid(BraidWord(1), m, n), torus_braid(m, n));
}

TEST(CableBraid, ComponentsEqualGcd) {
    for (const BraidWord& k : {trefoil(), figure_eight(), BraidWord::from_signed(3, {1, 1, 1, 2, -1, 2})})
        for (int m = 1; m <= 4; ++m)
            for (int n = -9; n <= 9; ++n) {
                const int g = n == 0 ? m : std::gcd(m, n < 0 ? -n : n);
                EXPECT_EQ(cable_braid(k, m, n).closure().components, g) << k.to_string() << " " << m << "," << n;
            }
}

TEST(SatelliteBraid, SpecializesToCable) {
    for (int n : {-5, -1, 3, 7})
        EXPECT_EQ(freely_reduce(satellite_braid(trefoil(), torus_braid(2, n))), freely_reduce(cable_braid(trefoil(), 2, n)));
    const BraidWord beta = BraidWord::from_signed(3, {1, -2, 1, -2});
    EXPECT_EQ(satellite_braid(BraidWord(1), beta), beta);
    EXPECT_THROW(satellite_braid(trefoil(), BraidWord::from_signed(2, {1, 1})), PreconditionError);
}

TEST(Stabilize, AppendsCancellingPairs) {
    const BraidWord b = BraidWord::from_signed(3, {2, 2, 2});
    const BraidWord s = stabilize_missing_generators(b);
    EXPECT_EQ(s.to_string(), "2 2 2 1 -1");
    EXPECT_EQ(s.permutation(), b.permutation());
    EXPECT_EQ(stabilize_missing_generators(trefoil()), trefoil());
}

TEST(BraidWord, RejectsOutOfRangeLetters) {
    BraidWord b(3);
    EXPECT_THROW(b.push_back({3, 1}), PreconditionError);
    EXPECT_THROW(b.push_back({1, 0}), PreconditionError);
    EXPECT_THROW(BraidWord(0), PreconditionError);
    EXPECT_THROW(b.insert(1, {1, 1}), PreconditionError);
}

} // namespace
