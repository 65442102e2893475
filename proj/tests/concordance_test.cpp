#include <cablekit/concordance.hpp>

#include <gtest/gtest.h>

#include <numeric>

namespace {

using namespace cablekit;

HalfInt H(std::int64_t n) { return HalfInt::from_int(n); }
HalfInt D(std::int64_t doubled) { return HalfInt::from_doubled(doubled); }
NuInterval I(std::int64_t lo, std::int64_t hi) { return {H(lo), H(hi)}; }

KnotRecord record(std::optional<std::int64_t> tau, std::optional<int> g3) {
    KnotRecord k;
    k.name = "k";
    if (tau) k.tau = H(*tau);
    k.genus3 = g3;
    if (tau && g3) k.in_P = *tau == *g3;
    return k;
}

TEST(HalfInt, ExactArithmetic) {
    const HalfInt a = D(7), b = D(-3);
    EXPECT_EQ((a + b).doubled(), 4);
    EXPECT_EQ((a - b).doubled(), 10);
    EXPECT_EQ((3 * a).doubled(), 21);
    EXPECT_TRUE((a + b).is_integer());
    EXPECT_FALSE(a.is_integer());
    EXPECT_EQ((a + b).as_integer(), 2);
    EXPECT_THROW(a.as_integer(), InvariantViolation);
    EXPECT_LT(b, a);
    EXPECT_EQ(a.to_string(), "7/2");
    EXPECT_EQ(D(-4).to_string(), "-2");
    EXPECT_EQ(half_product(3, 5), D(15));
}

TEST(TorusTau, Examples) {
    EXPECT_EQ(torus_tau(3, 2), H(1));
    EXPECT_EQ(torus_tau(1, 9), H(0));
    EXPECT_EQ(torus_tau(4, 5), H(6));
    EXPECT_THROW(torus_tau(2, 4), PreconditionError);
    EXPECT_EQ(torus_tau_signed(3, -2), H(-1));
    EXPECT_EQ(torus_tau_signed(5, 1), H(0));
    EXPECT_EQ(torus_tau_signed(5, -1), H(0));
    EXPECT_EQ(torus_tau_signed(2, -7), H(-3));
}

TEST(TorusTau, OddInN) {
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= 20; ++n)
            if (std::gcd(m, n) == 1) { EXPECT_EQ(torus_tau_signed(m, -n), -torus_tau_signed(m, n)); }
}

TEST(HeddenBounds, Examples) {
    EXPECT_EQ(hedden_bounds(H(1), 2, 3), I(5, 6));
    EXPECT_EQ(hedden_bounds(H(0), 2, 0), I(0, 1));
    EXPECT_EQ(hedden_bounds(H(-1), 3, 0), I(-3, -1));
    EXPECT_THROW(hedden_bounds(H(1), 1, 0), PreconditionError);
    EXPECT_EQ(hedden_bounds(H(1), 1, 0, true), I(1, 1));
}

TEST(HeddenEquality, Examples) {
    EXPECT_EQ(hedden_equality(H(1), 1, 2, 3).value, H(5));
    EXPECT_EQ(hedden_equality(H(-1), 1, 2, 0).value, H(-1));
    EXPECT_FALSE(hedden_equality(H(0), 2, 2, 0).value.has_value());
}

TEST(CorollaryBounds, Examples) {
    EXPECT_EQ(corollary_bounds(H(1), 2, 7), I(5, 6));
    EXPECT_EQ(corollary_bounds(H(0), 3, 1), I(0, 2));
    EXPECT_EQ(corollary_bounds(H(1), 3, -5), I(-3, -1));
    EXPECT_THROW(corollary_bounds(H(1), 2, 4), PreconditionError);
}

TEST(CorollaryEquality, Examples) {
    EXPECT_EQ(corollary_equality(H(1), 1, 2, 7).value, H(5));
    EXPECT_EQ(corollary_equality(H(1), 1, 2, -7).value, H(-2));
    const EqualityValue u = corollary_equality(H(0), 0, 3, 2);
    EXPECT_TRUE(u.ambiguous);
    EXPECT_EQ(u.value, corollary_bounds(H(0), 3, 2).lower);
    EXPECT_THROW(corollary_equality(H(1), 1, 2, 4), PreconditionError);
}

TEST(CorollaryBounds, AgreeWithHeddenOnOverlap) {
    for (int tau = -3; tau <= 3; ++tau)
        for (int m = 2; m <= 6; ++m)
            for (int r = -8; r <= 8; ++r) {
                const NuInterval c = corollary_bounds(H(tau), m, m * r + 1);
                EXPECT_EQ(c, hedden_bounds(H(tau), m, r));
                EXPECT_EQ(c.width(), H(m - 1));
            }
}

TEST(CorollaryEquality, SitsOnEndpoints) {
    for (int g = 0; g <= 3; ++g)
        for (int m = 2; m <= 5; ++m)
            for (int n = -15; n <= 15; ++n) {
                if (std::gcd(m, n) != 1) continue;
                const NuInterval plus = corollary_bounds(H(g), m, n);
                EXPECT_EQ(corollary_equality(H(g), g, m, n).value, plus.lower);
                if (g > 0) {
                    const NuInterval minus = corollary_bounds(H(-g), m, n);
                    EXPECT_EQ(corollary_equality(H(-g), g, m, n).value, minus.upper);
                    EXPECT_FALSE(corollary_equality(H(g - 1), g, m, n).value.has_value());
                }
            }
}

TEST(HFunction, UnknotSliceExample) {
    NuTable nu;
    for (int n : {-4, -2, -1, 1, 2, 4}) nu.emplace(n, torus_tau_signed(3, n));
    const NuTable h = h_function(nu, 3);
    for (const auto& [n, v] : h) EXPECT_EQ(v, n < 0 ? H(1) : H(-1)) << n;
    EXPECT_EQ(h.at(1) - h.at(-1), H(-2));
    EXPECT_TRUE(check_h_monotone(h, 3).ok);
}

TEST(HFunction, Arithmetic) {
    NuTable nu{{1, D(3)}};
    EXPECT_EQ(h_function(nu, 2).at(1), D(3) - D(1));
    NuTable bad{{3, H(0)}};
    EXPECT_THROW(h_function(bad, 3), PreconditionError);
}

TEST(CheckHMonotone, ConstructedViolations) {
    const auto up = check_h_monotone({{1, H(0)}, {3, H(1)}}, 2);
    EXPECT_FALSE(up.ok);
    EXPECT_EQ(up.violation, std::make_pair(std::int64_t{3}, std::int64_t{1}));
    const auto drop = check_h_monotone({{1, H(0)}, {3, H(-2)}}, 2);
    EXPECT_FALSE(drop.ok);
    EXPECT_EQ(drop.violation, std::make_pair(std::int64_t{3}, std::int64_t{1}));
    EXPECT_TRUE(check_h_monotone({{1, H(0)}, {3, H(-1)}}, 2).ok);
}

TEST(CheckHMonotone, EqualityFamiliesPass) {
    for (int m = 2; m <= 6; ++m)
        for (int g = 1; g <= 3; ++g)
            for (int sign : {1, -1}) {
                NuTable nu;
                for (int n = -25; n <= 25; ++n)
                    if (std::gcd(m, n) == 1) nu.emplace(n, *corollary_equality(H(sign * g), g, m, n).value);
                EXPECT_TRUE(check_h_monotone(h_function(nu, m), m).ok);
            }
}

TEST(GFunction, TwistedTorusFamily) {
    NuTable nu;
    for (int r = -6; r <= 6; ++r) nu.emplace(r, torus_tau_signed(2, 2 * r + 1));
    const NuTable g = g_function(nu, 2);
    for (const auto& [r, v] : g) EXPECT_EQ(v, r >= 0 ? H(0) : H(1)) << r;
    EXPECT_TRUE(check_g_monotone(g, 2).ok);
}

TEST(GFunction, IntegralityIsEnforced) {
    EXPECT_THROW(g_function({{1, D(1)}}, 2), InvariantViolation);
    for (int m = 1; m <= 6; ++m)
        for (int r = -5; r <= 5; ++r) EXPECT_NO_THROW(g_function({{r, H(0)}}, m));
}

TEST(GFunction, TorusPatternMatchesHReindexed) {
    // beta = torus_braid(m, n0) gives K_{beta_r} = K_{m, n0 + m r}
    const int m = 3, n0 = 2;
    NuTable nu_g, nu_h;
    for (int r = -4; r <= 4; ++r) {
        const HalfInt v = torus_tau_signed(m, n0 + m * r);
        nu_g.emplace(r, v);
        nu_h.emplace(n0 + m * r, v);
    }
    const NuTable g = g_function(nu_g, m), h = h_function(nu_h, m);
    for (int r = -4; r <= 4; ++r) EXPECT_EQ(g.at(r), h.at(n0 + m * r) + half_product(m - 1, n0));
}

TEST(EventualOffset, UnknotIsZero) {
    for (int m = 2; m <= 5; ++m) {
        NuTable nu;
        for (int n = -20; n <= 20; ++n)
            if (std::gcd(m, n) == 1) nu.emplace(n, torus_tau_signed(m, n));
        const NuTable h = h_function(nu, m);
        EXPECT_EQ(eventual_constant_offset(h, m).c, H(0));
        EXPECT_EQ(eventual_constant_offset_below(h, m).c, H(0));
    }
}

TEST(EventualOffset, TrefoilIsTwo) {
    NuTable nu;
    for (int n = -15; n <= 15; n += 2) nu.emplace(n, *corollary_equality(H(1), 1, 2, n).value);
    const NuTable h = h_function(nu, 2);
    const EventualOffset above = eventual_constant_offset(h, 2);
    EXPECT_EQ(above.c, H(2));
    for (const auto& [n, nv] : nu)
        if (n > above.threshold) { EXPECT_EQ(nv - torus_tau_signed(2, n), above.c); }
    const EventualOffset below = eventual_constant_offset_below(h, 2);
    EXPECT_EQ(below.c, H(1));
    for (const auto& [n, nv] : nu)
        if (n < below.threshold) { EXPECT_EQ(nv - torus_tau_signed(2, n), below.c); }
}

TEST(EventualOffset, GuardsAndRange) {
    EXPECT_THROW(eventual_constant_offset({{1, H(0)}, {3, H(1)}}, 2), InvariantViolation);
    EXPECT_THROW(eventual_constant_offset({{1, H(0)}}, 3), PreconditionError);
    EXPECT_THROW(eventual_constant_offset({{1, H(0)}, {2, H(0)}, {4, H(-1)}}, 3), PreconditionError);
}

TEST(ClassP, Propagation) {
    EXPECT_TRUE(class_P_propagate(true, 7));
    EXPECT_FALSE(class_P_propagate(true, -3));
    EXPECT_FALSE(class_P_propagate(false, 7));
}

TEST(CKnot, Examples) {
    EXPECT_EQ(c_knot_obstruction(H(-1), 2, 1).verdict, Verdict::obstructed);
    EXPECT_EQ(c_knot_obstruction(H(-1), 2, 3).verdict, Verdict::consistent);
    EXPECT_EQ(c_knot_obstruction(H(1), 2, 1).verdict, Verdict::consistent);
    EXPECT_EQ(c_knot_obstruction(H(1), 2, -5).verdict, Verdict::consistent);
    EXPECT_EQ(c_knot_obstruction(H(1), 2, -7).verdict, Verdict::obstructed);
    EXPECT_EQ(c_knot_obstruction(H(0), 3, -5).verdict, Verdict::obstructed);
    EXPECT_EQ(c_knot_obstruction(H(0), 3, -1).verdict, Verdict::consistent);
    EXPECT_THROW(c_knot_obstruction(H(0), 2, 4), PreconditionError);
}

TEST(CKnot, ThresholdMatchesRationalFormula) {
    for (int tau = -3; tau <= 3; ++tau)
        for (int m = 2; m <= 6; ++m)
            for (int n = -30; n <= 30; ++n) {
                if (std::gcd(m, n) != 1) continue;
                // n < -2 m tau / (m - 1) - 1, cross-multiplied by m - 1 > 0
                const bool want = static_cast<long long>(n) * (m - 1) < -2LL * m * tau - (m - 1);
                EXPECT_EQ(c_knot_obstruction(H(tau), m, n).verdict == Verdict::obstructed, want);
            }
}

TEST(Obstructions, Examples) {
    const KnotRecord fig8 = record(0, 1);
    for (int m = 2; m <= 4; ++m)
        for (int n = -7; n <= 7; ++n)
            if (std::gcd(m, n) == 1) { EXPECT_EQ(positivity_obstruction(fig8, m, n).verdict, Verdict::obstructed); }
    const KnotRecord tref = record(1, 1);
    EXPECT_EQ(lspace_obstruction(tref, 2, -3).verdict, Verdict::obstructed);
    EXPECT_EQ(complex_curve_obstruction(tref, 2, 7).verdict, Verdict::consistent);
    EXPECT_EQ(lspace_obstruction(tref, 2, 7).verdict, Verdict::consistent);
    EXPECT_EQ(positivity_obstruction(tref, 2, 7).verdict, Verdict::consistent);
}

TEST(Obstructions, MissingFieldsAreInconclusive) {
    const ObstructionResult r = lspace_obstruction(record(std::nullopt, std::nullopt), 2, 3);
    EXPECT_EQ(r.verdict, Verdict::inconclusive);
    EXPECT_EQ(r.missing, (std::vector<std::string>{"tau", "g3"}));
    EXPECT_EQ(positivity_obstruction(record(1, std::nullopt), 2, 3).missing, std::vector<std::string>{"g3"});
    EXPECT_EQ(positivity_obstruction(record(0, 0), 2, 3).verdict, Verdict::inconclusive);
}

TEST(KnotRecord, Violations) {
    KnotRecord k = record(1, 1);
    k.genus4 = 1;
    EXPECT_TRUE(k.violations().empty());
    k.tau = H(2);
    EXPECT_FALSE(k.violations().empty());
    KnotRecord g = record(0, 1);
    g.genus4 = 2;
    EXPECT_EQ(g.violations(), std::vector<std::string>{"g4 <= g3 violated"});
    KnotRecord half = record(std::nullopt, 2);
    half.tau = D(1);
    EXPECT_EQ(half.violations(), std::vector<std::string>{"tau must be an integer"});
}

TEST(KnotTable, ValidRows) {
    const KnotTable t = parse_knot_table(
        "name,braid,strands,tau2,s2,g3,g4\n"
        "trefoil,1 1 1,2,2,2,1,1\n"
        "figure-eight,\"1 -2 1 -2\",3,0,0,1,1\n"
        "mystery,,,,,,\n");
    ASSERT_TRUE(t.ok());
    ASSERT_EQ(t.records.size(), 3u);
    const KnotRecord& tr = t.records[0];
    EXPECT_EQ(tr.tau, H(1));
    EXPECT_EQ(tr.s_half, H(1));
    EXPECT_EQ(tr.genus3, 1);
    EXPECT_EQ(tr.in_P, true);
    ASSERT_TRUE(tr.braid.has_value());
    EXPECT_EQ(tr.braid->to_string(), "1 1 1");
    EXPECT_EQ(t.records[1].in_P, false);
    EXPECT_FALSE(t.records[2].tau.has_value());
    EXPECT_EQ(lspace_obstruction(t.records[2], 2, 3).verdict, Verdict::inconclusive);
}

TEST(KnotTable, RejectsInvalidRows) {
    const KnotTable t = parse_knot_table(
        "name,braid,strands,tau2,s2,g3,g4\n"
        "bad-tau,,,4,,1,1\n"
        "link,1 1,2,,,,\n"
        "short,1\n"
        "text,,,x,,,\n"
        "ok,,,0,0,0,0\n");
    EXPECT_EQ(t.records.size(), 1u);
    ASSERT_EQ(t.errors.size(), 4u);
    EXPECT_EQ(t.errors[0].row, 2u);
    bool tau_g4 = false;
    for (const auto& p : t.errors[0].problems) tau_g4 |= p == "|tau| <= g4 violated";
    EXPECT_TRUE(tau_g4);
    EXPECT_EQ(t.errors[1].row, 3u);
    EXPECT_EQ(t.errors[2].row, 4u);
    EXPECT_EQ(t.errors[3].row, 5u);
}

TEST(KnotTable, HeaderIsChecked) {
    EXPECT_FALSE(parse_knot_table("name,tau\nx,1\n").ok());
    EXPECT_FALSE(parse_knot_table(std::string{}).ok());
}

} // namespace
