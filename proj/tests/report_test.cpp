#include <cablekit/report.hpp>

#include <gtest/gtest.h>

namespace {

using namespace cablekit;

TEST(ParseRational, AcceptsIntegersAndFractions) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational(" -7/12 "), Rational(-7, 12));
    EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
    EXPECT_EQ(parse_rational("123456789012345678901/3"), Rational(BigInt("123456789012345678901"), BigInt(3)));
}

TEST(ParseRational, RejectsMalformedText) {
    EXPECT_THROW(parse_rational("0.5"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("x"), ParseError);
    EXPECT_THROW(parse_rational("1/"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(WitnessJson, RoundTrips) {
    for (const auto& w : {torus_ladder(3, 2, 1), torus_ladder(4, -3, 5), torus_ladder(2, 7, -9)}) {
        const Json j = witness_to_json(w);
        EXPECT_EQ(witness_from_json(j), w);
        EXPECT_EQ(witness_to_json(witness_from_json(j)), j);
        EXPECT_EQ(witness_from_json(Json::parse(j.dump())), w);
    }
}

TEST(WitnessJson, TamperingIsDetected) {
    const Json good = witness_to_json(torus_ladder(3, 2, 1));

    Json bad_count = good;
    bad_count["steps"][0]["components"] = 3;
    EXPECT_THROW(witness_from_json(bad_count), ParseError);

    Json bad_end = good;
    bad_end["end"] = "2 1";
    EXPECT_THROW(witness_from_json(bad_end), ParseError);

    Json bad_op = good;
    bad_op["steps"][0]["op"] = "twist";
    EXPECT_THROW(witness_from_json(bad_op), ParseError);

    Json missing = good;
    missing.erase("start");
    EXPECT_THROW(witness_from_json(missing), ParseError);

    Json wrong_letter = good;
    wrong_letter["steps"][0]["letter"] = 0;
    EXPECT_THROW(witness_from_json(wrong_letter), ParseError);
}

TEST(ReportRecord, KeyOrderAndStatus) {
    ReportRecord rec;
    rec.command = "demo";
    rec.inputs["m"] = 2;
    rec.outputs["x"] = "y";
    rec.certify("always", true);
    const Json j = rec.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs", "outputs", "certifications", "status", "version"}));
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["version"], kVersion);
    rec.certify("never", false, "why not");
    EXPECT_FALSE(rec.ok());
    EXPECT_EQ(rec.to_json()["status"], "fail");
    EXPECT_EQ(rec.to_json()["certifications"][1]["detail"], "why not");
    EXPECT_EQ(rec.dump(), rec.dump());
}

TEST(ReportRecord, AbsorbPrefixesNames) {
    ReportRecord rec;
    rec.absorb({{"a", true, ""}, {"b", true, "d"}}, "suite: ");
    ASSERT_EQ(rec.certifications.size(), 2u);
    EXPECT_EQ(rec.certifications[1].name, "suite: b");
    EXPECT_TRUE(rec.ok());
}

TEST(JsonViews, HalfIntegersAndIntervals) {
    const Json h = to_json(HalfInt::from_doubled(-3));
    EXPECT_EQ(h["value"], "-3/2");
    EXPECT_EQ(h["doubled"], -3);
    const Json iv = to_json(NuInterval{HalfInt::from_int(5), HalfInt::from_int(6)});
    EXPECT_EQ(iv["lower"]["value"], "5");
    EXPECT_EQ(iv["width"]["doubled"], 2);
    const Json p = to_json(LaurentPoly(-1, {1, -1, 1}));
    EXPECT_EQ(p["text"], "t - 1 + t^-1");
    EXPECT_EQ(p["canonical"], "1*t^-1 + -1*t^0 + 1*t^1");
}

TEST(BoundsRow, TrefoilExample) {
    const KnotTable table = parse_knot_table(std::string(knot_table_header()) + "\ntrefoil,1 1 1,2,2,2,1,1\n");
    ASSERT_TRUE(table.errors.empty());
    ASSERT_EQ(table.records.size(), 1u);
    const Json row = bounds_row(table.records[0], 2, 7);
    EXPECT_EQ(row["n"], 7);
    EXPECT_EQ(row["interval"]["lower"]["value"], "5");
    EXPECT_EQ(row["interval"]["upper"]["value"], "6");
    EXPECT_EQ(row["equality"]["value"]["value"], "5");
    for (const char* key : {"c_knot", "complex_curve", "lspace", "positivity"})
        EXPECT_NE(row[key]["verdict"], "obstructed") << key;
}

TEST(BoundsRow, MissingTauIsInconclusive) {
    KnotRecord k;
    k.name = "partial";
    k.genus3 = 1;
    const Json row = bounds_row(k, 2, 5);
    EXPECT_TRUE(row["interval"].is_null());
    EXPECT_EQ(row["c_knot"]["verdict"], "inconclusive");
    EXPECT_EQ(row["c_knot"]["missing"][0], "tau");
}

TEST(Suites, AllPassWithSmallLimit) {
    SuiteOptions opt;
    opt.limit = 6;
    for (const auto& name : suite_names()) {
        const auto cs = run_suite(name, opt);
        EXPECT_FALSE(cs.empty()) << name;
        for (const auto& c : cs) EXPECT_TRUE(c.passed) << name << ": " << c.name << " " << c.detail;
    }
    EXPECT_THROW(run_suite("nope"), PreconditionError);
}

TEST(Suites, SeedChangesRandomCases) {
    SuiteOptions a, b;
    a.limit = b.limit = 5;
    b.seed = 99;
    const auto ca = run_suite("oracle", a), cb = run_suite("oracle", b);
    ASSERT_EQ(ca.size(), cb.size());
    bool differ = false;
    for (std::size_t i = 0; i < ca.size(); ++i) differ = differ || ca[i].name != cb[i].name || ca[i].detail != cb[i].detail;
    EXPECT_TRUE(differ);
}

} // namespace
