#ifndef CABLEKIT_REPORT_HPP
#define CABLEKIT_REPORT_HPP

// Machine-readable report records and the verification suites behind the
// command-line tool. Records are ordered JSON objects with a fixed key order
// so identical invocations produce byte-identical output.

#include <cablekit/braid.hpp>
#include <cablekit/cobordism.hpp>
#include <cablekit/concordance.hpp>
#include <cablekit/error.hpp>
#include <cablekit/invariants.hpp>
#include <cablekit/laurent.hpp>

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace cablekit {

inline constexpr const char* kVersion = "cablekit 0.1.0";

using Json = nlohmann::ordered_json;

/// Exact rational from "p" or "p/q"; decimals are rejected.
inline Rational parse_rational(std::string_view text) {
    text = detail::trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_bigint(text));
    const BigInt num = detail::parse_bigint(detail::trim(text.substr(0, slash)));
    const BigInt den = detail::parse_bigint(detail::trim(text.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator", std::string(text));
    return Rational(num, den);
}

struct ReportRecord {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<Certification> certifications;
    std::string version = kVersion;

    bool ok() const { return all_passed(certifications); }

    void certify(std::string name, bool passed, std::string detail = {}) {
        certifications.push_back({std::move(name), passed, std::move(detail)});
    }

    void absorb(const std::vector<Certification>& cs, const std::string& prefix = {}) {
        for (const auto& c : cs) certifications.push_back({prefix + c.name, c.passed, c.detail});
    }

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["outputs"] = outputs;
        Json certs = Json::array();
        for (const auto& c : certifications) {
            Json e;
            e["check"] = c.name;
            e["status"] = c.passed ? "pass" : "fail";
            if (!c.detail.empty()) e["detail"] = c.detail;
            certs.push_back(std::move(e));
        }
        j["certifications"] = std::move(certs);
        j["status"] = ok() ? "pass" : "fail";
        j["version"] = version;
        return j;
    }

    std::string dump() const { return to_json().dump(2); }
};

inline Json to_json(HalfInt h) {
    Json j;
    j["value"] = h.to_string();
    j["doubled"] = h.doubled();
    return j;
}

inline Json to_json(const NuInterval& iv) {
    Json j;
    j["lower"] = to_json(iv.lower);
    j["upper"] = to_json(iv.upper);
    j["width"] = to_json(iv.width());
    return j;
}

inline Json to_json(const LaurentPoly& p) {
    Json j;
    j["text"] = p.pretty();
    j["canonical"] = p.to_string();
    return j;
}

inline Json to_json(const EqualityValue& e) {
    Json j;
    j["value"] = e.value ? to_json(*e.value) : Json(nullptr);
    j["ambiguous"] = e.ambiguous;
    return j;
}

inline Json to_json(const ObstructionResult& r) {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["reason"] = r.reason;
    j["missing"] = r.missing;
    return j;
}

inline Json to_json(const KGap& g) {
    Json j;
    j["m"] = g.m;
    j["d"] = g.d;
    j["k_plus"] = g.k_plus;
    j["k_minus"] = g.k_minus;
    return j;
}

inline Json to_json(const KnotRecord& k) {
    auto opt_half = [](const std::optional<HalfInt>& h) { return h ? Json(h->doubled()) : Json(nullptr); };
    auto opt_int = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
    Json j;
    j["name"] = k.name;
    j["braid"] = k.braid ? Json(k.braid->to_string()) : Json(nullptr);
    j["strands"] = k.braid ? Json(k.braid->strands()) : Json(nullptr);
    j["tau2"] = opt_half(k.tau);
    j["s2"] = opt_half(k.s_half);
    j["g3"] = opt_int(k.genus3);
    j["g4"] = opt_int(k.genus4);
    j["in_P"] = k.in_P ? Json(*k.in_P) : Json(nullptr);
    return j;
}

inline Json witness_to_json(const CobordismWitness& w) {
    Json j;
    j["strands"] = w.start().strands();
    j["start"] = w.start().to_string();
    Json steps = Json::array();
    for (std::size_t i = 0; i < w.steps().size(); ++i) {
        const BandStep& s = w.steps()[i];
        Json e;
        e["op"] = s.deletion ? "delete" : "insert";
        e["position"] = s.position;
        e["letter"] = s.letter.index * s.letter.sign;
        e["components"] = w.components()[i + 1];
        steps.push_back(std::move(e));
    }
    j["steps"] = std::move(steps);
    j["end"] = w.end().to_string();
    j["bands"] = w.band_count();
    j["genus"] = to_json(w.genus());
    return j;
}

/// Rebuilds a witness by replaying its steps; every recorded component
/// count and the end word must agree with the replay.
inline CobordismWitness witness_from_json(const Json& j) {
    try {
        const int strands = j.at("strands").get<int>();
        CobordismWitness w(parse_braid(j.at("start").get<std::string>(), strands));
        for (const Json& e : j.at("steps")) {
            const std::string op = e.at("op").get<std::string>();
            if (op != "insert" && op != "delete") throw ParseError("unknown witness op", op);
            const int g = e.at("letter").get<int>();
            if (g == 0) throw ParseError("zero is not a braid generator", "0");
            w.add({e.at("position").get<std::size_t>(), {std::abs(g), g > 0 ? 1 : -1}, op == "delete"});
            if (w.components().back() != e.at("components").get<int>())
                throw ParseError("witness component count mismatch", e.dump());
        }
        if (parse_braid(j.at("end").get<std::string>(), strands) != w.end())
            throw ParseError("witness end word does not match replay", j.at("end").get<std::string>());
        return w;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed witness record: ") + e.what(), j.dump());
    }
}

inline Json to_json(const InequalityBranch& b) {
    Json j;
    j["label"] = b.label;
    j["offset"] = b.offset;
    j["target_q"] = b.target_q;
    j["bands"] = b.bands();
    j["genus"] = to_json(b.genus());
    Json stages = Json::array();
    for (const auto& s : b.stages) {
        Json e;
        e["description"] = s.description;
        e["bands"] = s.bands;
        e["declared"] = s.declared;
        e["witness"] = s.witness ? witness_to_json(*s.witness) : Json(nullptr);
        stages.push_back(std::move(e));
    }
    j["stages"] = std::move(stages);
    j["bound"] = to_json(b.bound);
    return j;
}

inline Json to_json(const PipelineResult& r) {
    Json j;
    j["m"] = r.m;
    j["kgap"] = r.kgap ? to_json(*r.kgap) : Json(nullptr);
    j["degenerate"] = r.degenerate;
    j["plus"] = r.plus ? to_json(*r.plus) : Json(nullptr);
    j["minus"] = r.minus ? to_json(*r.minus) : Json(nullptr);
    j["intersection"] = to_json(r.intersection);
    return j;
}

inline Json to_json(const Derivation& d) {
    auto lines = [](const std::vector<DerivationLine>& ls) {
        Json a = Json::array();
        for (const auto& l : ls) {
            Json e;
            e["statement"] = l.statement;
            e["value"] = to_json(l.value);
            a.push_back(std::move(e));
        }
        return a;
    };
    Json j;
    j["r"] = d.r;
    j["r_prime"] = d.r_prime;
    j["lines"] = lines(d.lines);
    j["result"] = to_json(d.result);
    j["matches_bounds"] = d.matches_bounds;
    j["contradiction_lower"] = lines(d.contradiction_lower);
    j["contradiction_upper"] = lines(d.contradiction_upper);
    return j;
}

/// Bounds, equality value and all four obstruction verdicts for one (m, n).
inline Json bounds_row(const KnotRecord& k, std::int64_t m, std::int64_t n) {
    Json row;
    row["n"] = n;
    if (k.tau) {
        row["interval"] = to_json(corollary_bounds(*k.tau, m, n));
        row["equality"] = k.genus3 ? to_json(corollary_equality(*k.tau, *k.genus3, m, n)) : Json(nullptr);
        row["c_knot"] = to_json(c_knot_obstruction(*k.tau, m, n));
    } else {
        row["interval"] = nullptr;
        row["equality"] = nullptr;
        row["c_knot"] = to_json(ObstructionResult{Verdict::inconclusive, "missing fields", {"tau"}});
    }
    row["complex_curve"] = to_json(complex_curve_obstruction(k, m, n));
    row["lspace"] = to_json(lspace_obstruction(k, m, n));
    row["positivity"] = to_json(positivity_obstruction(k, m, n));
    return row;
}

// ---------------------------------------------------------------------------
// Verification suites

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::optional<std::size_t> limit;
};

namespace detail {

inline BraidWord trefoil() { return BraidWord::from_signed(2, {1, 1, 1}); }
inline BraidWord figure_eight() { return BraidWord::from_signed(3, {1, -2, 1, -2}); }

inline std::vector<std::pair<std::string, BraidWord>> standard_companions() {
    return {{"unknot", BraidWord(1)}, {"trefoil", trefoil()}, {"figure-eight", figure_eight()}};
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random word on the given strands whose closure is a knot.
inline BraidWord random_knot_braid(std::mt19937_64& rng, int strands, std::size_t max_letters) {
    for (;;) {
        const auto len = static_cast<std::size_t>(uniform(rng, strands - 1, static_cast<std::int64_t>(max_letters)));
        BraidWord b(strands);
        for (std::size_t i = 0; i < len; ++i) {
            const int idx = static_cast<int>(uniform(rng, 1, strands - 1));
            b.push_back({idx, uniform(rng, 0, 1) ? 1 : -1});
        }
        if (b.closure().is_knot()) return b;
    }
}

inline std::string case_name(const std::string& k, std::int64_t m, std::int64_t n) {
    return k + " m=" + std::to_string(m) + " n=" + std::to_string(n);
}

} // namespace detail

/// Alexander polynomial of every cable against the classical product formula.
inline std::vector<Certification> verify_cablealex(const SuiteOptions& = {}) {
    std::vector<Certification> out;
    for (const auto& [name, k] : detail::standard_companions()) {
        const LaurentPoly dk = alexander_from_seifert(seifert_matrix(k));
        for (int m : {2, 3})
            for (std::int64_t n = -9; n <= 9; ++n) {
                if (gcd64(m, n) != 1) continue;
                const LaurentPoly got = alexander_from_seifert(seifert_matrix(cable_braid(k, m, n)));
                const LaurentPoly want = cable_alexander(dk, m, n);
                out.push_back({"cable Alexander " + detail::case_name(name, m, n), equal_up_to_units(got, want),
                               symmetric_normal_form(got).pretty()});
            }
    }
    return out;
}

/// Both sides of the Litherland formula, off jump points.
inline std::vector<Certification> verify_litherland(const SuiteOptions& = {}) {
    std::vector<Certification> out;
    const std::vector<Rational> thetas{Rational(1, 2), Rational(1, 3), Rational(3, 10)};
    for (const auto& [name, k] : detail::standard_companions())
        for (int m : {2, 3})
            for (std::int64_t n : {-7, -5, 5, 7}) {
                if (gcd64(m, n) != 1) continue;
                for (const Rational& th : thetas) {
                    const std::string label = "Litherland " + detail::case_name(name, m, n) + " theta=" + th.str();
                    try {
                        const LitherlandReport rep = check_litherland(k, m, n, th);
                        out.push_back({label, rep.holds(),
                                       std::to_string(rep.cable_side) + " = " + std::to_string(rep.companion_term) +
                                           " + " + std::to_string(rep.torus_term)});
                    } catch (const JumpPointError& e) {
                        out.push_back({label + " (jump point, skipped)", true, e.what()});
                    }
                }
            }
    return out;
}

/// Seeded random cable and satellite pipelines with concrete merge replays.
inline std::vector<Certification> verify_bands(const SuiteOptions& opt = {}) {
    std::vector<Certification> out;
    std::mt19937_64 rng(opt.seed);
    const auto companions = detail::standard_companions();
    const std::size_t cable_runs = opt.limit.value_or(50);
    for (std::size_t run = 0; run < cable_runs; ++run) {
        const int m = static_cast<int>(detail::uniform(rng, 2, 6));
        std::int64_t n = 0, r = 0;
        do {
            n = detail::uniform(rng, -20, 20);
            r = detail::uniform(rng, -20, 20);
        } while (n <= r || gcd64(m, n) != 1 || gcd64(m, r) != 1);
        const auto& [cname, k] = companions[run % companions.size()];
        PipelineOptions po;
        po.companion = k;
        const PipelineResult res = cable_pipeline(m, n, r, po);
        const std::string label = "cable pipeline " + cname + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                                  " r=" + std::to_string(r);
        std::string failed;
        for (const auto& c : res.certifications)
            if (!c.passed) failed += (failed.empty() ? "" : "; ") + c.name;
        out.push_back({label, res.ok(), failed});
    }
    const std::size_t sat_runs = opt.limit ? (*opt.limit + 1) / 2 : 20;
    for (std::size_t run = 0; run < sat_runs; ++run) {
        const int m = static_cast<int>(detail::uniform(rng, 2, 4));
        const BraidWord beta = detail::random_knot_braid(rng, m, 6);
        std::int64_t r = 0, s = 0;
        do {
            r = detail::uniform(rng, -3, 3);
            s = detail::uniform(rng, -3, 3);
        } while (r <= s);
        const auto& [cname, k] = companions[run % 2];
        PipelineOptions po;
        po.companion = k;
        const PipelineResult res = satellite_pipeline(beta, r, s, po);
        bool genus_ok = res.plus && res.minus && res.plus->genus() == HalfInt::from_int(m - 1) &&
                        res.minus->genus() == HalfInt::from_int(m - 1);
        const std::string label = "satellite pipeline " + cname + " beta=(" + beta.to_string() + ") r=" +
                                  std::to_string(r) + " s=" + std::to_string(s);
        std::string failed;
        for (const auto& c : res.certifications)
            if (!c.passed) failed += (failed.empty() ? "" : "; ") + c.name;
        if (!genus_ok) failed += (failed.empty() ? "" : "; ") + std::string("branch genus != m-1");
        out.push_back({label, res.ok() && genus_ok, failed});
    }
    return out;
}

/// h tables of the equality families and the unknot, and the g table of the
/// twisted torus family, against the monotonicity bounds.
inline std::vector<Certification> verify_monotone(const SuiteOptions& = {}) {
    std::vector<Certification> out;
    for (std::int64_t m = 2; m <= 6; ++m) {
        for (int g : {1, 2, 3}) {
            for (int sign : {1, -1}) {
                NuTable nu;
                const HalfInt tau = HalfInt::from_int(sign * g);
                for (std::int64_t n = -25; n <= 25; ++n)
                    if (gcd64(m, n) == 1) nu.emplace(n, *corollary_equality(tau, g, m, n).value);
                const auto v = check_h_monotone(h_function(nu, m), m);
                out.push_back({"h monotone m=" + std::to_string(m) + " tau=" + tau.to_string() + " g=" +
                                   std::to_string(g),
                               v.ok, v.reason});
            }
        }
        NuTable unknot;
        for (std::int64_t n = -25; n <= 25; ++n)
            if (gcd64(m, n) == 1) unknot.emplace(n, torus_tau_signed(m, n));
        const NuTable h = h_function(unknot, m);
        const auto v = check_h_monotone(h, m);
        bool slice_example = true;
        for (const auto& [n, val] : h)
            if (val != (n < 0 ? half_product(m - 1, 1) : -half_product(m - 1, 1))) slice_example = false;
        const HalfInt drop = h.begin()->second - h.rbegin()->second;
        out.push_back({"h monotone unknot m=" + std::to_string(m), v.ok, v.reason});
        out.push_back({"unknot h(n) = (m-1)/2 for n < 0 and -(m-1)/2 for n > 0, m=" + std::to_string(m),
                       slice_example, ""});
        out.push_back({"unknot total drop equals m-1, m=" + std::to_string(m), drop == HalfInt::from_int(m - 1),
                       drop.to_string()});
    }
    NuTable nu;
    for (std::int64_t r = -6; r <= 6; ++r) nu.emplace(r, torus_tau_signed(2, 2 * r + 1));
    const NuTable g = g_function(nu, 2);
    const auto v = check_g_monotone(g, 2);
    out.push_back({"g monotone for sigma_1 twists over the unknot", v.ok, v.reason});
    out.push_back({"g total variation equals m-1", g.begin()->second - g.rbegin()->second == HalfInt::from_int(1),
                   (g.begin()->second - g.rbegin()->second).to_string()});
    return out;
}

/// Seifert-matrix Alexander polynomial against the reduced Burau route on a
/// seeded random corpus of knot-closure braids.
inline std::vector<Certification> verify_oracle(const SuiteOptions& opt = {}) {
    std::vector<Certification> out;
    std::mt19937_64 rng(opt.seed);
    const std::size_t count = opt.limit.value_or(200);
    for (std::size_t i = 0; i < count; ++i) {
        const int strands = static_cast<int>(detail::uniform(rng, 2, 6));
        const BraidWord b = detail::random_knot_braid(rng, strands, 14);
        const LaurentPoly a = alexander_from_seifert(seifert_matrix(b));
        const LaurentPoly c = alexander_burau(b);
        out.push_back({"Seifert vs Burau (" + std::to_string(strands) + ": " + b.to_string() + ")",
                       equal_up_to_units(a, c), symmetric_normal_form(a).pretty()});
    }
    return out;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"litherland", "cablealex", "bands", "monotone", "oracle"};
    return names;
}

inline std::vector<Certification> run_suite(const std::string& name, const SuiteOptions& opt = {}) {
    if (name == "litherland") return verify_litherland(opt);
    if (name == "cablealex") return verify_cablealex(opt);
    if (name == "bands") return verify_bands(opt);
    if (name == "monotone") return verify_monotone(opt);
    if (name == "oracle") return verify_oracle(opt);
    if (name == "all") {
        std::vector<Certification> out;
        for (const auto& s : suite_names())
            for (auto& c : run_suite(s, opt)) out.push_back({s + ": " + c.name, c.passed, std::move(c.detail)});
        return out;
    }
    throw PreconditionError("unknown suite '" + name + "'");
}

} // namespace cablekit

#endif // CABLEKIT_REPORT_HPP
