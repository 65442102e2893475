#include <cablekit/braid.hpp>
#include <cablekit/cobordism.hpp>
#include <cablekit/concordance.hpp>
#include <cablekit/invariants.hpp>
#include <cablekit/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace cablekit;

namespace {

struct CableArgs {
    std::string companion;
    int strands = 1;
    int m = 2;
    std::int64_t n = 1;
    std::string emit = "summary";
};

struct InvariantArgs {
    std::string braid;
    int strands = 2;
    bool alexander = false;
    bool signature = false;
    std::vector<std::string> tl;
    bool stabilize = false;
};

struct BoundsArgs {
    std::optional<std::int64_t> tau2;
    std::optional<int> g3;
    std::optional<int> g4;
    std::string knots;
    std::int64_t m = 2;
    std::optional<std::int64_t> n;
    std::string n_range;
};

struct WitnessArgs {
    std::optional<int> m;
    std::optional<std::int64_t> n;
    std::int64_t r = 0;
    std::optional<std::int64_t> s;
    std::string companion;
    std::optional<int> companion_strands;
    std::string beta;
    std::optional<int> strands;
    bool no_alexander = false;
};

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 1;
    std::optional<std::size_t> limit;
};

struct IngestArgs {
    std::string knots;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Smallest strand count that fits every generator of a braid text.
// "unknot" stands for the empty word.
BraidWord read_braid(const std::string& text, int strands) {
    return parse_braid(text == "unknot" ? std::string() : text, strands);
}

int infer_strands(const std::string& text) {
    if (text == "unknot") return 1;
    std::istringstream in(text);
    std::string tok;
    long long top = 0;
    while (in >> tok) {
        try {
            top = std::max(top, std::llabs(std::stoll(tok)));
        } catch (const std::exception&) {
            throw ParseError("braid generator is not an integer", tok);
        }
    }
    return static_cast<int>(top) + 1;
}

ReportRecord cmd_cable(const CableArgs& a) {
    ReportRecord rec;
    rec.command = "cable";
    rec.inputs["companion"] = a.companion;
    rec.inputs["strands"] = a.strands;
    rec.inputs["m"] = a.m;
    rec.inputs["n"] = a.n;
    rec.inputs["emit"] = a.emit;
    const BraidWord k = read_braid(a.companion, a.strands);
    const BraidWord c = cable_braid(k, a.m, a.n);
    const ClosureSummary sum = c.closure();
    if (a.emit == "braid") rec.outputs["braid"] = c.to_string();
    rec.outputs["strands"] = sum.strands;
    rec.outputs["letters"] = c.length();
    rec.outputs["exponent_sum"] = sum.exponent_sum;
    rec.outputs["components"] = sum.components;
    const std::int64_t g = gcd64(a.m, a.n);
    if (g > 1) {
        const std::string warn = "gcd(m, n) = " + std::to_string(g) + ": the cable is a " +
                                 std::to_string(sum.components) + "-component link";
        rec.outputs["warning"] = warn;
        std::cerr << "warning: " << warn << '\n';
    }
    rec.certify("companion closes to a knot", k.closure().is_knot());
    rec.certify("components equal gcd(m, n)", sum.components == g, std::to_string(sum.components));
    return rec;
}

ReportRecord cmd_invariants(InvariantArgs a) {
    ReportRecord rec;
    rec.command = "invariants";
    rec.inputs["braid"] = a.braid;
    rec.inputs["strands"] = a.strands;
    rec.inputs["stabilize"] = a.stabilize;
    if (!a.alexander && !a.signature && a.tl.empty()) a.alexander = a.signature = true;
    const BraidWord b = read_braid(a.braid, a.strands);
    const ClosureSummary sum = b.closure();
    rec.outputs["components"] = sum.components;
    const SeifertData s = seifert_matrix(b, a.stabilize);
    rec.outputs["seifert_rank"] = s.rank();
    rec.outputs["genus"] = s.genus;
    std::optional<long long> sig;
    if (a.alexander) {
        const LaurentPoly delta = symmetric_normal_form(alexander_from_seifert(s));
        rec.outputs["alexander"] = to_json(delta);
        if (sum.is_knot()) {
            const LaurentPoly burau = alexander_burau(b);
            rec.certify("Seifert and Burau Alexander polynomials agree", equal_up_to_units(delta, burau),
                        symmetric_normal_form(burau).pretty());
            rec.certify("Alexander polynomial at 1 is a unit", abs(delta.evaluate(1)) == 1);
        }
    }
    if (a.signature) {
        sig = signature(s);
        rec.outputs["signature"] = *sig;
    }
    if (!a.tl.empty()) {
        Json tl = Json::array();
        for (const auto& text : a.tl) {
            const Rational theta = parse_rational(text);
            const SignatureValue v = tristram_levine(s, theta);
            Json e;
            e["theta"] = theta.str();
            e["value"] = v.value;
            e["evaluated_at"] = v.evaluated_at.str();
            e["margin"] = v.margin;
            e["certification"] = v.certification;
            tl.push_back(std::move(e));
            if (theta == Rational(1, 2)) {
                const long long base = sig ? *sig : signature(s);
                rec.certify("Tristram-Levine at 1/2 equals the signature", v.value == base);
            }
        }
        rec.outputs["tristram_levine"] = std::move(tl);
    }
    return rec;
}

void certify_h_table(ReportRecord& rec, const std::string& name, const NuTable& nu, std::int64_t m) {
    if (nu.size() < 2) return;
    const MonotoneVerdict v = check_h_monotone(h_function(nu, m), m);
    rec.certify("h monotone across equality values for " + name, v.ok, v.reason);
}

ReportRecord cmd_bounds(const BoundsArgs& a) {
    ReportRecord rec;
    rec.command = "bounds";
    rec.inputs["m"] = a.m;
    if (a.knots.empty()) {
        if (!a.n) throw PreconditionError("bounds needs --n, or --knots with --n-range");
        KnotRecord k;
        k.name = "input";
        if (a.tau2) k.tau = HalfInt::from_doubled(*a.tau2);
        k.genus3 = a.g3;
        k.genus4 = a.g4;
        if (k.tau && k.genus3) k.in_P = *k.tau == HalfInt::from_int(*k.genus3);
        rec.inputs["tau2"] = a.tau2 ? Json(*a.tau2) : Json(nullptr);
        rec.inputs["g3"] = a.g3 ? Json(*a.g3) : Json(nullptr);
        rec.inputs["g4"] = a.g4 ? Json(*a.g4) : Json(nullptr);
        rec.inputs["n"] = *a.n;
        const auto problems = k.violations();
        rec.certify("knot record is consistent", problems.empty(), problems.empty() ? "" : problems.front());
        rec.outputs = bounds_row(k, a.m, *a.n);
        if (k.tau) {
            const Derivation d = bounds_derivation(*k.tau, a.m, *a.n);
            rec.outputs["derivation"] = to_json(d);
            rec.certify("derived interval equals the stated bounds", d.matches_bounds);
            rec.certify("equality-case contradictions replay", d.contradictions_certified());
        }
        return rec;
    }

    rec.inputs["knots"] = a.knots;
    rec.inputs["n_range"] = a.n_range;
    const auto colon = a.n_range.find(':');
    if (colon == std::string::npos) throw ParseError("--n-range must be A:B", a.n_range);
    const std::int64_t lo = std::stoll(a.n_range.substr(0, colon));
    const std::int64_t hi = std::stoll(a.n_range.substr(colon + 1));
    if (lo > hi) throw ParseError("--n-range must have A <= B", a.n_range);
    const KnotTable table = parse_knot_table(read_file(a.knots));
    for (const auto& e : table.errors) {
        std::string all;
        for (const auto& p : e.problems) all += (all.empty() ? "" : "; ") + p;
        rec.certify("row " + std::to_string(e.row) + " valid", false, all);
    }
    Json knots = Json::array();
    for (const KnotRecord& k : table.records) {
        Json entry;
        entry["knot"] = to_json(k);
        Json rows = Json::array();
        Json skipped = Json::array();
        NuTable equality;
        for (std::int64_t n = lo; n <= hi; ++n) {
            if (gcd64(a.m, n) != 1) {
                skipped.push_back(n);
                continue;
            }
            Json row = bounds_row(k, a.m, n);
            if (k.tau && k.genus3) {
                const EqualityValue eq = corollary_equality(*k.tau, *k.genus3, a.m, n);
                if (eq.value && !eq.ambiguous) equality.emplace(n, *eq.value);
            }
            rows.push_back(std::move(row));
        }
        entry["rows"] = std::move(rows);
        entry["skipped_non_coprime"] = std::move(skipped);
        knots.push_back(std::move(entry));
        certify_h_table(rec, k.name, equality, a.m);
    }
    rec.outputs["knots"] = std::move(knots);
    return rec;
}

ReportRecord cmd_witness(const WitnessArgs& a) {
    ReportRecord rec;
    rec.command = "witness";
    PipelineOptions opt;
    opt.compare_alexander = !a.no_alexander;
    if (!a.companion.empty()) {
        const int ks = a.companion_strands                  ? *a.companion_strands
                       : (a.beta.empty() && a.strands) ? *a.strands
                                                       : infer_strands(a.companion);
        opt.companion = read_braid(a.companion, ks);
    }
    PipelineResult res;
    if (a.beta.empty()) {
        if (!a.m || !a.n) throw PreconditionError("witness needs --m, --n and --r, or --beta with --r and --s");
        rec.inputs["pipeline"] = "cable";
        rec.inputs["m"] = *a.m;
        rec.inputs["n"] = *a.n;
        rec.inputs["r"] = a.r;
        rec.inputs["companion"] = opt.companion ? Json(opt.companion->to_string()) : Json(nullptr);
        res = cable_pipeline(*a.m, *a.n, a.r, opt);
    } else {
        if (!a.s) throw PreconditionError("satellite witness needs --s");
        rec.inputs["pipeline"] = "satellite";
        rec.inputs["beta"] = a.beta;
        const int strands = a.strands ? *a.strands : infer_strands(a.beta);
        rec.inputs["strands"] = strands;
        rec.inputs["r"] = a.r;
        rec.inputs["s"] = *a.s;
        rec.inputs["companion"] = opt.companion ? Json(opt.companion->to_string()) : Json(nullptr);
        res = satellite_pipeline(read_braid(a.beta, strands), a.r, *a.s, opt);
    }
    rec.outputs = to_json(res);
    rec.outputs["companion_stage"] = res.companion_stage ? witness_to_json(*res.companion_stage) : Json(nullptr);
    rec.absorb(res.certifications);
    auto round_trip = [&](const CobordismWitness& w, const std::string& what) {
        const bool json_ok = witness_from_json(witness_to_json(w)) == w;
        const bool text_ok = CobordismWitness::from_text(w.to_text()) == w;
        rec.certify(what + " witness round-trips", json_ok && text_ok);
    };
    if (res.companion_stage) round_trip(*res.companion_stage, "merge");
    for (const auto* br : {&res.plus, &res.minus}) {
        if (!*br) continue;
        for (const auto& st : (*br)->stages)
            if (st.witness && !st.declared && st.description == "torus ladder") round_trip(*st.witness, (*br)->label + " ladder");
    }
    return rec;
}

ReportRecord cmd_verify(const VerifyArgs& a) {
    ReportRecord rec;
    rec.command = "verify";
    rec.inputs["suite"] = a.suite;
    rec.inputs["seed"] = a.seed;
    rec.inputs["limit"] = a.limit ? Json(*a.limit) : Json(nullptr);
    const auto certs = run_suite(a.suite, {a.seed, a.limit});
    std::size_t passed = 0;
    for (const auto& c : certs) passed += c.passed;
    rec.outputs["checks"] = certs.size();
    rec.outputs["passed"] = passed;
    rec.absorb(certs);
    return rec;
}

ReportRecord cmd_ingest(const IngestArgs& a) {
    ReportRecord rec;
    rec.command = "ingest";
    rec.inputs["knots"] = a.knots;
    const KnotTable table = parse_knot_table(read_file(a.knots));
    Json records = Json::array();
    for (const auto& k : table.records) records.push_back(to_json(k));
    Json errors = Json::array();
    for (const auto& e : table.errors) {
        Json j;
        j["row"] = e.row;
        j["problems"] = e.problems;
        errors.push_back(std::move(j));
    }
    rec.outputs["records"] = std::move(records);
    rec.outputs["errors"] = std::move(errors);
    rec.certify("table valid", table.ok(),
                std::to_string(table.records.size()) + " records, " + std::to_string(table.errors.size()) + " rejected rows");
    return rec;
}

int emit(const ReportRecord& rec) {
    std::cout << rec.dump() << '\n';
    return rec.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cable and twisted-satellite knots: construction, invariants, concordance bounds and band-move replays"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    CableArgs cable;
    auto* c = app.add_subcommand("cable", "Construct the (m, n)-cable of a braid closure");
    c->add_option("--companion", cable.companion, "Companion braid word (signed generators, or \"unknot\")");
    c->add_option("--strands", cable.strands, "Companion strand count")->check(CLI::PositiveNumber);
    c->add_option("--m", cable.m, "Longitudinal winding")->required()->check(CLI::PositiveNumber);
    c->add_option("--n", cable.n, "Meridional twisting")->required();
    c->add_option("--emit", cable.emit, "Output: braid or summary")->check(CLI::IsMember({"braid", "summary"}));

    InvariantArgs inv;
    auto* i = app.add_subcommand("invariants", "Alexander polynomial, signature and Tristram-Levine signatures");
    i->add_option("--braid", inv.braid, "Braid word (or \"unknot\")")->required();
    i->add_option("--strands", inv.strands, "Strand count")->required()->check(CLI::PositiveNumber);
    i->add_flag("--alexander", inv.alexander, "Alexander polynomial");
    i->add_flag("--signature", inv.signature, "Signature");
    i->add_option("--tl", inv.tl, "Tristram-Levine signature at exp(2 pi i theta), theta as p/q");
    i->add_flag("--stabilize", inv.stabilize, "Stabilize generators missing from the word");

    BoundsArgs bnd;
    auto* b = app.add_subcommand("bounds", "Cable bounds, equality values and obstruction verdicts");
    b->add_option("--tau2", bnd.tau2, "Doubled tau of the companion");
    b->add_option("--g3", bnd.g3, "Seifert genus of the companion");
    b->add_option("--g4", bnd.g4, "Four-genus of the companion");
    b->add_option("--knots", bnd.knots, "Knot-table CSV for batch mode");
    b->add_option("--m", bnd.m, "Longitudinal winding")->required()->check(CLI::Range(2, 1000000));
    b->add_option("--n", bnd.n, "Meridional twisting");
    b->add_option("--n-range", bnd.n_range, "Batch range A:B");

    WitnessArgs wit;
    auto* w = app.add_subcommand("witness", "Replay a band-move pipeline and emit its witness");
    w->add_option("--m", wit.m, "Cable winding");
    w->add_option("--n", wit.n, "Cable twisting of the first cable");
    w->add_option("--r", wit.r, "Second cable twisting, or first twist count")->required();
    w->add_option("--s", wit.s, "Second twist count");
    w->add_option("--beta", wit.beta, "Satellite pattern braid");
    w->add_option("--strands", wit.strands, "Strands of the companion (cable) or of beta (satellite)");
    w->add_option("--companion", wit.companion, "Companion braid for the concrete merge stage (or \"unknot\")");
    w->add_option("--companion-strands", wit.companion_strands, "Companion strand count (default: inferred)");
    w->add_flag("--no-alexander", wit.no_alexander, "Skip the Alexander comparison of the merge end");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Run a verification suite");
    v->add_option("--suite", ver.suite, "litherland|cablealex|bands|monotone|oracle|all")
        ->check(CLI::IsMember({"litherland", "cablealex", "bands", "monotone", "oracle", "all"}));
    v->add_option("--seed", ver.seed, "Random seed");
    v->add_option("--limit", ver.limit, "Number of random cases");

    IngestArgs ing;
    auto* g = app.add_subcommand("ingest", "Validate a knot-table CSV");
    g->add_option("--knots", ing.knots, "Knot-table CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c->parsed()) return emit(cmd_cable(cable));
        if (i->parsed()) return emit(cmd_invariants(inv));
        if (b->parsed()) return emit(cmd_bounds(bnd));
        if (w->parsed()) return emit(cmd_witness(wit));
        if (v->parsed()) return emit(cmd_verify(ver));
        if (g->parsed()) return emit(cmd_ingest(ing));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
