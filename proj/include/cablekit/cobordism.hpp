#ifndef CABLEKIT_COBORDISM_HPP
#define CABLEKIT_COBORDISM_HPP

// Band-move cobordisms as checked sequences of single-letter edits on braid
// words, the k+/k- offsets, and replays of the cable and twisted-satellite
// inequality pipelines together with the derivation of the cable bounds.

#include <cablekit/braid.hpp>
#include <cablekit/concordance.hpp>
#include <cablekit/error.hpp>
#include <cablekit/invariants.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cablekit {

/// One saddle: a letter inserted at (or deleted from) a position.
struct BandStep {
    std::size_t position = 0;
    Letter letter;
    bool deletion = false;

    friend bool operator==(const BandStep&, const BandStep&) = default;
};

/// Applies one band step and certifies that the closure gains or loses
/// exactly one component.
inline BraidWord apply_band(const BraidWord& b, const BandStep& step) {
    BraidWord out = b;
    if (step.deletion) {
        if (step.position >= b.length()) throw PreconditionError("band deletion position past the end of the word");
        if (b.letters()[step.position] != step.letter)
            throw PreconditionError("band deletion does not match the letter at position " +
                                    std::to_string(step.position));
        out.erase(step.position);
    } else {
        if (step.position > b.length()) throw PreconditionError("band insertion position past the end of the word");
        out.insert(step.position, step.letter);
    }
    const int before = b.closure().components;
    const int after = out.closure().components;
    if (std::abs(after - before) != 1)
        throw InvariantViolation("not a band move between these closure types (components " +
                                 std::to_string(before) + " -> " + std::to_string(after) + ")");
    return out;
}

inline BraidWord insert_band(const BraidWord& b, const BandStep& step) {
    if (step.deletion) throw PreconditionError("insert_band given a deletion step");
    return apply_band(b, step);
}

/// A checked sequence of band moves between two braid words.
class CobordismWitness {
public:
    CobordismWitness() = default;
    explicit CobordismWitness(BraidWord start) : start_(start), end_(std::move(start)) {
        components_.assign(1, end_.closure().components);
    }

    void add(const BandStep& step) {
        end_ = apply_band(end_, step);
        steps_.push_back(step);
        components_.push_back(end_.closure().components);
    }

    const BraidWord& start() const noexcept { return start_; }
    const BraidWord& end() const noexcept { return end_; }
    const std::vector<BandStep>& steps() const noexcept { return steps_; }
    /// Component count before the first step and after every step.
    const std::vector<int>& components() const noexcept { return components_; }
    std::size_t band_count() const noexcept { return steps_.size(); }

    /// Genus of the surface the bands trace, assuming it is connected:
    /// chi = -bands = 2 - 2g - (c_start + c_end).
    HalfInt genus() const {
        const std::int64_t twice = static_cast<std::int64_t>(band_count()) - components_.front() - components_.back() + 2;
        return HalfInt::from_doubled(twice);
    }

    /// Re-applies every step from start and compares the result letter-for-letter.
    bool replays() const {
        try {
            BraidWord w = start_;
            for (std::size_t i = 0; i < steps_.size(); ++i) {
                w = apply_band(w, steps_[i]);
                if (w.closure().components != components_[i + 1]) return false;
            }
            return w == end_;
        } catch (const Error&) {
            return false;
        }
    }

    /// Text form: "strands N", "start <word>", one "insert|delete <pos> <letter>"
    /// line per step, "end <word>".
    std::string to_text() const {
        std::ostringstream os;
        os << "strands " << start_.strands() << '\n';
        os << "start " << start_.to_string() << '\n';
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            const auto& s = steps_[i];
            os << (s.deletion ? "delete " : "insert ") << s.position << ' ' << s.letter.index * s.letter.sign
               << " components " << components_[i + 1] << '\n';
        }
        os << "end " << end_.to_string() << '\n';
        return os.str();
    }

    static CobordismWitness from_text(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int strands = -1;
        std::optional<CobordismWitness> w;
        bool ended = false;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ls(line);
            std::string key;
            ls >> key;
            if (key == "strands") {
                if (!(ls >> strands)) throw ParseError("bad strand count in witness", line);
            } else if (key == "start") {
                if (strands < 1) throw ParseError("witness start before strand count", line);
                std::string rest;
                std::getline(ls, rest);
                w.emplace(parse_braid(rest, strands));
            } else if (key == "insert" || key == "delete") {
                if (!w) throw ParseError("witness step before start", line);
                std::size_t pos = 0;
                int g = 0;
                std::string tag;
                int comps = 0;
                if (!(ls >> pos >> g >> tag >> comps) || g == 0 || tag != "components")
                    throw ParseError("malformed witness step", line);
                w->add({pos, {std::abs(g), g > 0 ? 1 : -1}, key == "delete"});
                if (w->components().back() != comps) throw ParseError("witness component count mismatch", line);
            } else if (key == "end") {
                if (!w) throw ParseError("witness end before start", line);
                std::string rest;
                std::getline(ls, rest);
                if (parse_braid(rest, strands) != w->end()) throw ParseError("witness end word does not match replay", line);
                ended = true;
            } else {
                throw ParseError("unknown witness line", key);
            }
        }
        if (!w || !ended) throw ParseError("incomplete witness", text);
        return *w;
    }

    friend bool operator==(const CobordismWitness& a, const CobordismWitness& b) {
        return a.start_ == b.start_ && a.steps_ == b.steps_ && a.end_ == b.end_;
    }

private:
    BraidWord start_;
    std::vector<BandStep> steps_;
    BraidWord end_;
    std::vector<int> components_{1};
};

struct KGap {
    std::int64_t m = 2;
    std::int64_t d = 0;
    std::int64_t k_plus = 0;
    std::int64_t k_minus = -1;
};

/// Smallest k+ >= 0 and largest k- < 0 with d + k coprime to m.
inline KGap compute_kgap(std::int64_t m, std::int64_t d) {
    if (m < 2) throw PreconditionError("compute_kgap requires m >= 2");
    KGap g{m, d, 0, -1};
    while (gcd64(m, d + g.k_plus) != 1) ++g.k_plus;
    while (gcd64(m, d + g.k_minus) != 1) --g.k_minus;
    return g;
}

/// Witness from torus_braid(m, q) to torus_braid(m, q + k), one letter at a
/// time: whole (sigma_{m-1} ... sigma_1)^{+-1} blocks are appended at the end
/// or removed from it, so every intermediate word is a prefix form.
inline CobordismWitness torus_ladder(int m, std::int64_t q, std::int64_t k) {
    if (m < 1) throw PreconditionError("torus_ladder requires m >= 1");
    CobordismWitness w(torus_braid(m, q));
    std::int64_t cur = q;
    const std::int64_t step = k > 0 ? 1 : -1;
    for (std::int64_t done = 0; done != k; done += step) {
        const std::size_t len = w.end().length();
        if ((step > 0 && cur >= 0) || (step < 0 && cur <= 0)) {
            // grow: positive block sigma_{m-1}..sigma_1 or negative block sigma_1^-1..sigma_{m-1}^-1
            for (int j = 0; j < m - 1; ++j) {
                const int index = step > 0 ? m - 1 - j : j + 1;
                w.add({len + static_cast<std::size_t>(j), {index, static_cast<int>(step)}, false});
            }
        } else {
            // shrink: remove the last block from the end
            for (int j = 0; j < m - 1; ++j) {
                const std::size_t pos = w.end().length() - 1;
                w.add({pos, w.end().letters()[pos], true});
            }
        }
        cur += step;
    }
    return w;
}

/// Named pass/fail check recorded alongside every replay.
struct Certification {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline bool all_passed(const std::vector<Certification>& cs) {
    for (const auto& c : cs)
        if (!c.passed) return false;
    return true;
}

/// One stage of a pipeline: either replayed band by band, or declared
/// (a concordance taken as given, or a band count with no braid supplied).
struct PipelineStage {
    std::string description;
    std::size_t bands = 0;
    bool declared = false;
    std::optional<CobordismWitness> witness;
};

/// A cobordism from the start knot to a torus knot and the interval it
/// forces on the correction-function difference.
struct InequalityBranch {
    std::string label;
    std::int64_t offset = 0;    // k applied to the torus parameter
    std::int64_t target_q = 0;  // T_{m, target_q}
    std::vector<PipelineStage> stages;
    NuInterval bound;

    std::size_t bands() const {
        std::size_t b = 0;
        for (const auto& s : stages) b += s.bands;
        return b;
    }
    /// Knot to knot, connected: bands / 2.
    HalfInt genus() const { return HalfInt::from_doubled(static_cast<std::int64_t>(bands())); }
};

struct PipelineResult {
    std::int64_t m = 2;
    std::optional<KGap> kgap;
    bool degenerate = false;
    std::optional<InequalityBranch> plus;
    std::optional<InequalityBranch> minus;
    NuInterval intersection;
    /// Concrete companion-level band replay, when a companion braid was given.
    std::optional<CobordismWitness> companion_stage;
    std::vector<Certification> certifications;

    bool ok() const { return all_passed(certifications); }
};

namespace detail {

inline NuInterval intersect(const NuInterval& a, const NuInterval& b) {
    return {std::max(a.lower, b.lower), std::min(a.upper, b.upper)};
}

/// |nu(start) - nu(T_{m,q})| <= genus, rewritten as an interval on
/// nu(start) - shift for the given torus-side normalization.
inline NuInterval slice_interval(std::int64_t m, std::int64_t q, std::size_t bands, HalfInt shift) {
    const HalfInt g = HalfInt::from_doubled(static_cast<std::int64_t>(bands));
    const HalfInt centre = torus_tau_signed(m, q) - shift;
    return {centre - g, centre + g};
}

/// Word with the m-1 parallel merging bands prepared as cancelling
/// conjugator pairs between a and b (b sharing a's top strand).
struct MergeLayout {
    BraidWord start;
    std::vector<BandStep> bands;
};

/// Band j joins positions p = a - j and q = a + m - j across the strands in
/// between: the word carries C_j C_j^-1 with C_j = sigma_{q-1} ... sigma_{p+1},
/// and the band is sigma_p inserted between the two halves. Outer bands come
/// first. The pairing sends the i-th strand of a's top block to the (i+1)-th
/// strand (cyclically) of b's bottom block.
inline MergeLayout merge_layout(const BraidWord& a, const BraidWord& b, int m) {
    const int top = a.strands();
    std::vector<Letter> word(a.letters());
    std::vector<std::size_t> slots;
    for (int j = m - 1; j >= 1; --j) {
        const int p = top - j;
        const int q = top + m - j;
        std::vector<Letter> conj;
        for (int i = q - 1; i >= p + 1; --i) conj.push_back({i, 1});
        word.insert(word.end(), conj.begin(), conj.end());
        slots.push_back(word.size());
        for (auto it = conj.rbegin(); it != conj.rend(); ++it) word.push_back(it->inverse());
    }
    for (const Letter& l : b.letters()) word.push_back({l.index + top - 1, l.sign});
    MergeLayout out{BraidWord(top + b.strands() - 1, std::move(word)), {}};
    int j = m - 1;
    for (std::size_t k = 0; k < slots.size(); ++k, --j)
        out.bands.push_back({slots[k] + k, {top - j, 1}, false});
    return out;
}

/// Free reduction of a word (adjacent inverse pairs cancelled).
inline std::vector<Letter> freely_reduced(const std::vector<Letter>& w) {
    std::vector<Letter> out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back() == l.inverse()) out.pop_back();
        else out.push_back(l);
    }
    return out;
}

/// Runs the merge, returning its witness and the certifications comparing the
/// end word against an independently constructed target.
inline CobordismWitness run_merge(const BraidWord& a, const BraidWord& b, int m, const BraidWord& target,
                                  bool compare_alexander, std::vector<Certification>& certs) {
    const MergeLayout layout = merge_layout(a, b, m);
    const BraidWord plain = connected_sum(a, b);
    certs.push_back({"merge start reduces to the connected-sum word",
                     freely_reduced(layout.start.letters()) == freely_reduced(plain.letters()), ""});
    CobordismWitness w(layout.start);
    for (const auto& s : layout.bands) w.add(s);
    certs.push_back({"merge steps change components by one each", w.replays(),
                     std::to_string(w.band_count()) + " bands"});
    const int want = target.closure().components;
    certs.push_back({"merge end component count", w.end().closure().components == want,
                     std::to_string(w.end().closure().components) + " vs " + std::to_string(want)});
    certs.push_back({"merge end linking numbers", linking_spectrum(w.end()) == linking_spectrum(target), ""});
    if (compare_alexander) {
        const bool same = equal_up_to_units(alexander_burau_any(w.end()), alexander_burau_any(target));
        certs.push_back({"merge end Alexander polynomial", same, ""});
    }
    return w;
}

inline void expect_unit_interval(const NuInterval& got, std::int64_t m, std::vector<Certification>& certs) {
    const NuInterval want{HalfInt::from_int(-(m - 1)), HalfInt{}};
    certs.push_back({"intersection equals [-(m-1), 0]", got == want,
                     "[" + got.lower.to_string() + ", " + got.upper.to_string() + "]"});
}

} // namespace detail

struct PipelineOptions {
    /// Companion braid; enables the concrete merge stage.
    std::optional<BraidWord> companion;
    /// Also compare Alexander polynomials of the merge end and the target.
    bool compare_alexander = true;
};

/// Replays the argument bounding h(n) - h(r) for cables: m-1 merging bands
/// from K_{m,n} # (-K)_{m,-r} to (K # -K)_{m,n-r}, a declared concordance to
/// T_{m,n-r}, then |k|(m-1) ladder bands to T_{m,n-r+k} for k = k+ and k-.
inline PipelineResult cable_pipeline(int m, std::int64_t n, std::int64_t r, const PipelineOptions& opt = {}) {
    if (m < 2) throw PreconditionError("cable pipeline requires m >= 2");
    if (n <= r) throw PreconditionError("cable pipeline requires n > r");
    if (gcd64(m, n) != 1 || gcd64(m, r) != 1) throw PreconditionError("cable pipeline requires gcd(m, n) = gcd(m, r) = 1");
    PipelineResult res;
    res.m = m;
    const std::int64_t d = n - r;
    res.kgap = compute_kgap(m, d);

    std::optional<CobordismWitness> merge;
    if (opt.companion) {
        const BraidWord& k = *opt.companion;
        const BraidWord minus_k = inverse(k);
        const BraidWord a = cable_braid(k, m, n);
        const BraidWord b = cable_braid(minus_k, m, -r);
        const BraidWord target = cable_braid(connected_sum(k, minus_k), m, d);
        merge = detail::run_merge(a, b, m, target, opt.compare_alexander, res.certifications);
        res.companion_stage = merge;
    }

    // Normalization: h(n) - h(r) = nu(start) - (m-1)(n-r)/2.
    const HalfInt shift = half_product(m - 1, d);
    auto branch = [&](const char* label, std::int64_t k) {
        InequalityBranch br;
        br.label = label;
        br.offset = k;
        br.target_q = d + k;
        PipelineStage first{"merge K_{m,n} # (-K)_{m,-r} into (K#-K)_{m,n-r}", static_cast<std::size_t>(m - 1),
                            !merge.has_value(), merge};
        br.stages.push_back(std::move(first));
        br.stages.push_back({"(K#-K)_{m,n-r} concordant to T_{m,n-r}", 0, true, std::nullopt});
        CobordismWitness ladder = torus_ladder(m, d, k);
        res.certifications.push_back({std::string(label) + " ladder replays", ladder.replays(),
                                      std::to_string(ladder.band_count()) + " bands"});
        br.stages.push_back({"torus ladder", ladder.band_count(), false, std::move(ladder)});
        br.bound = detail::slice_interval(m, br.target_q, br.bands(), shift);
        const std::size_t want = static_cast<std::size_t>((std::llabs(k) + 1) * (m - 1));
        res.certifications.push_back({std::string(label) + " band total", br.bands() == want,
                                      std::to_string(br.bands()) + " vs " + std::to_string(want)});
        res.certifications.push_back({std::string(label) + " band total even", br.bands() % 2 == 0, ""});
        return br;
    };
    res.plus = branch("plus", res.kgap->k_plus);
    res.minus = branch("minus", res.kgap->k_minus);
    res.intersection = detail::intersect(res.plus->bound, res.minus->bound);
    detail::expect_unit_interval(res.intersection, m, res.certifications);
    return res;
}

/// Replays the argument bounding g(r) - g(s) for the twisted satellites
/// K_{beta_r}: m-1 merging bands to (K#-K)_{m, m(r-s)}, a declared
/// concordance to T_{m,m(r-s)}, and m-1 ladder bands to T_{m, m(r-s) +- 1}.
inline PipelineResult satellite_pipeline(const BraidWord& beta, std::int64_t r, std::int64_t s,
                                        const PipelineOptions& opt = {}) {
    if (!beta.closure().is_knot()) throw PreconditionError("satellite pipeline requires beta to close to a knot");
    if (r < s) throw PreconditionError("satellite pipeline requires r >= s");
    const int m = beta.strands();
    PipelineResult res;
    res.m = m;
    if (r == s || m == 1) {
        res.degenerate = true;
        res.intersection = {HalfInt{}, HalfInt{}};
        res.certifications.push_back({"degenerate conclusion is the zero interval", true, ""});
        return res;
    }

    std::optional<CobordismWitness> merge;
    if (opt.companion) {
        const BraidWord& k = *opt.companion;
        const BraidWord minus_k = inverse(k);
        const BraidWord beta_r = full_twists(beta, r);
        const BraidWord inv_s = full_twists(inverse(beta), -s);
        // -K_{beta_s} = (-K)_{(beta^-1)_{-s}}
        const BraidWord lhs = inverse(satellite_braid(k, full_twists(beta, s)));
        const BraidWord rhs = satellite_braid(minus_k, inv_s);
        const bool same_alex = equal_up_to_units(alexander_burau(lhs), alexander_burau(rhs));
        const bool same_sig = signature(seifert_matrix(lhs)) == signature(seifert_matrix(rhs));
        res.certifications.push_back({"orientation reversal identity (Alexander, signature)", same_alex && same_sig, ""});
        // The merge pairs strand i with strand i+1, so the second pattern is
        // conjugated by one torus letter block to land on beta_r (beta^-1)_{-s}.
        const BraidWord delta = torus_braid(m, 1);
        BraidWord shifted(m);
        shifted.append(inverse(delta));
        shifted.append(inv_s);
        shifted.append(delta);
        const BraidWord a = satellite_braid(k, beta_r);
        const BraidWord b = satellite_braid(minus_k, shifted);
        const BraidWord target = cable_braid(connected_sum(k, minus_k), m, static_cast<std::int64_t>(m) * (r - s));
        merge = detail::run_merge(a, b, m, target, opt.compare_alexander, res.certifications);
        res.companion_stage = merge;
    }

    const std::int64_t q0 = static_cast<std::int64_t>(m) * (r - s);
    // g(r) - g(s) = nu(start) - (m-1) m (r-s) / 2.
    const HalfInt shift = half_product(m - 1, q0);
    auto branch = [&](const char* label, std::int64_t k) {
        InequalityBranch br;
        br.label = label;
        br.offset = k;
        br.target_q = q0 + k;
        br.stages.push_back({"merge K_{beta_r} # (-K)_{(beta^-1)_{-s}} into (K#-K)_{m,m(r-s)}",
                             static_cast<std::size_t>(m - 1), !merge.has_value(), merge});
        br.stages.push_back({"(K#-K)_{m,m(r-s)} concordant to T_{m,m(r-s)}", 0, true, std::nullopt});
        CobordismWitness ladder = torus_ladder(m, q0, k);
        res.certifications.push_back({std::string(label) + " ladder replays", ladder.replays(),
                                      std::to_string(ladder.band_count()) + " bands"});
        br.stages.push_back({"torus ladder", ladder.band_count(), false, std::move(ladder)});
        br.bound = detail::slice_interval(m, br.target_q, br.bands(), shift);
        const std::size_t want = static_cast<std::size_t>(2 * (m - 1));
        res.certifications.push_back({std::string(label) + " band total", br.bands() == want,
                                      std::to_string(br.bands()) + " vs " + std::to_string(want)});
        return br;
    };
    res.plus = branch("plus", 1);
    res.minus = branch("minus", -1);
    res.intersection = detail::intersect(res.plus->bound, res.minus->bound);
    detail::expect_unit_interval(res.intersection, m, res.certifications);
    return res;
}

struct DerivationLine {
    std::string statement;
    HalfInt value;
};

/// Replay of the chain proving the cable bounds from the r-indexed bounds
/// and monotonicity of h, plus the two equality-case contradictions.
struct Derivation {
    HalfInt tau;
    std::int64_t m = 2;
    std::int64_t n = 1;
    std::int64_t r = 0;        // largest r with m r + 1 < n
    std::int64_t r_prime = 0;  // smallest r' with m r' + 1 > n
    std::vector<DerivationLine> lines;
    NuInterval result;
    bool matches_bounds = false;
    /// tau = g: assuming nu(K_{m,n}) >= lower + 1 forces h(n) - h(mr+1) >= value.
    std::vector<DerivationLine> contradiction_lower;
    HalfInt contradiction_lower_value;
    /// tau = -g: assuming nu(K_{m,n}) <= upper - 1 forces h(mr'+1) - h(n) >= value.
    std::vector<DerivationLine> contradiction_upper;
    HalfInt contradiction_upper_value;

    bool contradictions_certified() const {
        return contradiction_lower_value > HalfInt{} && contradiction_upper_value > HalfInt{};
    }
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace detail

inline Derivation bounds_derivation(HalfInt tau, std::int64_t m, std::int64_t n) {
    if (m < 2) throw PreconditionError("derivation requires m >= 2");
    if (gcd64(m, n) != 1) throw PreconditionError("derivation requires gcd(m, n) = 1");
    Derivation dv;
    dv.tau = tau;
    dv.m = m;
    dv.n = n;
    // m r + 1 < n  <=>  r <= floor((n - 2) / m)
    dv.r = detail::floor_div(n - 2, m);
    // m r' + 1 > n  <=>  r' >= floor((n - 1) / m) + 1
    dv.r_prime = detail::floor_div(n - 1, m) + 1;
    const std::int64_t a = m * dv.r + 1;
    const std::int64_t b = m * dv.r_prime + 1;
    auto add = [&](std::string s, HalfInt v) { dv.lines.push_back({std::move(s), v}); };

    const NuInterval at_a = hedden_bounds(tau, m, dv.r);
    const NuInterval at_b = hedden_bounds(tau, m, dv.r_prime);
    const std::string sa = std::to_string(a), sb = std::to_string(b), sn = std::to_string(n);
    add("nu(K_{m," + sa + "}) <= m tau + m r (m-1)/2 + (m-1)", at_a.upper);
    const HalfInt h_a_upper = at_a.upper - half_product(m - 1, a);
    add("h(" + sa + ") <= upper - (m-1)(" + sa + ")/2", h_a_upper);
    add("h(" + sn + ") <= h(" + sa + ") since " + sn + " > " + sa, h_a_upper);
    const HalfInt upper = h_a_upper + half_product(m - 1, n);
    add("nu(K_{m," + sn + "}) = h(" + sn + ") + (m-1)(" + sn + ")/2 <=", upper);
    add("nu(K_{m," + sb + "}) >= m tau + m r' (m-1)/2", at_b.lower);
    const HalfInt h_b_lower = at_b.lower - half_product(m - 1, b);
    add("h(" + sb + ") >= lower - (m-1)(" + sb + ")/2", h_b_lower);
    add("h(" + sn + ") >= h(" + sb + ") since " + sn + " < " + sb, h_b_lower);
    const HalfInt lower = h_b_lower + half_product(m - 1, n);
    add("nu(K_{m," + sn + "}) = h(" + sn + ") + (m-1)(" + sn + ")/2 >=", lower);
    dv.result = {lower, upper};
    dv.matches_bounds = dv.result == corollary_bounds(tau, m, n);

    // Equality case tau = g: nu(K_{m,mr+1}) sits on the lower endpoint.
    {
        const HalfInt nu_a = at_a.lower;
        const HalfInt assumed = corollary_bounds(tau, m, n).lower + HalfInt::from_int(1);
        const HalfInt h_a = nu_a - half_product(m - 1, a);
        const HalfInt h_n = assumed - half_product(m - 1, n);
        dv.contradiction_lower = {
            {"nu(K_{m," + sa + "}) = m tau + m r (m-1)/2", nu_a},
            {"assume nu(K_{m," + sn + "}) >= lower + 1", assumed},
            {"h(" + sa + ") = nu(K_{m," + sa + "}) - (m-1)(" + sa + ")/2", h_a},
            {"h(" + sn + ") - h(" + sa + ") >=", h_n - h_a},
        };
        dv.contradiction_lower_value = h_n - h_a;
    }
    // Equality case tau = -g: nu(K_{m,mr'+1}) sits on the upper endpoint.
    {
        const HalfInt nu_b = at_b.upper;
        const HalfInt assumed = corollary_bounds(tau, m, n).upper - HalfInt::from_int(1);
        const HalfInt h_b = nu_b - half_product(m - 1, b);
        const HalfInt h_n = assumed - half_product(m - 1, n);
        dv.contradiction_upper = {
            {"nu(K_{m," + sb + "}) = m tau + m r' (m-1)/2 + (m-1)", nu_b},
            {"assume nu(K_{m," + sn + "}) <= upper - 1", assumed},
            {"h(" + sb + ") = nu(K_{m," + sb + "}) - (m-1)(" + sb + ")/2", h_b},
            {"h(" + sb + ") - h(" + sn + ") >=", h_b - h_n},
        };
        dv.contradiction_upper_value = h_b - h_n;
    }
    return dv;
}

} // namespace cablekit

#endif // CABLEKIT_COBORDISM_HPP
