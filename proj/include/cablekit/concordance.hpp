#ifndef CABLEKIT_CONCORDANCE_HPP
#define CABLEKIT_CONCORDANCE_HPP

// Arithmetic of concordance invariants nu (tau, or s/2) on cables and
// twisted satellites: torus-knot values, the h and g correction functions,
// the cable bounds with their equality cases, and the obstruction tests.
// Every quantity is an exact half-integer.

#include <cablekit/braid.hpp>
#include <cablekit/error.hpp>

#include <cstdint>
#include <cstdlib>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cablekit {

/// Exact element of (1/2)Z, stored doubled.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_doubled(std::int64_t d) { return HalfInt(d); }
    static constexpr HalfInt from_int(std::int64_t n) { return HalfInt(2 * n); }

    constexpr std::int64_t doubled() const noexcept { return d_; }
    constexpr bool is_integer() const noexcept { return d_ % 2 == 0; }
    /// Value as an integer; throws if the value is a proper half-integer.
    std::int64_t as_integer() const {
        if (!is_integer()) throw InvariantViolation("half-integer " + to_string() + " is not an integer");
        return d_ / 2;
    }

    constexpr HalfInt operator-() const { return HalfInt(-d_); }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.d_ + b.d_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.d_ - b.d_); }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return HalfInt(k * a.d_); }
    friend constexpr HalfInt operator*(HalfInt a, std::int64_t k) { return HalfInt(k * a.d_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
    friend constexpr bool operator==(HalfInt, HalfInt) = default;

    /// "5", "-3/2".
    std::string to_string() const {
        if (is_integer()) return std::to_string(d_ / 2);
        return std::to_string(d_) + "/2";
    }

private:
    constexpr explicit HalfInt(std::int64_t d) : d_(d) {}
    std::int64_t d_ = 0;
};

/// (a * b) / 2 as an exact half-integer.
constexpr HalfInt half_product(std::int64_t a, std::int64_t b) { return HalfInt::from_doubled(a * b); }

struct NuInterval {
    HalfInt lower;
    HalfInt upper;

    HalfInt width() const { return upper - lower; }
    bool contains(HalfInt x) const { return lower <= x && x <= upper; }
    friend bool operator==(const NuInterval&, const NuInterval&) = default;
};

/// Which invariant a table column carries; the calculus is the same for both.
enum class NuKind { tau, s_half };

struct KnotRecord {
    std::string name;
    std::optional<BraidWord> braid;
    std::optional<HalfInt> tau;
    std::optional<HalfInt> s_half;
    std::optional<int> genus3;
    std::optional<int> genus4;
    std::optional<bool> in_P;

    std::optional<HalfInt> nu(NuKind kind) const { return kind == NuKind::tau ? tau : s_half; }

    /// Violated constraints, empty when the record is consistent.
    std::vector<std::string> violations() const {
        std::vector<std::string> out;
        auto abs2 = [](HalfInt h) { return std::llabs(h.doubled()); };
        if (genus3 && *genus3 < 0) out.push_back("g3 must be nonnegative");
        if (genus4 && *genus4 < 0) out.push_back("g4 must be nonnegative");
        if (genus3 && genus4 && *genus4 > *genus3) out.push_back("g4 <= g3 violated");
        if (tau && !tau->is_integer()) out.push_back("tau must be an integer");
        if (s_half && !s_half->is_integer()) out.push_back("s/2 must be an integer");
        if (tau && genus4 && abs2(*tau) > 2LL * *genus4) out.push_back("|tau| <= g4 violated");
        if (s_half && genus4 && abs2(*s_half) > 2LL * *genus4) out.push_back("|s/2| <= g4 violated");
        if (tau && genus3 && abs2(*tau) > 2LL * *genus3) out.push_back("|tau| <= g3 violated");
        if (in_P && *in_P && tau && genus3 && *tau != HalfInt::from_int(*genus3))
            out.push_back("membership in P requires tau = g3");
        return out;
    }
};

namespace detail {

inline std::int64_t igcd(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline void require_coprime(std::int64_t m, std::int64_t n, const char* what) {
    if (igcd(m, n) != 1)
        throw PreconditionError(std::string(what) + " requires gcd(m, n) = 1 (m=" + std::to_string(m) +
                                ", n=" + std::to_string(n) + ")");
}

inline void require_m(std::int64_t m, bool allow_m1, const char* what) {
    if (m >= 2) return;
    if (m == 1 && allow_m1) return;
    throw PreconditionError(std::string(what) + " requires m >= 2" + (m == 1 ? " (pass the degenerate flag for m = 1)" : ""));
}

} // namespace detail

/// nu(T_{m,n}) = (m-1)(n-1)/2 for coprime m, n >= 1.
inline HalfInt torus_tau(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw PreconditionError("torus_tau requires m, n >= 1");
    detail::require_coprime(m, n, "torus_tau");
    return half_product(m - 1, n - 1);
}

/// Extends torus_tau to n < 0 through nu(-K) = -nu(K).
inline HalfInt torus_tau_signed(std::int64_t m, std::int64_t n) {
    if (m < 1) throw PreconditionError("torus_tau_signed requires m >= 1");
    detail::require_coprime(m, n, "torus_tau_signed");
    return n > 0 ? torus_tau(m, n) : -torus_tau(m, -n);
}

/// Bounds on nu(K_{m, mr+1}) in terms of nu(K):
/// [m nu + mr(m-1)/2, m nu + mr(m-1)/2 + m - 1].
inline NuInterval hedden_bounds(HalfInt tau_k, std::int64_t m, std::int64_t r, bool allow_m1 = false) {
    detail::require_m(m, allow_m1, "hedden_bounds");
    const HalfInt lower = m * tau_k + half_product(m * r, m - 1);
    return {lower, lower + HalfInt::from_int(m - 1)};
}

struct EqualityValue {
    std::optional<HalfInt> value;
    /// Set when tau = g = -g = 0, where both clauses apply; the companion is
    /// then outside the nontrivial-knot hypothesis and the tau = g clause is
    /// returned.
    bool ambiguous = false;
};

namespace detail {

inline EqualityValue pick_endpoint(HalfInt tau_k, std::int64_t g3, const NuInterval& iv) {
    EqualityValue out;
    const bool plus = tau_k == HalfInt::from_int(g3);
    const bool minus = tau_k == HalfInt::from_int(-g3);
    if (plus) out.value = iv.lower;
    else if (minus) out.value = iv.upper;
    out.ambiguous = plus && minus && iv.lower != iv.upper;
    return out;
}

} // namespace detail

inline EqualityValue hedden_equality(HalfInt tau_k, std::int64_t g3, std::int64_t m, std::int64_t r,
                                     bool allow_m1 = false) {
    return detail::pick_endpoint(tau_k, g3, hedden_bounds(tau_k, m, r, allow_m1));
}

/// Bounds on nu(K_{m,n}) for every n coprime to m:
/// [m nu + (m-1)(n-1)/2, m nu + (m-1)(n+1)/2].
inline NuInterval corollary_bounds(HalfInt tau_k, std::int64_t m, std::int64_t n, bool allow_m1 = false) {
    detail::require_m(m, allow_m1, "corollary_bounds");
    detail::require_coprime(m, n, "corollary_bounds");
    return {m * tau_k + half_product(m - 1, n - 1), m * tau_k + half_product(m - 1, n + 1)};
}

inline EqualityValue corollary_equality(HalfInt tau_k, std::int64_t g3, std::int64_t m, std::int64_t n,
                                        bool allow_m1 = false) {
    return detail::pick_endpoint(tau_k, g3, corollary_bounds(tau_k, m, n, allow_m1));
}

using NuTable = std::map<std::int64_t, HalfInt>;

/// h(n) = nu(K_{m,n}) - (m-1) n / 2 on a table keyed by n.
inline NuTable h_function(const NuTable& nu_values, std::int64_t m) {
    if (m < 1) throw PreconditionError("h_function requires m >= 1");
    NuTable out;
    for (const auto& [n, nu] : nu_values) {
        detail::require_coprime(m, n, "h_function key");
        out.emplace(n, nu - half_product(m - 1, n));
    }
    return out;
}

/// g(r) = nu(K_{beta_r}) - (m-1) m r / 2; integer-valued on valid input.
inline NuTable g_function(const NuTable& nu_values, std::int64_t m) {
    if (m < 1) throw PreconditionError("g_function requires m >= 1");
    NuTable out;
    for (const auto& [r, nu] : nu_values) {
        const HalfInt g = nu - half_product((m - 1) * m, r);
        if (!g.is_integer())
            throw InvariantViolation("g(" + std::to_string(r) + ") = " + g.to_string() + " is not an integer");
        out.emplace(r, g);
    }
    return out;
}

struct MonotoneVerdict {
    bool ok = true;
    /// First violating pair (larger key, smaller key).
    std::optional<std::pair<std::int64_t, std::int64_t>> violation;
    std::string reason;
};

/// Checks -(m-1) <= f(a) - f(b) <= 0 for every pair of keys a > b.
inline MonotoneVerdict check_drop_bounded(const NuTable& f, std::int64_t m) {
    const HalfInt max_drop = HalfInt::from_int(m - 1);
    for (auto lo = f.begin(); lo != f.end(); ++lo) {
        for (auto hi = std::next(lo); hi != f.end(); ++hi) {
            const HalfInt diff = hi->second - lo->second;
            if (diff > HalfInt{}) {
                return {false, std::make_pair(hi->first, lo->first),
                        "increase " + diff.to_string() + " from " + std::to_string(lo->first) + " to " +
                            std::to_string(hi->first)};
            }
            if (diff < -max_drop) {
                return {false, std::make_pair(hi->first, lo->first),
                        "drop " + (-diff).to_string() + " exceeds m-1 = " + max_drop.to_string() + " from " +
                            std::to_string(lo->first) + " to " + std::to_string(hi->first)};
            }
        }
    }
    return {};
}

inline MonotoneVerdict check_h_monotone(const NuTable& h, std::int64_t m) { return check_drop_bounded(h, m); }
inline MonotoneVerdict check_g_monotone(const NuTable& g, std::int64_t m) { return check_drop_bounded(g, m); }

/// Stabilized offset of nu(K_{m,n}) from nu(T_{m,n}) at one end of a table.
struct EventualOffset {
    HalfInt c;
    /// Above: the offset holds for every tabulated n > threshold.
    /// Below: for every tabulated n < threshold.
    std::int64_t threshold = 0;
    std::size_t run_length = 0;
};

namespace detail {

inline void require_monotone(const NuTable& h, std::int64_t m) {
    const auto v = check_h_monotone(h, m);
    if (!v.ok) throw InvariantViolation("h table is not monotone: " + v.reason);
}

} // namespace detail

/// Offset c with nu(K_{m,n}) = nu(T_{m,n}) + c for large n. Requires the
/// largest `window` positive keys (default m) to carry one h value.
inline EventualOffset eventual_constant_offset(const NuTable& h, std::int64_t m, std::size_t window = 0) {
    detail::require_monotone(h, m);
    if (window == 0) window = static_cast<std::size_t>(m);
    std::vector<std::pair<std::int64_t, HalfInt>> pos;
    for (const auto& kv : h)
        if (kv.first > 0) pos.push_back(kv);
    if (pos.size() < window) throw PreconditionError("insufficient range: too few positive keys to certify constancy");
    const HalfInt tail = pos.back().second;
    std::size_t run = 0;
    while (run < pos.size() && pos[pos.size() - 1 - run].second == tail) ++run;
    if (run < window) throw PreconditionError("insufficient range: h has not stabilized at the top of the table");
    // For n > 0, h of the unknot table is -(m-1)/2.
    return {tail + half_product(m - 1, 1), pos[pos.size() - run].first - 1, run};
}

/// The n < N' analogue: offset c' for very negative n.
inline EventualOffset eventual_constant_offset_below(const NuTable& h, std::int64_t m, std::size_t window = 0) {
    detail::require_monotone(h, m);
    if (window == 0) window = static_cast<std::size_t>(m);
    std::vector<std::pair<std::int64_t, HalfInt>> neg;
    for (const auto& kv : h)
        if (kv.first < 0) neg.push_back(kv);
    if (neg.size() < window) throw PreconditionError("insufficient range: too few negative keys to certify constancy");
    const HalfInt head = neg.front().second;
    std::size_t run = 0;
    while (run < neg.size() && neg[run].second == head) ++run;
    if (run < window) throw PreconditionError("insufficient range: h has not stabilized at the bottom of the table");
    // For n < 0, h of the unknot table is (m-1)/2.
    return {head - half_product(m - 1, 1), neg[run - 1].first + 1, run};
}

/// Membership of K_{m,n} in the class P = {tau = g}, given that of K.
inline bool class_P_propagate(bool in_P, std::int64_t n) { return in_P && n > 0; }

enum class Verdict { obstructed, consistent, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::obstructed: return "obstructed";
    case Verdict::consistent: return "consistent";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct ObstructionResult {
    Verdict verdict = Verdict::inconclusive;
    std::string reason;
    std::vector<std::string> missing;
};

/// K_{m,n} cannot be a C-knot when n < -2 m tau / (m - 1) - 1. Compared
/// exactly as (n + 1)(m - 1) < -m (2 tau).
inline ObstructionResult c_knot_obstruction(HalfInt tau_k, std::int64_t m, std::int64_t n) {
    detail::require_m(m, false, "c_knot_obstruction");
    detail::require_coprime(m, n, "c_knot_obstruction");
    const bool obstructed = (n + 1) * (m - 1) < -m * tau_k.doubled();
    ObstructionResult out;
    out.verdict = obstructed ? Verdict::obstructed : Verdict::consistent;
    std::ostringstream os;
    std::int64_t num = -m * tau_k.doubled() - (m - 1), den = m - 1;
    const std::int64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
    os << "C-knot cables need n >= " << num;
    if (den != 1) os << "/" << den;
    out.reason = os.str();
    return out;
}

namespace detail {

/// Shared necessary condition: n > 0 and tau(K) = g(K) for a nontrivial K.
inline ObstructionResult necessary_n_positive_and_P(const KnotRecord& k, std::int64_t m, std::int64_t n,
                                                    const char* property) {
    ObstructionResult out;
    if (!k.tau) out.missing.push_back("tau");
    if (!k.genus3) out.missing.push_back("g3");
    if (!out.missing.empty()) {
        out.verdict = Verdict::inconclusive;
        out.reason = "missing fields";
        return out;
    }
    require_coprime(m, n, property);
    if (*k.genus3 == 0) {
        out.verdict = Verdict::inconclusive;
        out.reason = "companion is the unknot; the cable is a torus knot, outside the nontrivial-companion hypothesis";
        return out;
    }
    const bool in_p = *k.tau == HalfInt::from_int(*k.genus3);
    if (!in_p) {
        out.verdict = Verdict::obstructed;
        out.reason = std::string(property) + " requires tau(K) = g(K)";
    } else if (n <= 0) {
        out.verdict = Verdict::obstructed;
        out.reason = std::string(property) + " requires n > 0";
    } else {
        out.verdict = Verdict::consistent;
        out.reason = "necessary conditions n > 0 and tau(K) = g(K) hold";
    }
    return out;
}

} // namespace detail

/// K_{m,n} bounding a complex curve of genus g(K_{m,n}) forces n > 0 and tau(K) = g(K).
inline ObstructionResult complex_curve_obstruction(const KnotRecord& k, std::int64_t m, std::int64_t n) {
    return detail::necessary_n_positive_and_P(k, m, n, "a genus-minimizing complex curve");
}

/// A positive lens space (or L-space) surgery on K_{m,n} forces n > 0 and tau(K) = g(K).
inline ObstructionResult lspace_obstruction(const KnotRecord& k, std::int64_t m, std::int64_t n) {
    return detail::necessary_n_positive_and_P(k, m, n, "an L-space surgery");
}

/// Positive knots lie in P, so a positive K_{m,n} needs K in P and n > 0.
inline ObstructionResult positivity_obstruction(const KnotRecord& k, std::int64_t m, std::int64_t n) {
    return detail::necessary_n_positive_and_P(k, m, n, "positivity");
}

// ---------------------------------------------------------------------------
// Knot-table CSV: header name,braid,strands,tau2,s2,g3,g4 (tau2 and s2 are
// doubled integers; empty cells are unknown).

struct TableError {
    std::size_t row = 0;  // 1-based line number in the file
    std::vector<std::string> problems;
};

struct KnotTable {
    std::vector<KnotRecord> records;
    std::vector<TableError> errors;

    bool ok() const { return errors.empty(); }
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') quoted = !quoted;
        else if (c == ',' && !quoted) { out.push_back(cur); cur.clear(); }
        else cur.push_back(c);
    }
    out.push_back(cur);
    for (auto& f : out) {
        while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
        std::size_t i = 0;
        while (i < f.size() && std::isspace(static_cast<unsigned char>(f[i]))) ++i;
        f.erase(0, i);
    }
    return out;
}

inline std::optional<long long> parse_optional_int(const std::string& cell, const char* column,
                                                   std::vector<std::string>& problems) {
    if (cell.empty()) return std::nullopt;
    std::size_t used = 0;
    try {
        long long v = std::stoll(cell, &used);
        if (used == cell.size()) return v;
    } catch (const std::exception&) {
    }
    problems.push_back(std::string(column) + " is not an integer: '" + cell + "'");
    return std::nullopt;
}

} // namespace detail

inline const char* knot_table_header() { return "name,braid,strands,tau2,s2,g3,g4"; }

inline KnotTable parse_knot_table(std::istream& in) {
    KnotTable table;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = detail::split_csv_line(line);
        if (!header_seen) {
            header_seen = true;
            std::string joined;
            for (std::size_t i = 0; i < cells.size(); ++i) joined += (i ? "," : "") + cells[i];
            if (joined != knot_table_header())
                table.errors.push_back({lineno, {"header must be '" + std::string(knot_table_header()) + "'"}});
            continue;
        }
        TableError err{lineno, {}};
        if (cells.size() != 7) {
            err.problems.push_back("expected 7 columns, found " + std::to_string(cells.size()));
            table.errors.push_back(std::move(err));
            continue;
        }
        KnotRecord rec;
        rec.name = cells[0];
        if (rec.name.empty()) err.problems.push_back("name is empty");
        const auto strands = detail::parse_optional_int(cells[2], "strands", err.problems);
        if (!cells[1].empty() || strands) {
            if (!strands) {
                err.problems.push_back("braid given without strands");
            } else {
                try {
                    rec.braid = parse_braid(cells[1], static_cast<int>(*strands));
                    if (!rec.braid->closure().is_knot()) err.problems.push_back("braid closure is not a knot");
                } catch (const Error& e) {
                    err.problems.push_back(std::string("braid: ") + e.what());
                }
            }
        }
        if (auto v = detail::parse_optional_int(cells[3], "tau2", err.problems)) rec.tau = HalfInt::from_doubled(*v);
        if (auto v = detail::parse_optional_int(cells[4], "s2", err.problems)) rec.s_half = HalfInt::from_doubled(*v);
        if (auto v = detail::parse_optional_int(cells[5], "g3", err.problems)) rec.genus3 = static_cast<int>(*v);
        if (auto v = detail::parse_optional_int(cells[6], "g4", err.problems)) rec.genus4 = static_cast<int>(*v);
        if (rec.tau && rec.genus3) rec.in_P = *rec.tau == HalfInt::from_int(*rec.genus3);
        for (auto& v : rec.violations()) err.problems.push_back(std::move(v));
        if (err.problems.empty()) table.records.push_back(std::move(rec));
        else table.errors.push_back(std::move(err));
    }
    if (!header_seen) table.errors.push_back({0, {"empty table"}});
    return table;
}

inline KnotTable parse_knot_table(const std::string& text) {
    std::istringstream in(text);
    return parse_knot_table(in);
}

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const NuInterval& iv) {
    return os << "[" << iv.lower.to_string() << ", " << iv.upper.to_string() << "]";
}

} // namespace cablekit

#endif // CABLEKIT_CONCORDANCE_HPP
