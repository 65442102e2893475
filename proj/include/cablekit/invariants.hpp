#ifndef CABLEKIT_INVARIANTS_HPP
#define CABLEKIT_INVARIANTS_HPP

// Classical invariants of braid closures: Seifert matrices, the Alexander
// polynomial by two independent routes, signatures and Tristram-Levine
// signatures, plus the classical cable formulas as checkable predictions.
//
// Sign convention: sigma_i is a positive crossing and the Seifert form is
// normalized so that the right-handed trefoil (sigma_1^3) has signature -2.

#include <cablekit/braid.hpp>
#include <cablekit/error.hpp>
#include <cablekit/laurent.hpp>
#include <cablekit/linalg.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace cablekit {

struct SeifertData {
    Matrix<BigInt> matrix;
    int genus = 0;
    int components = 1;

    std::size_t rank() const noexcept { return matrix.rows(); }
};

namespace detail {

/// A first-homology generator of the braid Seifert surface: the loop through
/// the bands of two consecutive letters with the same index.
struct SurfaceLoop {
    int index;
    std::size_t first;
    std::size_t second;
};

inline std::vector<SurfaceLoop> surface_loops(const BraidWord& b) {
    std::vector<SurfaceLoop> loops;
    const auto& word = b.letters();
    for (int i = 1; i < b.strands(); ++i) {
        std::optional<std::size_t> prev;
        for (std::size_t p = 0; p < word.size(); ++p) {
            if (word[p].index != i) continue;
            if (prev) loops.push_back({i, *prev, p});
            prev = p;
        }
    }
    return loops;
}

inline bool interleaved(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return a < c && c < b && b < d;
}

} // namespace detail

/// Seifert matrix of the closed-braid Seifert surface (one disk per strand,
/// one half-twisted band per letter). Requires every generator to occur;
/// pass stabilize = true to insert cancelling letter pairs for absent ones.
inline SeifertData seifert_matrix(const BraidWord& input, bool stabilize = false) {
    std::vector<bool> present(static_cast<std::size_t>(input.strands()), false);
    for (const Letter& l : input.letters()) present[static_cast<std::size_t>(l.index)] = true;
    for (int i = 1; i < input.strands(); ++i) {
        if (!present[static_cast<std::size_t>(i)] && !stabilize)
            throw PreconditionError("generator index " + std::to_string(i) +
                                    " absent: Seifert surface is disconnected; stabilize by inserting "
                                    "sigma_i sigma_i^-1 for each missing i");
    }
    const BraidWord b = stabilize ? stabilize_missing_generators(input) : input;
    const auto& word = b.letters();
    const auto loops = detail::surface_loops(b);
    const std::size_t r = loops.size();
    Matrix<BigInt> v(r, r, BigInt(0));
    for (std::size_t a = 0; a < r; ++a) {
        const auto& la = loops[a];
        v(a, a) = -(word[la.first].sign + word[la.second].sign) / 2;
        for (std::size_t c = 0; c < r; ++c) {
            if (c == a) continue;
            const auto& lc = loops[c];
            if (lc.index == la.index) {
                // Consecutive loops share one band.
                if (la.second == lc.first) v(a, c) = word[la.second].sign > 0 ? 1 : 0;
                else if (lc.second == la.first) v(a, c) = word[la.first].sign < 0 ? -1 : 0;
            } else if (lc.index == la.index + 1) {
                // Loops on adjacent disk pairs link once when their arcs on the
                // shared disk interleave.
                if (detail::interleaved(la.first, la.second, lc.first, lc.second)) v(a, c) = -1;
                else if (detail::interleaved(lc.first, lc.second, la.first, la.second)) v(a, c) = 1;
            }
        }
    }
    SeifertData out;
    out.matrix = std::move(v);
    out.components = b.closure().components;
    out.genus = static_cast<int>((static_cast<long long>(r) - out.components + 1) / 2);
    return out;
}

/// det(V - t V^T) exactly as computed, without normalization.
inline LaurentPoly seifert_determinant(const SeifertData& s) {
    const std::size_t r = s.rank();
    Matrix<LaurentPoly> m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            m(i, j) = LaurentPoly::constant(s.matrix(i, j)) - LaurentPoly::monomial(s.matrix(j, i), 1);
    return determinant(std::move(m));
}

/// Alexander polynomial from the Seifert form, in symmetric normal form with
/// positive leading coefficient.
inline LaurentPoly alexander_from_seifert(const SeifertData& s) {
    return symmetric_normal_form(seifert_determinant(s));
}

/// Reduced Burau image of one letter on m strands, m >= 2.
inline Matrix<LaurentPoly> reduced_burau(int strands, const Letter& l) {
    const std::size_t d = static_cast<std::size_t>(strands - 1);
    const LaurentPoly one = LaurentPoly::one();
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
    Matrix<LaurentPoly> s(d, d);
    for (std::size_t i = 0; i < d; ++i) s(i, i) = one;
    const bool pos = l.sign > 0;
    if (d == 1) {
        s(0, 0) = pos ? -t : -tinv;
    } else if (l.index == 1) {
        s(0, 0) = pos ? -t : -tinv;
        s(1, 0) = pos ? one : tinv;
    } else if (l.index == strands - 1) {
        const std::size_t k = d - 2;
        s(k, k + 1) = pos ? t : one;
        s(k + 1, k + 1) = pos ? -t : -tinv;
    } else {
        const std::size_t k = static_cast<std::size_t>(l.index - 2);
        s(k, k + 1) = pos ? t : one;
        s(k + 1, k + 1) = pos ? -t : -tinv;
        s(k + 2, k + 1) = pos ? one : tinv;
    }
    return s;
}

/// Alexander polynomial of any closed braid (knot or link) from the reduced
/// Burau representation: det(I - psi(b)) (1 - t) / (1 - t^m).
inline LaurentPoly alexander_burau_any(const BraidWord& b) {
    const int m = b.strands();
    if (m == 1) return LaurentPoly::one();
    const std::size_t d = static_cast<std::size_t>(m - 1);
    Matrix<LaurentPoly> acc(d, d);
    for (std::size_t i = 0; i < d; ++i) acc(i, i) = LaurentPoly::one();
    for (const Letter& l : b.letters()) {
        const Matrix<LaurentPoly> s = reduced_burau(m, l);
        // Only columns of s that differ from the identity change acc.
        for (std::size_t c = 0; c < d; ++c) {
            bool identity_column = true;
            for (std::size_t k = 0; k < d && identity_column; ++k)
                identity_column = s(k, c) == (k == c ? LaurentPoly::one() : LaurentPoly{});
            if (identity_column) continue;
            std::vector<LaurentPoly> column(d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t k = 0; k < d; ++k)
                    if (!s(k, c).is_zero() && !acc(r, k).is_zero()) column[r] += acc(r, k) * s(k, c);
            for (std::size_t r = 0; r < d; ++r) acc(r, c) = std::move(column[r]);
        }
    }
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) acc(r, c) = (r == c ? LaurentPoly::one() : LaurentPoly{}) - acc(r, c);
    const LaurentPoly det = determinant(std::move(acc));
    const LaurentPoly one_minus_t = LaurentPoly::one() - LaurentPoly::t();
    return symmetric_normal_form(exact_division(det * one_minus_t, LaurentPoly::one() - LaurentPoly::monomial(1, m)));
}

/// Independent Alexander route for knot closures.
inline LaurentPoly alexander_burau(const BraidWord& b) {
    if (!b.closure().is_knot()) throw PreconditionError("alexander_burau requires a knot closure");
    return alexander_burau_any(b);
}

/// Pairwise linking numbers of the closure's components. Components are
/// numbered as in Permutation::cycles(); the diagonal is zero.
inline std::vector<std::vector<std::int64_t>> linking_numbers(const BraidWord& b) {
    const auto cycles = b.permutation().cycles();
    std::vector<std::size_t> component(static_cast<std::size_t>(b.strands()));
    for (std::size_t c = 0; c < cycles.size(); ++c)
        for (int p : cycles[c]) component[static_cast<std::size_t>(p)] = c;
    // occupant[i]: the starting position of the strand now at position i
    std::vector<int> occupant(static_cast<std::size_t>(b.strands()));
    std::iota(occupant.begin(), occupant.end(), 0);
    std::vector<std::vector<std::int64_t>> twice(cycles.size(), std::vector<std::int64_t>(cycles.size(), 0));
    for (const Letter& l : b.letters()) {
        const auto lo = static_cast<std::size_t>(l.index - 1);
        const std::size_t x = component[static_cast<std::size_t>(occupant[lo])];
        const std::size_t y = component[static_cast<std::size_t>(occupant[lo + 1])];
        if (x != y) {
            twice[x][y] += l.sign;
            twice[y][x] += l.sign;
        }
        std::swap(occupant[lo], occupant[lo + 1]);
    }
    for (auto& row : twice)
        for (auto& v : row) v /= 2;
    return twice;
}

/// Off-diagonal linking numbers as a sorted list; independent of how the
/// components are numbered only up to that multiset.
inline std::vector<std::int64_t> linking_spectrum(const BraidWord& b) {
    const auto lk = linking_numbers(b);
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < lk.size(); ++i)
        for (std::size_t j = i + 1; j < lk.size(); ++j) out.push_back(lk[i][j]);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

/// Alexander polynomial of T_{m,n} from its closed form.
inline LaurentPoly torus_alexander(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw PreconditionError("torus_alexander requires m, n >= 1");
    if (gcd64(m, n) != 1) throw PreconditionError("torus_alexander requires gcd(m, n) = 1");
    if (m == 1 || n == 1) return LaurentPoly::one();
    const LaurentPoly num = t_power_minus_one(m * n) * t_power_minus_one(1);
    const LaurentPoly den = t_power_minus_one(m) * t_power_minus_one(n);
    return symmetric_normal_form(exact_division(num, den));
}

/// Delta_K(t^m) * Delta_{T_{m,|n|}}(t).
inline LaurentPoly cable_alexander(const LaurentPoly& delta_k, std::int64_t m, std::int64_t n) {
    if (m < 1) throw PreconditionError("cable_alexander requires m >= 1");
    if (gcd64(m, n) != 1) throw PreconditionError("cable_alexander requires gcd(m, n) = 1");
    const LaurentPoly torus = (m == 1 || n == 1 || n == -1) ? LaurentPoly::one() : torus_alexander(m, n < 0 ? -n : n);
    return symmetric_normal_form(delta_k.substitute_power(m) * torus);
}

inline Matrix<Rational> symmetrized(const SeifertData& s) {
    const std::size_t r = s.rank();
    Matrix<Rational> out(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out(i, j) = Rational(s.matrix(i, j) + s.matrix(j, i));
    return out;
}

/// Signature of V + V^T.
inline long long signature(const SeifertData& s) { return symmetric_inertia(symmetrized(s)).signature(); }

struct SignatureValue {
    long long value = 0;
    /// omega = exp(2 pi i theta).
    Rational theta;
    /// Rational point of the form S - i u A (S = V + V^T, A = V - V^T) at
    /// which the inertia was computed exactly.
    Rational evaluated_at;
    /// Half-width of the rational bracket around 2 cos(2 pi theta) that was
    /// certified free of Alexander roots.
    double margin = 0.0;
    std::string certification;
};

namespace detail {

/// R with Delta(e^{i phi}) = R(2 cos phi), for a symmetric Laurent Delta.
inline RationalPoly circle_polynomial(const LaurentPoly& sym) {
    if (sym.min_degree() != -sym.max_degree())
        throw PreconditionError("Tristram-Levine signatures need a symmetric Alexander polynomial");
    const std::int64_t d = sym.max_degree();
    std::vector<std::vector<Rational>> p;  // p[k] = t^k + t^-k as a polynomial in x
    p.push_back({Rational(2)});
    p.push_back({Rational(0), Rational(1)});
    for (std::int64_t k = 2; k <= d; ++k) {
        std::vector<Rational> next(static_cast<std::size_t>(k + 1), Rational(0));
        const auto& a = p[static_cast<std::size_t>(k - 1)];
        const auto& b = p[static_cast<std::size_t>(k - 2)];
        for (std::size_t i = 0; i < a.size(); ++i) next[i + 1] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) next[i] -= b[i];
        p.push_back(std::move(next));
    }
    std::vector<Rational> r(static_cast<std::size_t>(d + 1), Rational(0));
    r[0] += Rational(sym.coefficient(0));
    for (std::int64_t k = 1; k <= d; ++k) {
        const Rational c(sym.coefficient(k));
        const auto& pk = p[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < pk.size(); ++i) r[i] += c * pk[i];
    }
    return RationalPoly(std::move(r));
}

inline bool root_free(const RationalPoly& r, const Rational& lo, const Rational& hi) {
    if (r(lo) == 0 || r(hi) == 0) return false;
    return count_real_roots(r, lo, hi) == 0;
}

/// Continued-fraction convergents of x.
inline std::vector<Rational> convergents(double x, int count) {
    std::vector<Rational> out;
    BigInt h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    double rem = x;
    for (int i = 0; i < count; ++i) {
        const double a_d = std::floor(rem);
        if (!std::isfinite(a_d) || std::fabs(a_d) > 1e15) break;
        const BigInt a = static_cast<long long>(a_d);
        const BigInt h = a * h_prev + h_prev2;
        const BigInt k = a * k_prev + k_prev2;
        out.emplace_back(h, k);
        h_prev2 = h_prev; h_prev = h;
        k_prev2 = k_prev; k_prev = k;
        const double frac = rem - a_d;
        if (frac < 1e-15) break;
        rem = 1.0 / frac;
    }
    return out;
}

} // namespace detail

/// Tristram-Levine signature at omega = exp(2 pi i theta), theta in (0, 1).
///
/// Jump points are excluded exactly (Phi_q divides Delta for theta = p/q in
/// lowest terms). Off jump points the value is the exact inertia of
/// S - i u A over Q(i) at a rational u certified by a Sturm count to lie in
/// the same root-free arc as cot(pi theta); S - i cot(pi theta) A is the form
/// (1 - omega) V + (1 - conj omega) V^T divided by 1 - cos(2 pi theta) > 0.
inline SignatureValue tristram_levine(const SeifertData& s, const Rational& theta, const LaurentPoly& delta_raw) {
    if (theta <= 0 || theta >= 1) throw PreconditionError("theta must lie in (0, 1)");
    SignatureValue out;
    out.theta = theta;
    const std::size_t r = s.rank();
    if (r == 0) {
        out.certification = "empty form";
        return out;
    }
    if (delta_raw.is_zero()) throw JumpPointError("Alexander polynomial vanishes identically; every omega is a jump point");
    const BigInt q = boost::multiprecision::denominator(theta);
    if (q > 1000000) throw PreconditionError("theta denominator too large for the exact root test");
    const LaurentPoly phi = cyclotomic(static_cast<std::int64_t>(q));
    bool divides = true;
    try {
        (void)exact_division(delta_raw, phi);
    } catch (const NonExactDivision&) {
        divides = false;
    }
    if (divides) throw JumpPointError("omega = exp(2 pi i " + theta.str() + ") is a root of the Alexander polynomial");

    const LaurentPoly sym = symmetric_normal_form(delta_raw);
    const RationalPoly circle = detail::circle_polynomial(sym);

    const double th = static_cast<double>(theta);
    const double pi = std::acos(-1.0);
    constexpr double kMargin = 1e-12;
    const double x0 = 2.0 * std::cos(2.0 * pi * th);
    const Rational lo(x0 - kMargin), hi(x0 + kMargin);
    if (!detail::root_free(circle, lo, hi))
        throw JumpPointError("an Alexander root lies within the certification margin of omega = exp(2 pi i " +
                             theta.str() + ")");
    out.margin = kMargin;

    Rational u;
    bool found = false;
    if (theta == Rational(1, 2)) {
        u = 0;
        found = true;
    } else {
        const double u_approx = 1.0 / std::tan(pi * th);
        for (const Rational& cand : detail::convergents(u_approx, 60)) {
            if (cand == 0 || (cand > 0) != (u_approx > 0)) continue;
            const Rational x = Rational(2) * (cand * cand - 1) / (cand * cand + 1);
            const Rational a = x < lo ? x : lo;
            const Rational b = x > hi ? x : hi;
            if (detail::root_free(circle, a, b)) {
                u = cand;
                found = true;
                break;
            }
        }
    }
    if (!found) throw JumpPointError("could not certify a rational evaluation point for theta = " + theta.str());
    out.evaluated_at = u;

    Matrix<GaussianRational> h(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const BigInt sym_ij = s.matrix(i, j) + s.matrix(j, i);
            const BigInt anti_ij = s.matrix(i, j) - s.matrix(j, i);
            h(i, j) = {Rational(sym_ij), -u * Rational(anti_ij)};
        }
    const Inertia in = hermitian_inertia(std::move(h));
    if (in.zero != 0) throw JumpPointError("form is singular at the certified evaluation point");
    out.value = in.signature();
    out.certification = "exact inertia over Q(i), Sturm-certified root-free arc";
    return out;
}

inline SignatureValue tristram_levine(const SeifertData& s, const Rational& theta) {
    return tristram_levine(s, theta, seifert_determinant(s));
}

/// Both sides of sigma_omega(K_{m,n}) = sigma_{omega^m}(K) + sigma_omega(T_{m,n}).
struct LitherlandReport {
    long long cable_side = 0;
    long long companion_term = 0;
    long long torus_term = 0;
    Rational theta;
    Rational companion_theta;  // m theta mod 1; 0 means omega^m = 1

    long long predicted() const { return companion_term + torus_term; }
    bool holds() const { return cable_side == predicted(); }
};

inline LitherlandReport check_litherland(const BraidWord& companion, int m, std::int64_t n, const Rational& theta) {
    if (gcd64(m, n) != 1) throw PreconditionError("check_litherland requires gcd(m, n) = 1");
    LitherlandReport rep;
    rep.theta = theta;
    rep.cable_side = tristram_levine(seifert_matrix(cable_braid(companion, m, n)), theta).value;

    Rational mt = theta * m;
    const BigInt whole = boost::multiprecision::numerator(mt) / boost::multiprecision::denominator(mt);
    mt -= Rational(whole);
    rep.companion_theta = mt;
    if (mt != 0 && !companion.empty()) rep.companion_term = tristram_levine(seifert_matrix(companion), mt).value;

    const BraidWord torus = torus_braid(m, n);
    if (!torus.empty()) rep.torus_term = tristram_levine(seifert_matrix(torus), theta).value;
    return rep;
}

} // namespace cablekit

#endif // CABLEKIT_INVARIANTS_HPP
