#ifndef CABLEKIT_LAURENT_HPP
#define CABLEKIT_LAURENT_HPP

// Exact one-variable Laurent polynomials with arbitrary-precision integer
// coefficients. The coefficient substrate for Alexander polynomials.

#include <cablekit/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cablekit {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[t, t^-1], stored as a dense coefficient run starting at
/// min_degree. Normalized: first and last coefficients are nonzero, and the
/// zero polynomial has no coefficients (its min_degree is 0).
class LaurentPoly {
public:
    LaurentPoly() = default;

    LaurentPoly(std::int64_t min_degree, std::vector<BigInt> coefficients)
        : min_degree_(min_degree), coeffs_(std::move(coefficients)) {
        normalize();
    }

    LaurentPoly(std::int64_t min_degree, std::initializer_list<long long> coefficients)
        : min_degree_(min_degree) {
        coeffs_.reserve(coefficients.size());
        for (long long c : coefficients) coeffs_.emplace_back(c);
        normalize();
    }

    static LaurentPoly constant(const BigInt& c) { return LaurentPoly(0, std::vector<BigInt>{c}); }
    static LaurentPoly monomial(const BigInt& c, std::int64_t degree) {
        return LaurentPoly(degree, std::vector<BigInt>{c});
    }
    static LaurentPoly one() { return constant(1); }
    /// The variable t.
    static LaurentPoly t() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t min_degree() const noexcept { return min_degree_; }
    std::int64_t max_degree() const noexcept {
        return min_degree_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    /// max_degree - min_degree; 0 for constants, -1 for the zero polynomial.
    std::int64_t span() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    BigInt coefficient(std::int64_t degree) const {
        if (is_zero() || degree < min_degree_ || degree > max_degree()) return 0;
        return coeffs_[static_cast<std::size_t>(degree - min_degree_)];
    }
    const BigInt& leading() const { return coeffs_.back(); }
    const BigInt& trailing() const { return coeffs_.front(); }

    /// Multiplication by t^k.
    LaurentPoly shifted(std::int64_t k) const {
        if (is_zero()) return {};
        LaurentPoly out = *this;
        out.min_degree_ += k;
        return out;
    }

    /// p(t^-1).
    LaurentPoly reflected() const {
        if (is_zero()) return {};
        std::vector<BigInt> c(coeffs_.rbegin(), coeffs_.rend());
        return LaurentPoly(-max_degree(), std::move(c));
    }

    /// p(t^m) for m >= 1.
    LaurentPoly substitute_power(std::int64_t m) const {
        if (m < 1) throw PreconditionError("substitute_power requires m >= 1");
        if (is_zero() || m == 1) return *this;
        std::vector<BigInt> c(static_cast<std::size_t>(span() * m + 1));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(m)] = coeffs_[i];
        return LaurentPoly(min_degree_ * m, std::move(c));
    }

    /// Value at t = x. Negative exponents are only supported for x = +-1.
    BigInt evaluate(const BigInt& x) const {
        if (is_zero()) return 0;
        if (min_degree_ < 0 && x != 1 && x != -1)
            throw PreconditionError("evaluate at a non-unit with negative exponents");
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        const std::int64_t e = min_degree_ < 0 ? -min_degree_ : min_degree_;
        for (std::int64_t i = 0; i < e; ++i) acc *= x;
        return acc;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.min_degree_ == b.min_degree_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly operator-() const {
        LaurentPoly out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const std::int64_t lo = std::min(a.min_degree_, b.min_degree_);
        const std::int64_t hi = std::max(a.max_degree(), b.max_degree());
        std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            c[static_cast<std::size_t>(a.min_degree_ - lo) + i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            c[static_cast<std::size_t>(b.min_degree_ - lo) + i] += b.coeffs_[i];
        return LaurentPoly(lo, std::move(c));
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return LaurentPoly(a.min_degree_ + b.min_degree_, std::move(c));
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Canonical text: "c*t^k" terms in ascending exponent order joined by
    /// " + ", e.g. "1*t^-1 + -1*t^0 + 1*t^1". The zero polynomial is "0".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << coeffs_[i] << "*t^" << (min_degree_ + static_cast<std::int64_t>(i));
        }
        return os.str();
    }

    /// Human-oriented rendering, e.g. "t - 1 + t^-1" (descending exponents).
    std::string pretty() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::int64_t d = max_degree(); d >= min_degree_; --d) {
            BigInt c = coefficient(d);
            if (c.is_zero()) continue;
            const bool neg = c < 0;
            BigInt mag = neg ? BigInt(-c) : c;
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            if (d == 0) { os << mag; continue; }
            if (mag != 1) os << mag;
            os << "t";
            if (d != 1) os << "^" << d;
        }
        return os.str();
    }

    static LaurentPoly parse(std::string_view text);

private:
    void normalize() {
        std::size_t lo = 0;
        while (lo < coeffs_.size() && coeffs_[lo].is_zero()) ++lo;
        if (lo == coeffs_.size()) {
            coeffs_.clear();
            min_degree_ = 0;
            return;
        }
        std::size_t hi = coeffs_.size();
        while (coeffs_[hi - 1].is_zero()) --hi;
        if (lo > 0 || hi < coeffs_.size()) {
            coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lo),
                                          coeffs_.begin() + static_cast<std::ptrdiff_t>(hi));
        }
        min_degree_ += static_cast<std::int64_t>(lo);
    }

    std::int64_t min_degree_ = 0;
    std::vector<BigInt> coeffs_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

inline BigInt parse_bigint(std::string_view s) {
    if (!is_integer_literal(s)) throw ParseError("expected an integer", std::string(s));
    if (s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
}

} // namespace detail

/// Inverse of to_string(). Also accepts bare constants and "t^k" terms.
inline LaurentPoly LaurentPoly::parse(std::string_view text) {
    text = detail::trim(text);
    if (text.empty()) throw ParseError("empty polynomial", "");
    LaurentPoly acc;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t plus = text.find('+', start);
        // A '+' directly after '^' or at the term start is a sign, not a separator.
        while (plus != std::string_view::npos &&
               (plus == start || detail::trim(text.substr(start, plus - start)).empty() ||
                text[plus - 1] == '^'))
            plus = text.find('+', plus + 1);
        std::string_view term =
            detail::trim(text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
        if (term.empty()) throw ParseError("empty term in polynomial", std::string(text));
        BigInt coeff = 1;
        std::int64_t degree = 0;
        const std::size_t tpos = term.find('t');
        if (tpos == std::string_view::npos) {
            coeff = detail::parse_bigint(term);
        } else {
            std::string_view head = detail::trim(term.substr(0, tpos));
            if (!head.empty()) {
                if (head.back() != '*') throw ParseError("expected '*' before t", std::string(term));
                head = detail::trim(head.substr(0, head.size() - 1));
                if (head == "-") coeff = -1;
                else coeff = detail::parse_bigint(head);
            }
            std::string_view tail = detail::trim(term.substr(tpos + 1));
            if (tail.empty()) {
                degree = 1;
            } else {
                if (tail.front() != '^') throw ParseError("expected '^' after t", std::string(term));
                tail = detail::trim(tail.substr(1));
                if (!detail::is_integer_literal(tail)) throw ParseError("bad exponent", std::string(term));
                degree = std::stoll(std::string(tail));
            }
        }
        acc += monomial(coeff, degree);
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return acc;
}

/// Raised by exact_division when the divisor does not divide the dividend.
class NonExactDivision : public Error {
public:
    explicit NonExactDivision(LaurentPoly remainder)
        : Error("non-exact Laurent division, remainder " + remainder.to_string()),
          remainder_(std::move(remainder)) {}
    const LaurentPoly& remainder() const noexcept { return remainder_; }

private:
    LaurentPoly remainder_;
};

/// Quotient p / q in Z[t, t^-1]; throws NonExactDivision carrying the
/// remainder of the underlying polynomial long division when q does not
/// divide p.
inline LaurentPoly exact_division(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (p.is_zero()) return {};
    // Reduce to ordinary polynomials with nonzero constant term in the divisor;
    // then divisibility in the Laurent ring equals divisibility in Z[t].
    std::vector<BigInt> rem = p.coefficients();
    const std::vector<BigInt>& d = q.coefficients();
    if (rem.size() < d.size()) throw NonExactDivision(p);
    const std::size_t qlen = rem.size() - d.size() + 1;
    std::vector<BigInt> quot(qlen);
    for (std::size_t k = qlen; k-- > 0;) {
        const BigInt& top = rem[k + d.size() - 1];
        if (top.is_zero()) continue;
        if (top % d.back() != 0) {
            throw NonExactDivision(LaurentPoly(p.min_degree(), rem));
        }
        BigInt c = top / d.back();
        quot[k] = c;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= c * d[j];
    }
    LaurentPoly r(p.min_degree(), rem);
    if (!r.is_zero()) throw NonExactDivision(r);
    return LaurentPoly(p.min_degree() - q.min_degree(), std::move(quot));
}

/// True iff p = +-t^k q for some integer k.
inline bool equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.coefficients().size() != q.coefficients().size()) return false;
    const LaurentPoly qs = q.shifted(p.min_degree() - q.min_degree());
    return p == qs || p == -qs;
}

/// Symmetric representative (min_degree = -max_degree when the span is even)
/// with positive leading coefficient. Odd spans are centered at the lower half.
inline LaurentPoly symmetric_normal_form(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly out = p.shifted(-(p.min_degree() + p.span() / 2));
    if (out.leading() < 0) out = -out;
    return out;
}

/// t^n - 1.
inline LaurentPoly t_power_minus_one(std::int64_t n) {
    return LaurentPoly::monomial(1, n) - LaurentPoly::one();
}

/// The cyclotomic polynomial Phi_n, via exact division of t^d - 1 by the
/// Phi_e for the proper divisors e of each divisor d of n.
inline LaurentPoly cyclotomic(std::int64_t n) {
    if (n < 1) throw PreconditionError("cyclotomic index must be >= 1");
    std::map<std::int64_t, LaurentPoly> phi;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        LaurentPoly acc = t_power_minus_one(d);
        for (const auto& [e, pe] : phi)
            if (d % e == 0) acc = exact_division(acc, pe);
        phi.emplace(d, std::move(acc));
    }
    return phi.at(n);
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.pretty(); }

} // namespace cablekit

#endif // CABLEKIT_LAURENT_HPP
