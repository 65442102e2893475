#ifndef CABLEKIT_LINALG_HPP
#define CABLEKIT_LINALG_HPP

// Exact dense linear algebra: fraction-free determinants over Z[t, t^-1],
// inertia of rational symmetric and Gaussian-rational Hermitian matrices,
// and Sturm root counting for rational polynomials.

#include <cablekit/error.hpp>
#include <cablekit/laurent.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace cablekit {

using Rational = boost::multiprecision::cpp_rational;

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Bareiss fraction-free elimination; every division is exact in the ring.
inline LaurentPoly determinant(Matrix<LaurentPoly> a) {
    if (!a.square()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return LaurentPoly::one();
    LaurentPoly prev = LaurentPoly::one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return {};
            a.swap_rows(k, pivot);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = exact_division(num, prev);
            }
            a(i, k) = LaurentPoly{};
        }
        prev = a(k, k);
    }
    LaurentPoly det = a(n - 1, n - 1);
    return negate ? -det : det;
}

/// Integer determinant by Bareiss elimination.
inline BigInt determinant(Matrix<BigInt> a) {
    if (!a.square()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    BigInt prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return 0;
            a.swap_rows(k, pivot);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return negate ? BigInt(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Positive, negative and zero counts of a quadratic or Hermitian form.
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    long long signature() const { return static_cast<long long>(positive) - static_cast<long long>(negative); }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact Gaussian rational a + b i.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const Rational& d) { return {a.re / d, a.im / d}; }
};

/// Inertia of a Hermitian matrix over Q(i) by congruence (LDL*) elimination.
/// A zero diagonal with a nonzero off-diagonal entry h_ij is repaired by the
/// congruence e_i <- e_i + conj(h_ij) e_j, which makes the pivot 2|h_ij|^2.
inline Inertia hermitian_inertia(Matrix<GaussianRational> h) {
    if (!h.square()) throw PreconditionError("inertia of a non-square matrix");
    Inertia out;
    std::size_t n = h.rows();
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;
    while (!live.empty()) {
        std::size_t pos = live.size();
        for (std::size_t k = 0; k < live.size(); ++k)
            if (h(live[k], live[k]).re != 0) { pos = k; break; }
        if (pos == live.size()) {
            // All live diagonal entries vanish; look for an off-diagonal one.
            std::size_t pi = 0, pj = 0;
            bool found = false;
            for (std::size_t a = 0; a < live.size() && !found; ++a)
                for (std::size_t b = a + 1; b < live.size() && !found; ++b)
                    if (!h(live[a], live[b]).is_zero()) { pi = a; pj = b; found = true; }
            if (!found) {
                out.zero += live.size();
                break;
            }
            const std::size_t i = live[pi], j = live[pj];
            const GaussianRational c = h(i, j).conj();
            for (std::size_t r : live) h(r, i) = h(r, i) + c * h(r, j);
            for (std::size_t r : live) h(i, r) = h(i, r) + c.conj() * h(j, r);
            pos = pi;
        }
        const std::size_t p = live[pos];
        const Rational d = h(p, p).re;
        if (d > 0) ++out.positive;
        else ++out.negative;
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(pos));
        for (std::size_t r : live) {
            if (h(r, p).is_zero()) continue;
            const GaussianRational f = h(r, p) / d;
            for (std::size_t c : live) h(r, c) = h(r, c) - f * h(p, c);
        }
    }
    return out;
}

/// Inertia of a rational symmetric matrix.
inline Inertia symmetric_inertia(const Matrix<Rational>& s) {
    Matrix<GaussianRational> h(s.rows(), s.cols());
    for (std::size_t r = 0; r < s.rows(); ++r)
        for (std::size_t c = 0; c < s.cols(); ++c) h(r, c) = {s(r, c), 0};
    return hermitian_inertia(std::move(h));
}

/// Dense polynomial with rational coefficients, lowest degree first.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RationalPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
        return RationalPoly(std::move(d));
    }

    /// Remainder of division by a nonzero polynomial.
    RationalPoly remainder(const RationalPoly& d) const {
        std::vector<Rational> r = c_;
        const std::size_t dl = d.c_.size();
        while (r.size() >= dl && !r.empty()) {
            const Rational f = r.back() / d.c_.back();
            const std::size_t shift = r.size() - dl;
            for (std::size_t i = 0; i < dl; ++i) r[shift + i] -= f * d.c_[i];
            r.pop_back();
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        return RationalPoly(std::move(r));
    }

    RationalPoly operator-() const {
        RationalPoly out = *this;
        for (auto& x : out.c_) x = -x;
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Number of distinct real roots of p in the half-open interval (lo, hi],
/// by Sturm's theorem. p must be nonzero.
inline int count_real_roots(const RationalPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw PreconditionError("Sturm count of the zero polynomial");
    std::vector<RationalPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        RationalPoly r = -chain[chain.size() - 2].remainder(chain.back());
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    if (chain.back().is_zero()) chain.pop_back();
    auto sign_changes = [&](const Rational& x) {
        int changes = 0;
        int last = 0;
        for (const auto& q : chain) {
            const Rational v = q(x);
            const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    };
    return sign_changes(lo) - sign_changes(hi);
}

} // namespace cablekit

#endif // CABLEKIT_LINALG_HPP
