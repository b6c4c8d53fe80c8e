#pragma once

#include "curvesing/errors.hpp"
#include "curvesing/poly.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace curvesing {

/// Univariate power series truncated at order N: coefficients of t^0..t^N are
/// known, t^{N+1} and beyond are unknown. Arithmetic never widens the
/// truncation.
template <class C>
class BasicSeries {
public:
    BasicSeries() : BasicSeries("t", 0) {}
    BasicSeries(std::string var, int truncation)
        : var_(std::move(var)), c_(static_cast<std::size_t>(checked(truncation)) + 1) {}
    BasicSeries(std::string var, int truncation, const std::vector<C>& coeffs)
        : BasicSeries(std::move(var), truncation) {
        const std::size_t m = std::min(coeffs.size(), c_.size());
        std::copy(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(m), c_.begin());
    }

    static BasicSeries monomial(std::string var, int truncation, const C& c, int exponent) {
        BasicSeries s(std::move(var), truncation);
        if (exponent <= truncation) s.c_[static_cast<std::size_t>(exponent)] = c;
        return s;
    }
    /// Exact polynomial, truncated at the given order.
    static BasicSeries from_poly(std::string var, int truncation, const Poly<C>& p) {
        return BasicSeries(std::move(var), truncation, p.coeffs());
    }

    const std::string& var() const { return var_; }
    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<C>& coeffs() const { return c_; }

    const C& coeff(int k) const {
        if (k < 0 || k > truncation())
            throw DomainError("coefficient t^" + std::to_string(k) + " beyond truncation " +
                              std::to_string(truncation()));
        return c_[static_cast<std::size_t>(k)];
    }
    void set_coeff(int k, const C& value) {
        coeff(k);
        c_[static_cast<std::size_t>(k)] = value;
    }

    /// Order of the series; nullopt means "≥ N+1" (zero modulo truncation).
    std::optional<int> valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return static_cast<int>(i);
        return std::nullopt;
    }
    bool zero_mod_truncation() const { return !valuation().has_value(); }
    /// Index of the highest stored nonzero coefficient, -1 if none.
    int stored_degree() const {
        for (int i = truncation(); i >= 0; --i)
            if (!is_zero(c_[static_cast<std::size_t>(i)])) return i;
        return -1;
    }

    BasicSeries truncated(int n) const {
        if (n > truncation()) throw DomainError("truncation cannot be widened");
        return BasicSeries(var_, n, c_);
    }

    BasicSeries& operator+=(const BasicSeries& o) { return *this = *this + o; }
    BasicSeries& operator-=(const BasicSeries& o) { return *this = *this - o; }

    friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
        same_var(a, b);
        BasicSeries r(a.var_, std::min(a.truncation(), b.truncation()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) {
        same_var(a, b);
        BasicSeries r(a.var_, std::min(a.truncation(), b.truncation()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend BasicSeries operator-(BasicSeries a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    /// Cauchy product, valid to min(N_a, N_b).
    friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
        same_var(a, b);
        const int n = std::min(a.truncation(), b.truncation());
        BasicSeries r(a.var_, n);
        for (int i = 0; i <= n; ++i) {
            const C& ai = a.c_[static_cast<std::size_t>(i)];
            if (is_zero(ai)) continue;
            for (int j = 0; i + j <= n; ++j) {
                const C& bj = b.c_[static_cast<std::size_t>(j)];
                if (!is_zero(bj)) r.c_[static_cast<std::size_t>(i + j)] += ai * bj;
            }
        }
        return r;
    }
    friend BasicSeries operator*(const C& k, BasicSeries a) {
        for (auto& x : a.c_) x = k * x;
        return a;
    }
    friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }

    BasicSeries pow(int e) const {
        BasicSeries r = monomial(var_, truncation(), C(1), 0);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

private:
    static int checked(int n) {
        if (n < 0) throw DomainError("negative truncation");
        return n;
    }
    static void same_var(const BasicSeries& a, const BasicSeries& b) {
        if (a.var_ != b.var_)
            throw DomainError("variable mismatch: " + a.var_ + " vs " + b.var_);
    }

    std::string var_;
    std::vector<C> c_;
};

using Series = BasicSeries<Rational>;
using SSeries = BasicSeries<QPoly>;

/// Inverse of a series with invertible constant term (over Q).
Series inverse(const Series& u);

/// The series a/b where ord b = m ≤ ord a; result valid to N - m.
Series divide(const Series& a, const Series& b);

/// Substitutes s = s0 in every coefficient.
Series evaluate_s(const SSeries& a, const Rational& s0);
/// Views a Q-series as a Q[s]-series with constant coefficients.
SSeries lift(const Series& a);

/// Remainder of a (read as a polynomial in t) after division by g^k; g monic in t.
SSeries reduce_mod(const SSeries& a, const SSeries& g, int k);
STPoly to_stpoly(const SSeries& a);

/// Zero when every stored coefficient vanishes and the truncation exceeds the
/// a-priori degree bound of the expression.
template <class C>
bool certified_zero(const BasicSeries<C>& a, int degree_bound) {
    return a.truncation() > degree_bound && a.zero_mod_truncation();
}

std::string to_string(const Series& a);
std::string to_string(const SSeries& a);

}  // namespace curvesing
