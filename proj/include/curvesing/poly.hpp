#pragma once

#include "curvesing/errors.hpp"
#include "curvesing/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace curvesing {

/// Dense univariate polynomial with exact coefficients; no trailing zeros.
template <class C>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const C& c) : c_{c} { trim(); }  // NOLINT: implicit lift of constants
    Poly(int c) : Poly(C(c)) {}           // NOLINT

    static Poly monomial(const C& c, int deg) {
        std::vector<C> v(static_cast<std::size_t>(deg) + 1);
        v.back() = c;
        return Poly(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const std::vector<C>& coeffs() const { return c_; }

    C coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return C{};
        return c_[static_cast<std::size_t>(k)];
    }
    C leading() const { return c_.empty() ? C{} : c_.back(); }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return {};
        std::vector<C> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly pow(int e) const {
        Poly r(C(1)), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// Remainder modulo a divisor with unit leading coefficient 1.
    Poly rem_monic(const Poly& g) const {
        if (g.zero() || !(g.leading() == C(1))) throw DomainError("divisor is not monic");
        std::vector<C> r = c_;
        const int dg = g.degree();
        for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
            const C q = r[static_cast<std::size_t>(i)];
            if (is_zero(q)) continue;
            for (int j = 0; j <= dg; ++j)
                r[static_cast<std::size_t>(i - dg + j)] -= q * g.c_[static_cast<std::size_t>(j)];
        }
        return Poly(std::move(r));
    }

    friend bool is_zero(const Poly& p) { return p.zero(); }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<C> c_;
};

/// Polynomial over Q (used for the deformation parameter s and for exact t-polynomials).
using QPoly = Poly<Rational>;
/// Polynomial in t with coefficients in Q[s].
using STPoly = Poly<QPoly>;

std::string to_string(const QPoly& p, const std::string& var = "s");
std::string to_string(const STPoly& p, const std::string& tvar = "t", const std::string& svar = "s");

Rational evaluate(const QPoly& p, const Rational& x);
/// Specializes the coefficient ring: s -> s0.
QPoly evaluate_s(const STPoly& p, const Rational& s0);
/// Lifts a Q[t] polynomial to Q[s][t] with constant coefficients.
STPoly lift(const QPoly& p);
/// p(t0 + u) as a polynomial in u.
QPoly shift(const QPoly& p, const Rational& t0);

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);
/// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const QPoly& p);

}  // namespace curvesing
