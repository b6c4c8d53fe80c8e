#include "curvesing/series.hpp"

#include <sstream>

namespace curvesing {

Series inverse(const Series& u) {
    const Rational& u0 = u.coeff(0);
    if (is_zero(u0)) throw DomainError("series is not invertible");
    const int n = u.truncation();
    std::vector<Rational> inv(static_cast<std::size_t>(n) + 1);
    inv[0] = 1 / u0;
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) {
            const Rational& uj = u.coeff(j);
            if (!is_zero(uj)) acc += uj * inv[static_cast<std::size_t>(k - j)];
        }
        inv[static_cast<std::size_t>(k)] = -acc / u0;
    }
    return Series(u.var(), n, inv);
}

Series divide(const Series& a, const Series& b) {
    const auto m = b.valuation();
    if (!m) throw DomainError("division by a series that is zero mod truncation");
    const int n = std::min(a.truncation(), b.truncation()) - *m;
    if (n < 0) throw DomainError("truncation exhausted by division");
    for (int k = 0; k < *m; ++k)
        if (!is_zero(a.coeff(k))) throw DomainError("quotient is not a power series");
    std::vector<Rational> ac, bc;
    for (int k = 0; k <= n; ++k) {
        ac.push_back(a.coeff(k + *m));
        bc.push_back(b.coeff(k + *m));
    }
    return Series(a.var(), n, ac) * inverse(Series(a.var(), n, bc));
}

Series evaluate_s(const SSeries& a, const Rational& s0) {
    std::vector<Rational> c;
    for (const auto& q : a.coeffs()) c.push_back(evaluate(q, s0));
    return Series(a.var(), a.truncation(), c);
}

SSeries lift(const Series& a) {
    std::vector<QPoly> c;
    for (const auto& q : a.coeffs()) c.emplace_back(q);
    return SSeries(a.var(), a.truncation(), c);
}

STPoly to_stpoly(const SSeries& a) { return STPoly(a.coeffs()); }

SSeries reduce_mod(const SSeries& a, const SSeries& g, int k) {
    if (k < 1) throw DomainError("exponent of modulus must be positive");
    const STPoly gp = to_stpoly(g);
    if (gp.degree() < 1) throw DomainError("modulus must have positive degree in t");
    if (!(gp.leading() == QPoly(1))) throw DomainError("modulus is not monic in t");
    const STPoly r = to_stpoly(a).rem_monic(gp.pow(k));
    return SSeries(a.var(), a.truncation(), r.coeffs());
}

std::string to_string(const Series& a) {
    std::ostringstream os;
    os << to_string(QPoly(a.coeffs()), a.var()) << " + O(" << a.var() << "^" << a.truncation() + 1
       << ")";
    return os.str();
}

std::string to_string(const SSeries& a) {
    std::ostringstream os;
    os << to_string(STPoly(a.coeffs()), a.var()) << " + O(" << a.var() << "^"
       << a.truncation() + 1 << ")";
    return os.str();
}

}  // namespace curvesing
