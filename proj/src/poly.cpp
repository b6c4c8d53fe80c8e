#include "curvesing/poly.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

namespace curvesing {

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw DomainError("not a rational number: '" + text + "'");
    if (sgn(q.get_den()) == 0) throw DomainError("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

namespace {

std::string monomial_text(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const QPoly& p, const std::string& var) {
    if (p.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        Rational c = p.coeff(e);
        if (is_zero(c)) continue;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        c = abs(c);
        const std::string m = monomial_text(var, e);
        if (m.empty()) os << c.get_str();
        else if (c == 1) os << m;
        else os << c.get_str() << "*" << m;
        first = false;
    }
    return os.str();
}

std::string to_string(const STPoly& p, const std::string& tvar, const std::string& svar) {
    if (p.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e <= p.degree(); ++e) {
        const QPoly& c = p.coeffs()[static_cast<std::size_t>(e)];
        if (c.zero()) continue;
        if (!first) os << " + ";
        const std::string m = monomial_text(tvar, e);
        const bool simple = c.degree() == 0;
        if (m.empty()) os << (simple ? to_string(c, svar) : "(" + to_string(c, svar) + ")");
        else if (c == QPoly(1)) os << m;
        else os << (simple ? to_string(c, svar) : "(" + to_string(c, svar) + ")") << "*" << m;
        first = false;
    }
    return os.str();
}

Rational evaluate(const QPoly& p, const Rational& x) {
    Rational r = 0;
    for (int e = p.degree(); e >= 0; --e) r = r * x + p.coeff(e);
    return r;
}

QPoly evaluate_s(const STPoly& p, const Rational& s0) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.push_back(evaluate(q, s0));
    return QPoly(std::move(c));
}

STPoly lift(const QPoly& p) {
    std::vector<QPoly> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.emplace_back(q);
    return STPoly(std::move(c));
}

QPoly shift(const QPoly& p, const Rational& t0) {
    // Horner in the ring Q[u] with t = t0 + u.
    const QPoly lin(std::vector<Rational>{t0, 1});
    QPoly r;
    for (int e = p.degree(); e >= 0; --e) r = r * lin + QPoly(p.coeff(e));
    return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.zero()) throw DomainError("division by zero polynomial");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    const Rational lead = b.leading();
    std::vector<Rational> q(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)));
    for (int i = a.degree(); i >= db; --i) {
        const Rational f = r[static_cast<std::size_t>(i)] / lead;
        if (is_zero(f)) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
    }
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.zero()) return a;
    const Rational lead = a.leading();
    std::vector<Rational> c = a.coeffs();
    for (auto& x : c) x /= lead;
    return QPoly(std::move(c));
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    if (n == 0) return out;
    if (n > 100000000)
        throw DomainError("coefficient too large for rational root search");
    const unsigned long v = n.get_ui();
    for (unsigned long d = 1; d * d <= v; ++d) {
        if (v % d) continue;
        out.emplace_back(d);
        if (d * d != v) out.emplace_back(v / d);
    }
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p) {
    if (p.zero()) throw DomainError("every number is a root of the zero polynomial");
    std::set<Rational> roots;
    int low = 0;
    while (is_zero(p.coeff(low))) ++low;
    if (low > 0) roots.insert(Rational(0));
    // Integer-scaled polynomial with nonzero constant term.
    mpz_class den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (int e = low; e <= p.degree(); ++e) z.push_back(Rational(p.coeff(e) * den).get_num());
    if (z.size() > 1) {
        for (const auto& a : divisors(z.front())) {
            for (const auto& b : divisors(z.back())) {
                for (int sign : {1, -1}) {
                    Rational cand(a * sign, b);
                    cand.canonicalize();
                    Rational v = 0;
                    for (auto it = z.rbegin(); it != z.rend(); ++it) v = v * cand + Rational(*it);
                    if (is_zero(v)) roots.insert(cand);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

}  // namespace curvesing
