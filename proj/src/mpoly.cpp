#include "curvesing/mpoly.hpp"

#include <cctype>
#include <sstream>

namespace curvesing {

MPoly MPoly::constant(int nvars, const QPoly& c) {
    MPoly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
    MPoly p(nvars);
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, QPoly(1));
    return p;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

void MPoly::add_term(const Exponent& e, const QPoly& c) {
    if (c.zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.zero()) terms_.erase(it);
}

void MPoly::check(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw DomainError("polynomials in different numbers of variables");
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator-(const MPoly& a) {
    MPoly r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check(b);
    MPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            MPoly::Exponent e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly operator*(const QPoly& c, const MPoly& a) {
    MPoly r(a.nvars_);
    for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
    return r;
}

MPoly MPoly::pow(int e) const {
    MPoly r = constant(nvars_, QPoly(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

namespace {

// Evaluates the polynomial in any commutative ring R given the coordinate
// values, a unit, and a lift of Q[s] coefficients into R.
template <class R, class Lift>
R evaluate_in(const MPoly& p, const std::vector<R>& v, const R& one, Lift lift_coeff) {
    if (static_cast<int>(v.size()) != p.nvars())
        throw DomainError("substitution needs one value per variable");
    std::vector<std::vector<R>> powers(v.size());
    auto power = [&](std::size_t i, int e) -> const R& {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(one);
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * v[i]);
        return pw[static_cast<std::size_t>(e)];
    };
    R acc = one - one;
    for (const auto& [e, c] : p.terms()) {
        R term = lift_coeff(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc = acc + term;
    }
    return acc;
}

}  // namespace

Series MPoly::substitute(const std::vector<Series>& v) const {
    if (v.empty()) throw DomainError("empty substitution");
    const Series one = Series::monomial(v[0].var(), v[0].truncation(), Rational(1), 0);
    return evaluate_in<Series>(*this, v, one, [&](const QPoly& c) {
        if (c.degree() > 0)
            throw DomainError("coefficient depends on s; substitute into Q[s]-series instead");
        return Series::monomial(v[0].var(), v[0].truncation(), c.coeff(0), 0);
    });
}

SSeries MPoly::substitute(const std::vector<SSeries>& v) const {
    if (v.empty()) throw DomainError("empty substitution");
    const SSeries one = SSeries::monomial(v[0].var(), v[0].truncation(), QPoly(1), 0);
    return evaluate_in<SSeries>(*this, v, one, [&](const QPoly& c) {
        return SSeries::monomial(v[0].var(), v[0].truncation(), c, 0);
    });
}

STPoly MPoly::substitute(const std::vector<STPoly>& v) const {
    return evaluate_in<STPoly>(*this, v, STPoly(QPoly(1)),
                               [](const QPoly& c) { return STPoly(c); });
}

Series ps_substitute(const MPoly& p, const std::vector<Series>& v) { return p.substitute(v); }

std::vector<std::string> coordinate_names(int n) {
    if (n <= 4) {
        static const std::vector<std::string> xyzw{"x", "y", "z", "w"};
        return {xyzw.begin(), xyzw.begin() + n};
    }
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("z" + std::to_string(i));
    return out;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    const auto names = coordinate_names(nvars_);
    std::ostringstream os;
    bool first = true;
    // Highest total degree first, for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string coeff = curvesing::to_string(c, "s");
        const bool compound = c.degree() > 0 && c.coeffs().size() > 1 &&
                              std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                            [](const Rational& q) { return !is_zero(q); }) > 1;
        bool negative = false;
        if (!compound && coeff.front() == '-') {
            negative = true;
            coeff.erase(0, 1);
        }
        if (compound) coeff = "(" + coeff + ")";
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        if (mono.empty()) os << coeff;
        else if (coeff == "1") os << mono;
        else os << coeff << "*" << mono;
        first = false;
    }
    return os.str();
}

namespace {

class MPolyParser {
public:
    MPolyParser(const std::string& text, int nvars)
        : s_(text), n_(nvars), names_(coordinate_names(nvars)) {}

    MPoly parse() {
        MPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expr() {
        MPoly acc(n_);
        bool negate = eat('-');
        if (!negate) eat('+');
        MPoly t = term();
        acc = negate ? acc - t : acc + t;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    MPoly term() {
        MPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    MPoly factor() {
        MPoly base = atom();
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }

    MPoly atom() {
        skip();
        if (eat('(')) {
            MPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
                ++pos_;
            return MPoly::constant(n_, QPoly(parse_rational(s_.substr(start, pos_ - start))));
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        if (name.empty()) fail("expected number, variable or '('");
        if (name == "s") return MPoly::constant(n_, QPoly(std::vector<Rational>{0, 1}));
        for (int i = 0; i < n_; ++i)
            if (names_[static_cast<std::size_t>(i)] == name) return MPoly::variable(n_, i);
        pos_ = start;
        fail("unknown variable '" + name + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
    int n_;
    std::vector<std::string> names_;
};

}  // namespace

MPoly parse_mpoly(const std::string& text, int nvars) { return MPolyParser(text, nvars).parse(); }

std::vector<MPoly> minors_2x2(const std::vector<std::vector<MPoly>>& m) {
    if (m.size() != 2 || m[0].size() != 3 || m[1].size() != 3)
        throw DomainError("expected a 2x3 matrix");
    std::vector<MPoly> out;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
        out.push_back(m[0][static_cast<std::size_t>(i)] * m[1][static_cast<std::size_t>(j)] -
                      m[0][static_cast<std::size_t>(j)] * m[1][static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace curvesing
