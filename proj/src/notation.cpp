#include "curvesing/notation.hpp"

#include <cctype>

namespace curvesing {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s, std::size_t offset = 0) : s_(s), offset_(offset) {}

    MultiGerm germ() {
        std::vector<std::vector<QPoly>> branches;
        do {
            branches.push_back(branch());
            if (branches.back().size() != branches.front().size())
                fail("branch has " + std::to_string(branches.back().size()) +
                     " components, expected " + std::to_string(branches.front().size()));
        } while (eat('+'));
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        std::vector<Branch> out;
        for (std::size_t i = 0; i < branches.size(); ++i) {
            try {
                out.emplace_back(branches[i]);
            } catch (const DomainError& e) {
                throw ParseError("branch " + std::to_string(i + 1) + ": " + e.what(), offset_);
            }
        }
        return MultiGerm(static_cast<int>(branches.front().size()), std::move(out));
    }

    QPoly whole_poly() {
        QPoly p = poly();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, offset_ + pos_); }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::vector<QPoly> branch() {
        expect('(');
        std::vector<QPoly> comps;
        do comps.push_back(component());
        while (eat(','));
        expect(')');
        return comps;
    }

    /// The extent of one component: up to the next top-level ',' or ')'.
    std::size_t component_end() const {
        int depth = 0;
        for (std::size_t i = pos_; i < s_.size(); ++i) {
            if (s_[i] == '(') ++depth;
            else if (s_[i] == ')') {
                if (depth == 0) return i;
                --depth;
            } else if (s_[i] == ',' && depth == 0) return i;
        }
        return s_.size();
    }

    QPoly component() {
        skip();
        const std::size_t end = component_end();
        std::string text = s_.substr(pos_, end - pos_);
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
        if (text.empty()) fail("empty component");
        if (text == "-") {
            pos_ = end;
            return QPoly();
        }
        if (text.find_first_not_of("0123456789") == std::string::npos) {
            const int e = std::stoi(text);
            if (e <= 0) fail("exponent must be positive");
            pos_ = end;
            return QPoly::monomial(Rational(1), e);
        }
        const QPoly p = Parser(text, offset_ + pos_).whole_poly();
        pos_ = end;
        return p;
    }

    QPoly poly() {
        const bool negate = eat('-');
        if (!negate) eat('+');
        QPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    QPoly term() {
        QPoly acc = factor();
        for (;;) {
            if (eat('*')) acc = acc * factor();
            else if (peek('t') || peek('(')) acc = acc * factor();
            else return acc;
        }
    }

    QPoly factor() {
        QPoly base = atom();
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }

    QPoly atom() {
        skip();
        if (eat('(')) {
            QPoly p = poly();
            expect(')');
            return p;
        }
        if (eat('t')) return QPoly::monomial(Rational(1), 1);
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
            ++pos_;
        if (start == pos_) fail("expected number, 't' or '('");
        try {
            return QPoly(parse_rational(s_.substr(start, pos_ - start)));
        } catch (const DomainError&) {
            pos_ = start;
            fail("malformed number");
        }
    }

    std::string s_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

bool bare_monomial(const QPoly& p) {
    if (p.zero()) return true;
    return p.leading() == 1 && std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                             [](const Rational& c) { return !is_zero(c); }) == 1;
}

}  // namespace

MultiGerm parse_germ(const std::string& text) { return Parser(text).germ(); }

QPoly parse_tpoly(const std::string& text) { return Parser(text).whole_poly(); }

std::string format_germ(const MultiGerm& g) {
    bool monomial = true;
    for (const auto& b : g.branches())
        for (const auto& p : b.polynomials()) monomial = monomial && bare_monomial(p);
    std::string out;
    for (int i = 0; i < g.branch_count(); ++i) {
        if (i) out += "+";
        out += "(";
        const auto& comps = g.branch(i).polynomials();
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (j) out += monomial ? "," : ", ";
            if (comps[j].zero()) out += "-";
            else if (monomial) out += std::to_string(comps[j].degree());
            else out += to_string(comps[j], "t");
        }
        out += ")";
    }
    return out;
}

}  // namespace curvesing
