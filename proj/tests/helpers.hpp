#pragma once

#include "curvesing/germ.hpp"

#include <vector>

namespace testing_helpers {

using namespace curvesing;

inline QPoly tpow(int e, const Rational& c = 1) { return e < 0 ? QPoly() : QPoly::monomial(c, e); }

/// Monomial branch; exponent 0 means the zero component.
inline Branch mono_branch(const std::vector<int>& exps) {
    std::vector<QPoly> c;
    for (int e : exps) c.push_back(e == 0 ? QPoly() : tpow(e));
    return Branch(c);
}

inline MultiGerm mono_germ(const std::vector<std::vector<int>>& branches) {
    std::vector<Branch> b;
    for (const auto& e : branches) b.push_back(mono_branch(e));
    return MultiGerm(static_cast<int>(branches.front().size()), b);
}

inline MultiGerm poly_germ(const std::vector<std::vector<QPoly>>& branches) {
    std::vector<Branch> b;
    for (const auto& c : branches) b.emplace_back(c);
    return MultiGerm(static_cast<int>(branches.front().size()), b);
}

/// Line through the origin with the given direction.
inline Branch line(const std::vector<Rational>& dir) {
    std::vector<QPoly> c;
    for (const auto& a : dir) c.push_back(tpow(1, a));
    return Branch(c);
}

inline MultiGerm axes(int n) {
    std::vector<Branch> b;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> d(static_cast<std::size_t>(n), 0);
        d[static_cast<std::size_t>(i)] = 1;
        b.push_back(line(d));
    }
    return MultiGerm(n, b);
}

inline MultiGerm minimal_monomial(int k) {
    std::vector<int> e;
    for (int i = k; i < 2 * k; ++i) e.push_back(i);
    return mono_germ({e});
}

/// Three lines of xy(x-y)(x-lambda y) in the xy-plane plus (lambda t, t, t^2).
inline MultiGerm l42(const Rational& lambda) {
    std::vector<Branch> b{line({1, 0, 0}), line({0, 1, 0}), line({1, 1, 0})};
    b.emplace_back(std::vector<QPoly>{tpow(1, lambda), tpow(1), tpow(2)});
    return MultiGerm(3, b);
}

inline MultiGerm l31(const Rational& lambda) {
    return poly_germ({{QPoly(), tpow(1), QPoly()},
                      {tpow(2), tpow(1), QPoly()},
                      {tpow(2, lambda), tpow(1), tpow(3)}});
}

}  // namespace testing_helpers

namespace testing_helpers {

/// Plane instances of the simple singularities and the two plane confining types.
inline MultiGerm plane_a(int k) {
    if (k % 2 == 0) return mono_germ({{2, k + 1}});
    const int j = (k + 1) / 2;
    return poly_germ({{tpow(1), QPoly()}, {tpow(1), tpow(j)}});
}

inline MultiGerm plane_d(int k) {
    if (k % 2 == 0) {
        const int j = (k - 2) / 2;
        return poly_germ({{tpow(1), QPoly()}, {tpow(1), tpow(j)}, {QPoly(), tpow(1)}});
    }
    const int j = (k - 3) / 2;
    return poly_germ({{tpow(2), tpow(2 * j + 1)}, {QPoly(), tpow(1)}});
}

inline MultiGerm plane_e(int k) {
    if (k == 6) return mono_germ({{3, 4}});
    if (k == 7) return poly_germ({{tpow(2), tpow(3)}, {tpow(1), QPoly()}});
    return mono_germ({{3, 5}});
}

inline MultiGerm tilde_e7(const Rational& lambda) {
    return MultiGerm(2, {line({1, 0}), line({0, 1}), line({1, 1}), line({1, lambda})});
}

inline MultiGerm tilde_e8(const Rational& lambda) {
    return poly_germ({{QPoly(), tpow(1)}, {tpow(2), tpow(1)}, {tpow(2, lambda), tpow(1)}});
}

}  // namespace testing_helpers
