#pragma once

#include "curvesing/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace curvesing {

/// Polynomial in the ambient coordinates z_1..z_n with coefficients in Q[s].
class MPoly {
public:
    using Exponent = std::vector<int>;

    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const QPoly& c);
    static MPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const std::map<Exponent, QPoly>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    int total_degree() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(const MPoly& a);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const QPoly& c, const MPoly& a);
    MPoly pow(int e) const;
    friend bool operator==(const MPoly& a, const MPoly& b) = default;

    /// p(v_1..v_n) by exact series arithmetic; coefficients must be constant in s.
    Series substitute(const std::vector<Series>& v) const;
    SSeries substitute(const std::vector<SSeries>& v) const;
    /// Exact substitution of polynomials in t over Q[s].
    STPoly substitute(const std::vector<STPoly>& v) const;

    /// Uses x,y,z,w for n ≤ 4 and z1..zn otherwise.
    std::string to_string() const;

private:
    void add_term(const Exponent& e, const QPoly& c);
    void check(const MPoly& o) const;

    int nvars_ = 0;
    std::map<Exponent, QPoly> terms_;
};

/// Coordinate names used for printing and for parsing equations.
std::vector<std::string> coordinate_names(int n);

/// Parses a polynomial in coordinate names (x,y,z,w or z1..zn), rationals, and s,
/// e.g. "12*x*s^6 - 3*w^2*s^4 - x*w".
MPoly parse_mpoly(const std::string& text, int nvars);

/// The ring operations needed by substitution, for series and polynomials.
Series ps_substitute(const MPoly& p, const std::vector<Series>& v);

/// The three 2x2 minors of a 2x3 matrix.
std::vector<MPoly> minors_2x2(const std::vector<std::vector<MPoly>>& matrix);

}  // namespace curvesing
