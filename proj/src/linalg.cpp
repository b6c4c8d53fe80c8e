#include "curvesing/linalg.hpp"

#include "curvesing/errors.hpp"

namespace curvesing {

Vec EchelonBasis::reduce(Vec v) const {
    if (v.size() != len_) throw DomainError("vector length mismatch");
    for (std::size_t k = 0; k < len_; ++k) {
        if (is_zero(v[k]) || pivot_row_[k] < 0) continue;
        const Vec& row = rows_[static_cast<std::size_t>(pivot_row_[k])];
        const Rational f = v[k];
        for (std::size_t j = k; j < len_; ++j)
            if (!is_zero(row[j])) v[j] -= f * row[j];
    }
    return v;
}

bool EchelonBasis::contains(const Vec& v) const {
    const Vec r = reduce(v);
    for (const auto& x : r)
        if (!is_zero(x)) return false;
    return true;
}

std::optional<std::size_t> EchelonBasis::insert(const Vec& v) {
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < len_ && is_zero(r[p])) ++p;
    if (p == len_) return std::nullopt;
    const Rational inv = 1 / r[p];
    for (std::size_t j = p; j < len_; ++j)
        if (!is_zero(r[j])) r[j] *= inv;
    pivot_row_[p] = static_cast<long>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(r));
    return rows_.size() - 1;
}

std::size_t rank(const std::vector<Vec>& rows, std::size_t ncols) {
    EchelonBasis b(ncols);
    for (const auto& r : rows) b.insert(r);
    return b.rank();
}

std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t ncols) {
    // Reduced row echelon form, then one kernel vector per free column.
    std::vector<Vec> m;
    for (const auto& r : rows) {
        if (r.size() != ncols) throw DomainError("row length mismatch");
        m.push_back(r);
    }
    std::vector<std::size_t> pivcols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && is_zero(m[sel][col])) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || is_zero(m[i][col])) continue;
            const Rational f = m[i][col];
            for (std::size_t j = 0; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivcols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivcols) is_pivot[c] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vec x(ncols);
        x[f] = 1;
        for (std::size_t i = 0; i < pivcols.size(); ++i) x[pivcols[i]] = -m[i][f];
        out.push_back(std::move(x));
    }
    return out;
}

bool consistent(const std::vector<Vec>& rows, const Vec& b, std::size_t ncols) {
    if (b.size() != rows.size()) throw DomainError("right-hand side length mismatch");
    std::vector<Vec> aug;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Vec r = rows[i];
        r.push_back(b[i]);
        aug.push_back(std::move(r));
    }
    return rank(rows, ncols) == rank(aug, ncols + 1);
}

}  // namespace curvesing
