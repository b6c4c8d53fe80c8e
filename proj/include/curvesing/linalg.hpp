#pragma once

#include "curvesing/rational.hpp"

#include <optional>
#include <vector>

namespace curvesing {

using Vec = std::vector<Rational>;

/// Incrementally built row-echelon basis of a subspace of Q^len. Each stored row
/// has its pivot (first nonzero entry) equal to 1.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t len) : len_(len), pivot_row_(len, -1) {}

    std::size_t length() const { return len_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    /// Pivot column of each stored row, in insertion order.
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool has_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

    /// v minus its projection along the basis (zero iff v lies in the span).
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    /// Adds v to the span; returns the index of the new row, or nullopt if v was dependent.
    std::optional<std::size_t> insert(const Vec& v);

private:
    std::size_t len_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<long> pivot_row_;
};

/// Rank of the matrix with the given rows.
std::size_t rank(const std::vector<Vec>& rows, std::size_t ncols);

/// Basis of {x : M x = 0}, M given by rows of length ncols.
std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t ncols);

/// Whether M x = b has a solution (rank M = rank [M|b]).
bool consistent(const std::vector<Vec>& rows, const Vec& b, std::size_t ncols);

}  // namespace curvesing
