#pragma once

#include "stabctab/arith.hpp"

#include <map>
#include <optional>
#include <vector>

namespace stabctab::detail {

using SparseRow = std::map<int, Rational>;
using DenseMatrix = std::vector<std::vector<Rational>>;

/* Incremental row echelon form over Q. Pivot rows are kept normalized
 * (leading coefficient 1) and keyed by their leading column, so inserting a
 * row costs one reduction pass against the existing pivots. */
class RowEchelon {
public:
    /// Returns true when the row was independent of those already present.
    bool insert(SparseRow row);
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::map<int, SparseRow> pivots_;
};

/// Inverse of a square matrix, or nullopt when singular.
std::optional<DenseMatrix> invert(const DenseMatrix& m);

}  // namespace stabctab::detail
