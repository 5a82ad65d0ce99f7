#include "linalg.hpp"

#include <utility>

namespace stabctab::detail {

bool RowEchelon::insert(SparseRow row) {
    while (!row.empty()) {
        auto lead = row.begin();
        auto pivot = pivots_.find(lead->first);
        if (pivot == pivots_.end()) {
            const Rational scale = Rational(1) / lead->second;
            for (auto& [col, v] : row) v *= scale;
            const int col = row.begin()->first;
            pivots_.emplace(col, std::move(row));
            return true;
        }
        const Rational factor = lead->second;
        for (const auto& [col, v] : pivot->second) {
            auto [it, inserted] = row.try_emplace(col, -factor * v);
            if (!inserted) {
                it->second -= factor * v;
                if (it->second == 0) row.erase(it);
            }
        }
    }
    return false;
}

std::optional<DenseMatrix> invert(const DenseMatrix& m) {
    const std::size_t n = m.size();
    DenseMatrix a = m;
    DenseMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational s = Rational(1) / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= s;
            inv[col][j] *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace stabctab::detail
