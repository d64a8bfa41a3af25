#ifndef GAG_LINALG_HPP
#define GAG_LINALG_HPP

#include <optional>
#include <vector>

#include "gag/field.hpp"

namespace gag {

template <class E>
using Matrix = std::vector<std::vector<E>>;

/// Row-reduces in place; returns the pivot column of each nonzero row.
template <class E>
std::vector<std::size_t> row_reduce(const Field<E>& F, Matrix<E>& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] == E{0}) ++sel;
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        const E s = F.inv(a[r][c]);
        for (auto& v : a[r]) v = F.mul(v, s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == E{0}) continue;
            const E factor = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = F.sub(a[i][j], F.mul(factor, a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class E>
std::size_t rank(const Field<E>& F, Matrix<E> a) {
    return row_reduce(F, a).size();
}

/// Inverse of a square matrix, or nullopt when singular.
template <class E>
std::optional<Matrix<E>> inverse(const Field<E>& F, const Matrix<E>& a) {
    const std::size_t n = a.size();
    Matrix<E> aug(n, std::vector<E>(2 * n, E{0}));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = F.one();
    }
    const auto pivots = row_reduce(F, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<E> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
    return inv;
}

}  // namespace gag

#endif  // GAG_LINALG_HPP
