#pragma once

#include <vector>

#include "multmap/scalar_field.hpp"

namespace multmap {

// Dense exact linear algebra for small systems, generic over the field.
template <FieldScalar K>
using ExactMatrix = std::vector<std::vector<K>>;

// In-place reduced row echelon form; returns the pivot columns in order.
// Pivot choice is "first nonzero", so the result is deterministic.
template <FieldScalar K>
std::vector<int> reduced_row_echelon(ExactMatrix<K>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int prow = 0;
    for (int col = 0; col < cols && prow < rows; ++col) {
        int sel = -1;
        for (int r = prow; r < rows; ++r) {
            if (!is_zero(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)])) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(m[static_cast<std::size_t>(prow)], m[static_cast<std::size_t>(sel)]);
        auto& prow_ref = m[static_cast<std::size_t>(prow)];
        const K inv = field_inverse(prow_ref[static_cast<std::size_t>(col)]);
        for (int c = col; c < cols; ++c)
            prow_ref[static_cast<std::size_t>(c)] = prow_ref[static_cast<std::size_t>(c)] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == prow) continue;
            auto& row = m[static_cast<std::size_t>(r)];
            const K factor = row[static_cast<std::size_t>(col)];
            if (is_zero(factor)) continue;
            for (int c = col; c < cols; ++c)
                row[static_cast<std::size_t>(c)] =
                    row[static_cast<std::size_t>(c)] - factor * prow_ref[static_cast<std::size_t>(c)];
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

// Basis of {c : m c = 0} for an n x cols matrix. `sample` mints constants of
// the right field (prime-field elements carry their modulus).
template <FieldScalar K>
std::vector<std::vector<K>> nullspace_basis(ExactMatrix<K> m, int cols, const K& sample) {
    const K zero = zero_like(sample);
    const K one = one_like(sample);
    if (cols <= 0) return {};

    std::vector<int> pivots = m.empty() ? std::vector<int>{} : reduced_row_echelon(m);
    std::vector<char> is_pivot_col(static_cast<std::size_t>(cols), 0);
    for (int p : pivots) is_pivot_col[static_cast<std::size_t>(p)] = 1;

    std::vector<std::vector<K>> basis;
    for (int j = 0; j < cols; ++j) {
        if (is_pivot_col[static_cast<std::size_t>(j)]) continue;
        std::vector<K> v(static_cast<std::size_t>(cols), zero);
        v[static_cast<std::size_t>(j)] = one;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            v[static_cast<std::size_t>(pivots[pi])] = -m[pi][static_cast<std::size_t>(j)];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Canonical form for a set of coefficient vectors: Gauss-Jordan with pivots at
// the highest nonzero index, pivots scaled to 1. After this every vector is
// monic at its top index and that index is zero in all the others; vectors end
// up ordered by descending top index.
template <FieldScalar K>
void echelon_normalize_top(std::vector<std::vector<K>>& basis) {
    if (basis.empty()) return;
    const int len = static_cast<int>(basis[0].size());
    int used = 0;
    for (int pos = len - 1; pos >= 0 && used < static_cast<int>(basis.size()); --pos) {
        int sel = -1;
        for (int r = used; r < static_cast<int>(basis.size()); ++r) {
            if (!is_zero(basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(pos)])) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(basis[static_cast<std::size_t>(used)], basis[static_cast<std::size_t>(sel)]);
        auto& pivot_vec = basis[static_cast<std::size_t>(used)];
        const K inv = field_inverse(pivot_vec[static_cast<std::size_t>(pos)]);
        for (auto& entry : pivot_vec) entry = entry * inv;
        for (int r = 0; r < static_cast<int>(basis.size()); ++r) {
            if (r == used) continue;
            auto& vec = basis[static_cast<std::size_t>(r)];
            const K factor = vec[static_cast<std::size_t>(pos)];
            if (is_zero(factor)) continue;
            for (int c = 0; c < len; ++c)
                vec[static_cast<std::size_t>(c)] =
                    vec[static_cast<std::size_t>(c)] - factor * pivot_vec[static_cast<std::size_t>(c)];
        }
        ++used;
    }
}

// Membership test against an echelon_normalize_top basis.
template <FieldScalar K>
bool in_span(const std::vector<std::vector<K>>& basis, std::vector<K> v) {
    for (const auto& b : basis) {
        int pos = static_cast<int>(b.size()) - 1;
        while (pos >= 0 && is_zero(b[static_cast<std::size_t>(pos)])) --pos;
        if (pos < 0) continue;
        const K factor = v[static_cast<std::size_t>(pos)];
        if (is_zero(factor)) continue;
        for (std::size_t c = 0; c < v.size(); ++c) v[c] = v[c] - factor * b[c];
    }
    for (const auto& entry : v)
        if (!is_zero(entry)) return false;
    return true;
}

} // namespace multmap
