/* Copyright 2026 The skewlab authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "skewlab/linsolve.hpp"

#include <algorithm>

namespace skewlab {

std::optional<std::vector<Rat>> solve_rat(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    std::size_t rows = A.size();
    std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(A[piv], A[rank]);
        std::swap(b[piv], b[rank]);
        Rat pv = A[rank][col];
        for (auto& v : A[rank]) v /= pv;
        b[rank] /= pv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (std::size_t c = col; c < cols; ++c) A[r][c] -= f * A[rank][c];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (b[r] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

std::optional<std::vector<int>> solve_modp(std::vector<std::vector<int>> A, std::vector<int> b,
                                           int p) {
    auto inv_mod = [p](int a) {
        int r = 1, base = ((a % p) + p) % p;
        for (int e = p - 2; e > 0; e >>= 1) {  // p prime
            if (e & 1) r = r * base % p;
            base = base * base % p;
        }
        return r;
    };
    std::size_t rows = A.size();
    std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (A[r][col] % p != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(A[piv], A[rank]);
        std::swap(b[piv], b[rank]);
        int inv = inv_mod(A[rank][col]);
        for (auto& v : A[rank]) v = ((v % p) * inv % p + p) % p;
        b[rank] = ((b[rank] % p) * inv % p + p) % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            int f = ((A[r][col] % p) + p) % p;
            if (f == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                A[r][c] = ((A[r][c] - f * A[rank][c]) % p + p) % p;
            b[r] = ((b[r] - f * b[rank]) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (((b[r] % p) + p) % p != 0) return std::nullopt;
    std::vector<int> x(cols, 0);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = ((b[r] % p) + p) % p;
    return x;
}

std::optional<std::vector<Rat>> kernel_rat(std::vector<std::vector<Rat>> A) {
    std::size_t rows = A.size();
    std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (A[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(A[piv], A[rank]);
        Rat pv = A[rank][col];
        for (auto& v : A[rank]) v /= pv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (std::size_t c = col; c < cols; ++c) A[r][c] -= f * A[rank][c];
        }
        pivot_col.push_back(col);
        is_pivot[col] = true;
        ++rank;
    }
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == cols) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    x[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = -A[r][free_col];
    return x;
}

std::optional<std::vector<int>> kernel_modp(std::vector<std::vector<int>> A, int p) {
    auto inv_mod = [p](int a) {
        int r = 1, base = ((a % p) + p) % p;
        for (int e = p - 2; e > 0; e >>= 1) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
        }
        return r;
    };
    std::size_t rows = A.size();
    std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (((A[r][col] % p) + p) % p != 0) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(A[piv], A[rank]);
        int inv = inv_mod(A[rank][col]);
        for (auto& v : A[rank]) v = ((v % p) * inv % p + p) % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            int f = ((A[r][col] % p) + p) % p;
            if (f == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                A[r][c] = ((A[r][c] - f * A[rank][c]) % p + p) % p;
        }
        pivot_col.push_back(col);
        is_pivot[col] = true;
        ++rank;
    }
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == cols) return std::nullopt;
    std::vector<int> x(cols, 0);
    x[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r)
        x[pivot_col[r]] = ((-A[r][free_col]) % p + p) % p;
    return x;
}

}  // namespace skewlab
