/*
   Copyright 2026 The unf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <unf/matrix.hpp>
#include <unf/poly.hpp>

#include <initializer_list>
#include <vector>

namespace unf::testing {

/// Integer matrix literal: mat({{1, 1}, {0, 1}}).
inline Mat mat(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (int v : row)
            r.emplace_back(v);
        out.push_back(std::move(r));
    }
    return Mat::from_rows(std::move(out));
}

/// Integer column vector literal.
inline Mat col(std::initializer_list<int> entries) {
    std::vector<std::vector<Rational>> out;
    for (int v : entries)
        out.push_back({Rational(v)});
    return Mat::from_rows(std::move(out));
}

/// Ascending-coefficient polynomial literal: poly({-1, 1}) is lambda - 1.
inline Poly poly(std::initializer_list<int> ascending) {
    std::vector<Rational> coeffs;
    for (int v : ascending)
        coeffs.emplace_back(v);
    return Poly::from_coeffs(std::move(coeffs));
}

/// Block-diagonal stack of square matrices.
inline Mat block_diag(std::initializer_list<Mat> blocks) {
    int n = 0;
    for (const Mat& b : blocks)
        n += b.rows();
    Mat out(n, n);
    int off = 0;
    for (const Mat& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
                out(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return out;
}

/// Nilpotent single Jordan block of the given size (superdiagonal ones).
inline Mat shift_block(int size) {
    Mat out(size, size);
    for (int i = 1; i < size; ++i)
        out(i - 1, i) = 1;
    return out;
}

} // namespace unf::testing
