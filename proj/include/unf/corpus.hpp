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

#include "unf/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace unf {

// Deterministic matrix generator for test corpora. mt19937 output is pinned
// by the standard, and values are mapped with plain modulo rather than
// distribution objects, so a seed produces identical matrices on every
// platform and standard library.
class CorpusRng {
  public:
    explicit CorpusRng(std::uint32_t seed) : engine_(seed) {}

    /// Uniform-ish in [0, n).
    int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint32_t>(n)); }

    /// Uniform-ish in [lo, hi], inclusive.
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  private:
    std::mt19937 engine_;
};

inline Mat random_integer_matrix(CorpusRng& rng, int n, int lo, int hi) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = rng.range(lo, hi);
    return m;
}

/// Product of elementary row operations on the identity: always invertible,
/// determinant +-1, entries stay small for few ops.
inline Mat random_unimodular(CorpusRng& rng, int n, int ops = 0) {
    if (ops == 0)
        ops = 2 * n;
    Mat t = Mat::identity(n);
    if (n < 2)
        return t;
    for (int k = 0; k < ops; ++k) {
        const int i = rng.below(n);
        int j = rng.below(n - 1);
        if (j >= i)
            ++j;
        if (rng.below(4) == 0) {
            for (int c = 0; c < n; ++c)
                std::swap(t(i, c), t(j, c));
        } else {
            const Rational coef(rng.range(-2, 2));
            for (int c = 0; c < n; ++c)
                t(i, c) += coef * t(j, c);
        }
    }
    return t;
}

/// Nilpotent matrix with a random chain-length partition of n, hidden by a
/// unimodular conjugation.
inline Mat random_nilpotent(CorpusRng& rng, int n) {
    std::vector<int> lengths;
    int total = 0;
    while (total < n) {
        const int len = rng.range(1, n - total);
        lengths.push_back(len);
        total += len;
    }
    Mat j(n, n);
    int off = 0;
    for (int len : lengths) {
        for (int i = 1; i < len; ++i)
            j(off + i - 1, off + i) = 1;
        off += len;
    }
    const Mat t = random_unimodular(rng, n);
    const auto t_inv = inverse(t);
    return t * j * *t_inv;
}

// A matrix with a known decomposition: a = t (d + n0) t^-1 where d is
// integer diagonal (equal eigenvalues adjacent) and n0 is strictly upper
// triangular inside each equal-eigenvalue block, so it commutes with d and
// is nilpotent. The semisimple part of a is exactly s = t d t^-1 by
// uniqueness of the decomposition.
struct OracleCase {
    Mat a;
    Mat s;
    Mat n;
};

inline OracleCase random_jc_oracle(CorpusRng& rng, int n) {
    std::vector<int> eigs;
    for (int i = 0; i < n; ++i)
        eigs.push_back(rng.range(-2, 2));
    std::sort(eigs.begin(), eigs.end());
    Mat d(n, n), n0(n, n);
    for (int i = 0; i < n; ++i)
        d(i, i) = eigs[static_cast<std::size_t>(i)];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (eigs[static_cast<std::size_t>(i)] == eigs[static_cast<std::size_t>(j)] &&
                rng.below(2) == 1)
                n0(i, j) = 1;
    const Mat t = random_unimodular(rng, n);
    const auto t_inv = inverse(t);
    OracleCase out;
    out.s = t * d * *t_inv;
    out.n = t * n0 * *t_inv;
    out.a = out.s + out.n;
    return out;
}

} // namespace unf
