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

#include <stdexcept>
#include <utility>

namespace unf {

// A linear subspace of Q^n held by a canonical basis: the columns are the
// transposed RREF of the spanning set, so two subspaces are equal exactly
// when their basis matrices are equal. Every computation that picks a basis
// goes through here, which is what makes the whole pipeline deterministic.
class Subspace {
  public:
    Subspace() = default;

    static Subspace zero(int ambient) { return Subspace(Mat(ambient, 0)); }

    static Subspace full(int ambient) { return Subspace(Mat::identity(ambient)); }

    /// Span of the columns of m, canonicalized.
    static Subspace from_columns(const Mat& m) {
        const RrefResult r = rref(m.transpose());
        Mat basis(m.rows(), r.rank);
        for (int i = 0; i < r.rank; ++i)
            for (int j = 0; j < m.rows(); ++j)
                basis(j, i) = r.reduced(i, j);
        return Subspace(std::move(basis));
    }

    int ambient() const { return basis_.rows(); }
    int dim() const { return basis_.cols(); }

    /// Canonical basis, ambient() x dim(), one basis vector per column.
    const Mat& basis() const { return basis_; }

    bool operator==(const Subspace& other) const = default;

    bool contains(const Mat& v) const {
        if (v.rows() != ambient() || v.cols() != 1)
            throw std::invalid_argument("vector shape mismatch");
        return solve(basis_, v).has_value();
    }

    bool contains(const Subspace& other) const {
        if (other.ambient() != ambient())
            throw std::invalid_argument("ambient dimension mismatch");
        return solve(basis_, other.basis_).has_value();
    }

  private:
    explicit Subspace(Mat basis) : basis_(std::move(basis)) {}

    Mat basis_;
};

inline Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("ambient dimension mismatch");
    return Subspace::from_columns(hcat(a.basis(), b.basis()));
}

/// Intersection via the kernel trick: pairs (x, y) with A x + B y = 0 give
/// exactly the vectors A x lying in both spans.
inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("ambient dimension mismatch");
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace::zero(a.ambient());
    const Mat stacked = hcat(a.basis(), b.basis());
    const RrefResult r = rref(stacked);
    // Null space basis of [A | B] from the free columns.
    std::vector<int> free_cols;
    {
        std::size_t p = 0;
        for (int c = 0; c < stacked.cols(); ++c) {
            if (p < r.pivot_cols.size() && r.pivot_cols[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    Mat xs(a.dim(), static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        if (fc < a.dim())
            xs(fc, static_cast<int>(k)) = 1;
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) {
            const int pc = r.pivot_cols[p];
            if (pc < a.dim())
                xs(pc, static_cast<int>(k)) = -r.reduced(static_cast<int>(p), fc);
        }
    }
    return Subspace::from_columns(a.basis() * xs);
}

/// Null space of m, canonicalized.
inline Subspace kernel(const Mat& m) {
    const RrefResult r = rref(m);
    std::vector<int> free_cols;
    std::size_t p = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (p < r.pivot_cols.size() && r.pivot_cols[p] == c)
            ++p;
        else
            free_cols.push_back(c);
    }
    Mat basis(m.cols(), static_cast<int>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], static_cast<int>(k)) = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            basis(r.pivot_cols[i], static_cast<int>(k)) =
                -r.reduced(static_cast<int>(i), free_cols[k]);
    }
    return Subspace::from_columns(basis);
}

/// Column space of m, canonicalized.
inline Subspace image(const Mat& m) { return Subspace::from_columns(m); }

/// Image of a subspace under a linear map.
inline Subspace apply(const Mat& m, const Subspace& s) {
    return Subspace::from_columns(m * s.basis());
}

inline bool is_invariant(const Mat& m, const Subspace& s) {
    return s.contains(apply(m, s));
}

/// Matrix of m restricted to an invariant subspace, written in the canonical
/// basis of s. Throws if s is not actually invariant under m.
inline Mat restrict_to(const Mat& m, const Subspace& s) {
    auto x = solve(s.basis(), m * s.basis());
    if (!x)
        throw std::domain_error("subspace is not invariant under the map");
    return *x;
}

/// Greedy completion: the columns of `candidates`, taken left to right, that
/// strictly enlarge the span of `current`. Stacking the result next to
/// `current` spans span(current) + span(candidates).
inline Mat extend_basis(const Mat& current, const Mat& candidates) {
    Mat work = current;
    int r = rank(work);
    Mat chosen(current.rows(), 0);
    for (int j = 0; j < candidates.cols(); ++j) {
        const Mat cand = candidates.col(j);
        const Mat trial = hcat(work, cand);
        const int tr = rank(trial);
        if (tr > r) {
            work = trial;
            r = tr;
            chosen = hcat(chosen, cand);
        }
    }
    return chosen;
}

} // namespace unf
