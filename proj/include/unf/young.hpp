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
#include "unf/subspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace unf {

// One Jordan chain of a nilpotent map: v, Nv, ..., N^(length-1)v with
// N^length v = 0 and N^(length-1) v != 0.
struct JordanChain {
    Mat generator; // ambient x 1
    int length = 0;
    std::vector<Mat> vectors; // [v, Nv, ..., N^(length-1) v]
};

// The Young diagram of a nilpotent map together with a realizing basis.
// Chains are ordered by length descending, ties by construction order;
// row_counts[l-1] is the number of chains of length >= l, equivalently
// dim ker N^l - dim ker N^(l-1).
struct YoungDiagram {
    std::vector<JordanChain> chains;
    std::vector<int> row_counts;
    int ambient_dim = 0;
};

namespace detail {

inline void require_nilpotent(const Mat& n) {
    if (!n.is_square())
        throw std::invalid_argument("nilpotent structure needs a square matrix");
    Mat power = Mat::identity(n.rows());
    for (int i = 0; i < n.rows(); ++i)
        power = power * n;
    if (!power.is_zero())
        throw std::invalid_argument("matrix is not nilpotent");
}

} // namespace detail

/// Smallest k >= 1 with n^k = 0. The zero matrix (any size, including 0x0)
/// has index 1.
inline int nilpotency_index(const Mat& n) {
    detail::require_nilpotent(n);
    Mat power = n;
    for (int k = 1; k <= std::max(n.rows(), 1); ++k) {
        if (power.is_zero())
            return k;
        power = power * n;
    }
    throw std::logic_error("nilpotency index exceeded the dimension");
}

struct KernelFiltration {
    std::vector<int> dims;       // dim ker N^l for l = 1..index
    std::vector<int> row_counts; // dims[l] - dims[l-1]
};

inline KernelFiltration kernel_filtration(const Mat& n) {
    const int index = nilpotency_index(n);
    KernelFiltration out;
    Mat power = n;
    int prev = 0;
    for (int l = 1; l <= index; ++l) {
        const int dim = kernel(power).dim();
        out.dims.push_back(dim);
        out.row_counts.push_back(dim - prev);
        prev = dim;
        power = power * n;
    }
    return out;
}

/// A basis realizing the Young diagram, by the recursion on im N: compute
/// the diagram of N restricted to im N, pull each generator w back through
/// one linear solve N v = w (free variables zero), then extend the chain
/// ends to a basis of ker N with canonical kernel columns, each giving a
/// length-1 chain.
inline YoungDiagram young_basis(const Mat& n) {
    detail::require_nilpotent(n);
    const int dim = n.rows();
    YoungDiagram out;
    out.ambient_dim = dim;
    if (dim == 0)
        return out;

    const Subspace im = image(n);
    if (im.dim() > 0) {
        const Mat n_im = restrict_to(n, im);
        const YoungDiagram inner = young_basis(n_im);
        for (const JordanChain& chain : inner.chains) {
            const Mat w = im.basis() * chain.generator;
            const auto v = solve(n, w);
            if (!v)
                throw std::logic_error("generator has no preimage in im N");
            JordanChain lifted;
            lifted.generator = *v;
            lifted.length = chain.length + 1;
            Mat cur = *v;
            for (int i = 0; i < lifted.length; ++i) {
                lifted.vectors.push_back(cur);
                cur = n * cur;
            }
            out.chains.push_back(std::move(lifted));
        }
    }

    // Chain ends N^(l-1) v all lie in ker N; complete them to a kernel basis.
    Mat ends(dim, 0);
    for (const JordanChain& chain : out.chains)
        ends = hcat(ends, chain.vectors.back());
    const Mat extra = extend_basis(ends, kernel(n).basis());
    for (int j = 0; j < extra.cols(); ++j) {
        JordanChain single;
        single.generator = extra.col(j);
        single.length = 1;
        single.vectors.push_back(single.generator);
        out.chains.push_back(std::move(single));
    }

    std::stable_sort(out.chains.begin(), out.chains.end(),
                     [](const JordanChain& a, const JordanChain& b) { return a.length > b.length; });

    const int height = out.chains.empty() ? 0 : out.chains.front().length;
    out.row_counts.assign(static_cast<std::size_t>(height), 0);
    for (const JordanChain& chain : out.chains)
        for (int l = 0; l < chain.length; ++l)
            ++out.row_counts[static_cast<std::size_t>(l)];
    return out;
}

/// The realizing basis in standard order (each chain reversed, so N acts as
/// a superdiagonal shift) plus the Jordan matrix it exhibits: one nilpotent
/// Jordan block per chain, sizes descending.
inline std::pair<Mat, Mat> jordan_block_matrix(const YoungDiagram& diagram) {
    Mat basis(diagram.ambient_dim, 0);
    Mat j(diagram.ambient_dim, diagram.ambient_dim);
    int offset = 0;
    for (const JordanChain& chain : diagram.chains) {
        for (int i = chain.length - 1; i >= 0; --i)
            basis = hcat(basis, chain.vectors[static_cast<std::size_t>(i)]);
        for (int i = 1; i < chain.length; ++i)
            j(offset + i - 1, offset + i) = 1;
        offset += chain.length;
    }
    return {basis, j};
}

/// Rewrite a diagram computed in the coordinates of a subspace into ambient
/// coordinates via the subspace's basis columns.
inline YoungDiagram lift_diagram(const YoungDiagram& diagram, const Subspace& sub) {
    YoungDiagram out;
    out.ambient_dim = sub.ambient();
    out.row_counts = diagram.row_counts;
    for (const JordanChain& chain : diagram.chains) {
        JordanChain lifted;
        lifted.length = chain.length;
        lifted.generator = sub.basis() * chain.generator;
        for (const Mat& v : chain.vectors)
            lifted.vectors.push_back(sub.basis() * v);
        out.chains.push_back(std::move(lifted));
    }
    return out;
}

} // namespace unf
