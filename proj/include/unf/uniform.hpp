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

#include "unf/check_report.hpp"
#include "unf/jordan_chevalley.hpp"
#include "unf/matrix.hpp"
#include "unf/subspace.hpp"
#include "unf/young.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unf {

enum class PartTag {
    kernel_of_s,
    image_of_s,
};

inline const char* to_string(PartTag tag) {
    return tag == PartTag::kernel_of_s ? "kernel_of_S" : "image_of_S";
}

// One block of the uniform normal form. F is a space of chain generators of
// a fixed chain length m, S-invariant by construction; q = dim F. The block
// occupies the m*q consecutive basis columns u_1..u_q, Nu_1..Nu_q, ...,
// N^(m-1)u_1..N^(m-1)u_q, on which the full map acts as d_matrix: c_matrix
// (the block-companion matrix of S|F) on the diagonal and identity blocks on
// the subdiagonal. When S|F is cyclic, c_matrix is a single companion block.
struct UniformBlock {
    PartTag part = PartTag::image_of_s;
    int chain_length = 0; // m
    Subspace f_basis;     // F in ambient coordinates
    int q = 0;            // dim F
    std::vector<Poly> companion_polys;
    Mat c_matrix;  // q x q
    Mat d_matrix;  // (m q) x (m q)
    Mat u_columns; // ambient x q, cyclic basis of F
    Poly chi_f;    // char poly of S|F = product of companion_polys
};

struct UniformNormalForm {
    Mat p_basis; // invertible, columns are the new basis
    Mat b;       // p_basis^-1 A p_basis = diag of d_matrices
    std::vector<UniformBlock> blocks;
    std::vector<std::pair<Poly, int>> factorization; // (chi_{S|F}, m) per block
    int kernel_s_dim = 0;
};

/// V = ker S (+) im S for semisimple S. Fails loudly when S is not
/// semisimple, which is the only way directness can break.
inline std::pair<Subspace, Subspace> split_ker_im(const Mat& s) {
    if (!s.is_square())
        throw std::invalid_argument("split needs a square matrix");
    if (!eval_poly_at(squarefree_part(char_poly(s)).p, s).is_zero())
        throw std::invalid_argument("split needs a semisimple matrix");
    Subspace ker = kernel(s);
    Subspace im = image(s);
    if (ker.dim() + im.dim() != s.rows() || intersect(ker, im).dim() != 0)
        throw std::logic_error("kernel and image of a semisimple map failed to be direct");
    return {std::move(ker), std::move(im)};
}

/// S-invariant complement: F with w = w_sub (+) F and S F within F. Found
/// by solving for an equivariant section of the quotient map w -> w/w_sub.
/// In a basis of w extending w_sub, the restricted map is block triangular
///   S_w = [ P  Q ]
///         [ 0  R ]
/// and a section [ Y ; I ] is equivariant iff P Y - Y R = -Q. That linear
/// system is consistent whenever S acts semisimply on w; free variables are
/// set to zero, so the result is deterministic.
inline Subspace invariant_complement(const Mat& s, const Subspace& w, const Subspace& w_sub) {
    if (w.ambient() != s.rows() || w_sub.ambient() != s.rows())
        throw std::invalid_argument("ambient dimension mismatch");
    if (!w.contains(w_sub))
        throw std::invalid_argument("w_sub is not contained in w");
    const int k = w.dim();
    const int j = w_sub.dim();
    if (j == k)
        return Subspace::zero(w.ambient());

    const Mat ext = extend_basis(w_sub.basis(), w.basis());
    const Mat b_w = hcat(w_sub.basis(), ext); // basis of w, w_sub part first
    const auto s_w_opt = solve(b_w, s * b_w);
    if (!s_w_opt)
        throw std::domain_error("w is not invariant under the map");
    const Mat& s_w = *s_w_opt;
    for (int row = j; row < k; ++row)
        for (int col = 0; col < j; ++col)
            if (s_w(row, col) != 0)
                throw std::domain_error("w_sub is not invariant under the map");

    Mat p(j, j), r(k - j, k - j), qblk(j, k - j);
    for (int a = 0; a < j; ++a)
        for (int c = 0; c < j; ++c)
            p(a, c) = s_w(a, c);
    for (int a = 0; a < k - j; ++a)
        for (int c = 0; c < k - j; ++c)
            r(a, c) = s_w(j + a, j + c);
    for (int a = 0; a < j; ++a)
        for (int c = 0; c < k - j; ++c)
            qblk(a, c) = s_w(a, j + c);

    // vec(P Y - Y R) = (I (x) P - R^T (x) I) vec(Y)
    const Mat sylvester = kron(Mat::identity(k - j), p) - kron(r.transpose(), Mat::identity(j));
    const auto y_vec = solve(sylvester, vec(-qblk));
    if (!y_vec)
        throw std::domain_error("no equivariant complement; the map is not semisimple on w");
    const Mat y = unvec(*y_vec, j, k - j);
    const Mat section = vcat(y, Mat::identity(k - j));
    return Subspace::from_columns(b_w * section);
}

/// Generator spaces of the chain filtration: for each chain length m (from
/// the nilpotency index down), F_m is an S-invariant complement of
/// C_m = ker N^(m-1) + (im N intersect ker N^m) inside ker N^m. Emitted only
/// when nonzero; dim F_m = (number of chains of length exactly m).
inline std::vector<std::pair<int, Subspace>> generator_spaces(const Mat& n_restricted,
                                                              const Mat& s_restricted) {
    if (n_restricted.rows() != s_restricted.rows())
        throw std::invalid_argument("shape mismatch");
    if (n_restricted * s_restricted != s_restricted * n_restricted)
        throw std::invalid_argument("maps do not commute");
    const int h = nilpotency_index(n_restricted);
    const int dim = n_restricted.rows();
    std::vector<Subspace> ker_pow; // ker N^m for m = 0..h
    ker_pow.push_back(Subspace::zero(dim));
    Mat power = n_restricted;
    for (int m = 1; m <= h; ++m) {
        ker_pow.push_back(kernel(power));
        power = power * n_restricted;
    }
    const Subspace im_n = image(n_restricted);

    std::vector<std::pair<int, Subspace>> out;
    for (int m = h; m >= 1; --m) {
        const Subspace c_m = ker_pow[static_cast<std::size_t>(m - 1)] +
                             intersect(im_n, ker_pow[static_cast<std::size_t>(m)]);
        Subspace f_m =
            invariant_complement(s_restricted, ker_pow[static_cast<std::size_t>(m)], c_m);
        if (f_m.dim() > 0)
            out.emplace_back(m, std::move(f_m));
    }
    return out;
}

struct CyclicDecomposition {
    Mat basis; // columns concatenate the cyclic bases v, Sv, ..., per block
    std::vector<Poly> companion_polys;
    Mat c_matrix; // basis^-1 S basis, block diagonal of companion matrices
};

/// Greedy cyclic decomposition of a semisimple map: pick the first canonical
/// basis vector v of the working space, read off its monic annihilator from
/// the first linear dependence among v, Sv, S^2 v, ..., adjoin the cyclic
/// basis, and continue on an invariant complement of the cyclic subspace.
inline CyclicDecomposition cyclic_companion_basis(const Mat& s_f) {
    if (!s_f.is_square())
        throw std::invalid_argument("cyclic decomposition needs a square matrix");
    const int q = s_f.rows();
    CyclicDecomposition out;
    out.basis = Mat(q, 0);
    Subspace work = Subspace::full(q);
    while (work.dim() > 0) {
        const Mat v = work.basis().col(0);
        // Iterate v, Sv, ... until the next power becomes dependent; the
        // dependence coefficients are the annihilator.
        Mat krylov = v;
        Mat next = s_f * v;
        auto dep = solve(krylov, next);
        while (!dep) {
            krylov = hcat(krylov, next);
            next = s_f * next;
            dep = solve(krylov, next);
        }
        const Mat& coeff = *dep;
        std::vector<Rational> mu(static_cast<std::size_t>(krylov.cols()) + 1, Rational(0));
        for (int i = 0; i < krylov.cols(); ++i)
            mu[static_cast<std::size_t>(i)] = -coeff(i, 0);
        mu.back() = 1;
        const Poly annihilator = Poly::from_coeffs(std::move(mu));

        out.basis = hcat(out.basis, krylov);
        out.companion_polys.push_back(annihilator);
        work = invariant_complement(s_f, work, Subspace::from_columns(krylov));
    }
    const auto c = solve(out.basis, s_f * out.basis);
    if (!c)
        throw std::logic_error("cyclic bases failed to span");
    out.c_matrix = *c;
    return out;
}

namespace detail {

inline Mat block_diag_of(const std::vector<UniformBlock>& blocks, int n) {
    Mat expected(n, n);
    int off = 0;
    for (const UniformBlock& blk : blocks) {
        const int sz = blk.d_matrix.rows();
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j)
                expected(off + i, off + j) = blk.d_matrix(i, j);
        off += sz;
    }
    return expected;
}

} // namespace detail

/// Assemble the uniform normal form of a from its decomposition: split into
/// ker S and im S, build generator spaces per part, give each F a
/// block-companion basis of S|F, and lay out each block's columns as
/// u_1..u_q, Nu_1..Nu_q, ..., N^(m-1)u_1..N^(m-1)u_q. Kernel part first,
/// then image part, chain lengths descending within each.
inline UniformNormalForm assemble(const Mat& a, const JCDecomposition& dec) {
    const int n = a.rows();
    UniformNormalForm out;
    auto [ker_s, im_s] = split_ker_im(dec.s);
    out.kernel_s_dim = ker_s.dim();

    const std::pair<PartTag, const Subspace*> parts[] = {
        {PartTag::kernel_of_s, &ker_s},
        {PartTag::image_of_s, &im_s},
    };
    out.p_basis = Mat(n, 0);
    for (const auto& [tag, part] : parts) {
        if (part->dim() == 0)
            continue;
        const Mat n_part = restrict_to(dec.n, *part);
        const Mat s_part = restrict_to(dec.s, *part);
        for (auto& [m, f] : generator_spaces(n_part, s_part)) {
            UniformBlock blk;
            blk.part = tag;
            blk.chain_length = m;
            blk.q = f.dim();
            const Mat s_f = restrict_to(s_part, f);
            CyclicDecomposition cyc = cyclic_companion_basis(s_f);
            blk.companion_polys = std::move(cyc.companion_polys);
            blk.c_matrix = std::move(cyc.c_matrix);
            blk.chi_f = Poly::one();
            for (const Poly& mu : blk.companion_polys)
                blk.chi_f *= mu;

            blk.u_columns = part->basis() * (f.basis() * cyc.basis);
            blk.f_basis = Subspace::from_columns(blk.u_columns);

            Mat group = blk.u_columns;
            Mat cols = group;
            for (int row = 1; row < m; ++row) {
                group = dec.n * group;
                cols = hcat(cols, group);
            }
            out.p_basis = hcat(out.p_basis, cols);

            blk.d_matrix = Mat(m * blk.q, m * blk.q);
            for (int row = 0; row < m; ++row)
                for (int i = 0; i < blk.q; ++i)
                    for (int jj = 0; jj < blk.q; ++jj)
                        blk.d_matrix(row * blk.q + i, row * blk.q + jj) = blk.c_matrix(i, jj);
            for (int row = 1; row < m; ++row)
                for (int i = 0; i < blk.q; ++i)
                    blk.d_matrix(row * blk.q + i, (row - 1) * blk.q + i) = 1;

            out.blocks.push_back(std::move(blk));
        }
    }

    const auto p_inv = inverse(out.p_basis);
    if (!p_inv)
        throw std::logic_error("assembled basis is not invertible");
    out.b = *p_inv * a * out.p_basis;
    if (out.b != detail::block_diag_of(out.blocks, n))
        throw std::logic_error("assembled matrix does not match the block layout");

    for (const UniformBlock& blk : out.blocks)
        out.factorization.emplace_back(blk.chi_f, blk.chain_length);
    return out;
}

/// The certified factorization read off the blocks: chi_A equals the product
/// of chi_{S|F}^m over all blocks, the kernel part contributing exactly
/// lambda^(dim ker S).
inline std::vector<std::pair<Poly, int>> factor_charpoly(const UniformNormalForm& unf) {
    return unf.factorization;
}

/// Exact re-verification: invertibility and the conjugation identity, the
/// entrywise block layout, the three per-block uniformity identities
/// (N^(m-1) U != 0, N^m U = 0, ker N^(m-1) meets U in N U), and the
/// characteristic polynomial factorization including the kernel
/// contribution lambda^n.
inline CheckReport verify_uniform(const UniformNormalForm& unf, const Mat& a,
                                  const JCDecomposition& dec) {
    CheckReport rep;
    const auto p_inv = inverse(unf.p_basis);
    rep.add("P invertible", p_inv.has_value());
    if (!p_inv)
        return rep;
    rep.add("P^-1 A P = B", *p_inv * a * unf.p_basis == unf.b);
    rep.add("B matches block layout", unf.b == detail::block_diag_of(unf.blocks, a.rows()));

    int col = 0;
    for (std::size_t i = 0; i < unf.blocks.size(); ++i) {
        const UniformBlock& blk = unf.blocks[i];
        const int width = blk.chain_length * blk.q;
        const Subspace u = image(unf.p_basis.cols_slice(col, col + width));
        col += width;
        const std::string label = " [block " + std::to_string(i) + "]";

        Mat n_pow = Mat::identity(a.rows()); // N^(m-1)
        for (int e = 0; e < blk.chain_length - 1; ++e)
            n_pow = n_pow * dec.n;
        rep.add("N^(m-1) U != 0" + label, apply(n_pow, u).dim() > 0);
        rep.add("N^m U = 0" + label, apply(dec.n * n_pow, u).dim() == 0);
        rep.add("ker N^(m-1) on U = N U" + label,
                intersect(kernel(n_pow), u) == apply(dec.n, u));
    }

    Poly product = Poly::one();
    Poly kernel_product = Poly::one();
    for (const auto& [chi_f, m] : unf.factorization)
        product *= poly_pow(chi_f, m);
    for (const UniformBlock& blk : unf.blocks)
        if (blk.part == PartTag::kernel_of_s)
            kernel_product *= poly_pow(blk.chi_f, blk.chain_length);
    rep.add("product of chi^m = chi_A", product == char_poly(a));
    rep.add("kernel blocks contribute lambda^n",
            kernel_product == Poly::monomial(unf.kernel_s_dim));
    return rep;
}

} // namespace unf
