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

#include "helpers.hpp"

#include <unf/corpus.hpp>
#include <unf/uniform.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace unf;
using unf::testing::block_diag;
using unf::testing::col;
using unf::testing::mat;
using unf::testing::poly;
using unf::testing::shift_block;

TEST_CASE("split_ker_im") {
    {
        const auto [ker, im] = split_ker_im(mat({{0, 0}, {0, 2}}));
        CHECK(ker == Subspace::from_columns(col({1, 0})));
        CHECK(im == Subspace::from_columns(col({0, 1})));
    }
    {
        const auto [ker, im] = split_ker_im(Mat(2, 2));
        CHECK(ker.dim() == 2);
        CHECK(im.dim() == 0);
    }
    {
        const auto [ker, im] = split_ker_im(Mat::identity(3));
        CHECK(ker.dim() == 0);
        CHECK(im.dim() == 3);
    }
    CHECK_THROWS_AS(split_ker_im(mat({{1, 1}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("invariant_complement fixtures") {
    {
        // Distinct eigenvalues force the complement to be the other eigenline.
        const Subspace f = invariant_complement(mat({{1, 0}, {0, 2}}), Subspace::full(2),
                                                Subspace::from_columns(col({1, 0})));
        CHECK(f == Subspace::from_columns(col({0, 1})));
    }
    {
        // Scalar map: the deterministic choice is the extension column itself.
        const Subspace f = invariant_complement(Mat::identity(2), Subspace::full(2),
                                                Subspace::from_columns(col({1, 0})));
        CHECK(f == Subspace::from_columns(col({0, 1})));
    }
    {
        // Equal subspaces give the zero complement.
        const Subspace w = Subspace::from_columns(col({1, 0}));
        CHECK(invariant_complement(Mat::identity(2), w, w).dim() == 0);
    }
    {
        // A non-semisimple action has no invariant complement at all.
        CHECK_THROWS_AS(invariant_complement(mat({{1, 1}, {0, 1}}), Subspace::full(2),
                                             Subspace::from_columns(col({1, 0}))),
                        std::domain_error);
    }
    {
        // w itself must be invariant.
        CHECK_THROWS_AS(invariant_complement(mat({{0, -1}, {1, 0}}),
                                             Subspace::from_columns(col({1, 0})),
                                             Subspace::zero(2)),
                        std::domain_error);
    }
    {
        // And so must w_sub.
        CHECK_THROWS_AS(invariant_complement(mat({{0, 1}, {1, 0}}), Subspace::full(2),
                                             Subspace::from_columns(col({1, 0}))),
                        std::domain_error);
    }
    CHECK_THROWS_AS(invariant_complement(Mat::identity(2), Subspace::from_columns(col({1, 0})),
                                         Subspace::full(2)),
                    std::invalid_argument);
}

TEST_CASE("invariant_complement really complements and stays invariant") {
    CorpusRng rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = rng.range(2, 5);
        const OracleCase oc = random_jc_oracle(rng, n);
        const Mat& s = oc.s; // semisimple by construction
        const Subspace w = Subspace::full(n);
        const Subspace w_sub = image(eval_poly_at(squarefree_part(char_poly(s)).p, s) + s);
        // w_sub = im s(s) for a polynomial in s, hence invariant.
        const Subspace f = invariant_complement(s, w, w_sub);
        CHECK(is_invariant(s, f));
        CHECK(f.dim() + w_sub.dim() == n);
        CHECK(intersect(f, w_sub).dim() == 0);
        CHECK((w_sub + f) == w);
    }
}

TEST_CASE("generator_spaces fixtures") {
    {
        // Single Jordan block J2: one generator space at chain length 2.
        const auto spaces = generator_spaces(shift_block(2), Mat::identity(2));
        REQUIRE(spaces.size() == 1);
        CHECK(spaces[0].first == 2);
        CHECK(spaces[0].second == Subspace::from_columns(col({0, 1})));
    }
    {
        // Zero nilpotent part: everything is a length-1 generator.
        const auto spaces = generator_spaces(Mat(2, 2), mat({{1, 0}, {0, 2}}));
        REQUIRE(spaces.size() == 1);
        CHECK(spaces[0].first == 1);
        CHECK(spaces[0].second == Subspace::full(2));
    }
    {
        // shift3 (+) zero1: lengths 3 and 1, nothing at length 2.
        const Mat n = block_diag({shift_block(3), Mat(1, 1)});
        const auto spaces = generator_spaces(n, Mat(4, 4));
        REQUIRE(spaces.size() == 2);
        CHECK(spaces[0].first == 3);
        CHECK(spaces[0].second == Subspace::from_columns(col({0, 0, 1, 0})));
        CHECK(spaces[1].first == 1);
        CHECK(spaces[1].second == Subspace::from_columns(col({0, 0, 0, 1})));
    }
    CHECK_THROWS_AS(generator_spaces(shift_block(2), mat({{1, 0}, {0, 2}})),
                    std::invalid_argument);
}

TEST_CASE("generator space dimensions count chains of each exact length") {
    CorpusRng rng(73);
    for (int trial = 0; trial < 15; ++trial) {
        const int dim = rng.range(1, 6);
        const Mat n = random_nilpotent(rng, dim);
        const auto spaces = generator_spaces(n, Mat(dim, dim));
        const KernelFiltration f = kernel_filtration(n);
        const auto rows_at = [&](int m) {
            return m <= static_cast<int>(f.row_counts.size())
                       ? f.row_counts[static_cast<std::size_t>(m - 1)]
                       : 0;
        };
        int covered = 0;
        for (const auto& [m, space] : spaces) {
            CHECK(space.dim() == rows_at(m) - rows_at(m + 1));
            covered += m * space.dim();
        }
        CHECK(covered == dim);
    }
}

TEST_CASE("cyclic_companion_basis fixtures") {
    {
        const CyclicDecomposition cyc = cyclic_companion_basis(Rational(2) * Mat::identity(2));
        REQUIRE(cyc.companion_polys.size() == 2);
        CHECK(cyc.companion_polys[0] == poly({-2, 1}));
        CHECK(cyc.companion_polys[1] == poly({-2, 1}));
        CHECK(cyc.basis == Mat::identity(2));
        CHECK(cyc.c_matrix == Rational(2) * Mat::identity(2));
    }
    {
        const Mat rot = mat({{0, -1}, {1, 0}});
        const CyclicDecomposition cyc = cyclic_companion_basis(rot);
        REQUIRE(cyc.companion_polys.size() == 1);
        CHECK(cyc.companion_polys[0] == poly({1, 0, 1}));
        CHECK(cyc.basis == Mat::identity(2));
        CHECK(cyc.c_matrix == rot);
    }
    {
        const CyclicDecomposition cyc = cyclic_companion_basis(mat({{1, 0}, {0, 2}}));
        REQUIRE(cyc.companion_polys.size() == 2);
        CHECK(cyc.companion_polys[0] == poly({-1, 1}));
        CHECK(cyc.companion_polys[1] == poly({-2, 1}));
        CHECK(cyc.c_matrix == mat({{1, 0}, {0, 2}}));
    }
    {
        const CyclicDecomposition cyc = cyclic_companion_basis(Mat(0, 0));
        CHECK(cyc.companion_polys.empty());
        CHECK(cyc.basis.cols() == 0);
    }
}

TEST_CASE("cyclic decomposition multiplies out to the characteristic polynomial") {
    CorpusRng rng(79);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = rng.range(1, 5);
        const Mat s = random_jc_oracle(rng, n).s;
        const CyclicDecomposition cyc = cyclic_companion_basis(s);
        Poly product = Poly::one();
        for (const Poly& mu : cyc.companion_polys)
            product *= mu;
        CHECK(product == char_poly(s));
        CHECK(s * cyc.basis == cyc.basis * cyc.c_matrix);
        REQUIRE(inverse(cyc.basis).has_value());
        // c really is block diagonal of companion matrices.
        Mat expected(n, n);
        int off = 0;
        for (const Poly& mu : cyc.companion_polys) {
            const Mat c = companion_matrix(mu);
            for (int i = 0; i < c.rows(); ++i)
                for (int j = 0; j < c.cols(); ++j)
                    expected(off + i, off + j) = c(i, j);
            off += c.rows();
        }
        CHECK(cyc.c_matrix == expected);
    }
}

TEST_CASE("assemble on the worked fixtures") {
    {
        const Mat a = mat({{1, 1}, {0, 1}});
        const UniformNormalForm unf = assemble(a, jc_iterate(a));
        CHECK(unf.p_basis == mat({{0, 1}, {1, 0}}));
        CHECK(unf.b == mat({{1, 0}, {1, 1}}));
        REQUIRE(unf.blocks.size() == 1);
        CHECK(unf.blocks[0].part == PartTag::image_of_s);
        CHECK(unf.blocks[0].chain_length == 2);
        CHECK(unf.blocks[0].q == 1);
        CHECK(unf.blocks[0].companion_polys == std::vector<Poly>{poly({-1, 1})});
        CHECK(unf.factorization ==
              std::vector<std::pair<Poly, int>>{{poly({-1, 1}), 2}});
        CHECK(unf.kernel_s_dim == 0);
    }
    {
        const Mat a = mat({{0, -1}, {1, 0}});
        const UniformNormalForm unf = assemble(a, jc_iterate(a));
        CHECK(unf.p_basis == Mat::identity(2));
        CHECK(unf.b == a);
        REQUIRE(unf.blocks.size() == 1);
        CHECK(unf.blocks[0].chain_length == 1);
        CHECK(unf.blocks[0].q == 2);
        CHECK(unf.blocks[0].chi_f == poly({1, 0, 1}));
    }
    {
        const Mat a = Mat(2, 2);
        const UniformNormalForm unf = assemble(a, jc_iterate(a));
        CHECK(unf.b == a);
        REQUIRE(unf.blocks.size() == 1);
        CHECK(unf.blocks[0].part == PartTag::kernel_of_s);
        CHECK(unf.blocks[0].chi_f == poly({0, 0, 1}));
        CHECK(unf.kernel_s_dim == 2);
    }
    {
        // Nilpotent J2: a single kernel block of chain length 2.
        const Mat a = shift_block(2);
        const UniformNormalForm unf = assemble(a, jc_iterate(a));
        CHECK(unf.p_basis == mat({{0, 1}, {1, 0}}));
        CHECK(unf.b == mat({{0, 0}, {1, 0}}));
        REQUIRE(unf.blocks.size() == 1);
        CHECK(unf.blocks[0].part == PartTag::kernel_of_s);
        CHECK(unf.blocks[0].chain_length == 2);
        CHECK(unf.blocks[0].companion_polys == std::vector<Poly>{poly({0, 1})});
    }
    {
        const Mat a = mat({{5}});
        const UniformNormalForm unf = assemble(a, jc_iterate(a));
        CHECK(unf.b == a);
        REQUIRE(unf.blocks.size() == 1);
        CHECK(unf.blocks[0].companion_polys == std::vector<Poly>{poly({-5, 1})});
    }
}

TEST_CASE("assemble on a mixed kernel and image input") {
    // J2(0) (+) J2(1) (+) J2(1): one kernel block (m=2, q=1) and one image
    // block (m=2, q=2), and the certified factorization lambda^2 (lambda-1)^4.
    Mat j2_1 = shift_block(2);
    j2_1(0, 0) = j2_1(1, 1) = 1;
    const Mat a = block_diag({shift_block(2), j2_1, j2_1});
    const JCDecomposition dec = jc_iterate(a);
    const UniformNormalForm unf = assemble(a, dec);

    REQUIRE(unf.blocks.size() == 2);
    CHECK(unf.blocks[0].part == PartTag::kernel_of_s);
    CHECK(unf.blocks[0].chain_length == 2);
    CHECK(unf.blocks[0].q == 1);
    CHECK(unf.blocks[0].chi_f == poly({0, 1}));
    CHECK(unf.blocks[1].part == PartTag::image_of_s);
    CHECK(unf.blocks[1].chain_length == 2);
    CHECK(unf.blocks[1].q == 2);
    CHECK(unf.blocks[1].chi_f == poly({1, -2, 1}));
    CHECK(unf.kernel_s_dim == 2);

    const auto factors = factor_charpoly(unf);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == std::pair<Poly, int>{poly({0, 1}), 2});
    CHECK(factors[1] == std::pair<Poly, int>{poly({1, -2, 1}), 2});
    Poly product = Poly::one();
    for (const auto& [chi_f, m] : factors)
        product *= poly_pow(chi_f, m);
    CHECK(product == char_poly(a));

    CHECK(verify_uniform(unf, a, dec).ok());
}

TEST_CASE("verify_uniform passes on fixtures and flags tampering") {
    const Mat a = mat({{1, 1}, {0, 1}});
    const JCDecomposition dec = jc_iterate(a);
    UniformNormalForm unf = assemble(a, dec);
    CHECK(verify_uniform(unf, a, dec).ok());

    unf.b(0, 0) += 1;
    const CheckReport rep = verify_uniform(unf, a, dec);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.check("P^-1 A P = B"));
    CHECK_FALSE(rep.check("B matches block layout"));
}

TEST_CASE("assemble and verify across a random corpus") {
    CorpusRng rng(83);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = rng.range(1, 5);
        const Mat a = random_integer_matrix(rng, n, -3, 3);
        const JCDecomposition dec = jc_iterate(a);
        const UniformNormalForm unf = assemble(a, dec);
        CHECK(verify_uniform(unf, a, dec).ok());
        // Chain lengths appear kernel first, then image, descending in each.
        for (std::size_t i = 1; i < unf.blocks.size(); ++i) {
            const auto& prev = unf.blocks[i - 1];
            const auto& cur = unf.blocks[i];
            const bool ordered =
                prev.part == PartTag::kernel_of_s && cur.part == PartTag::image_of_s;
            CHECK((ordered || (prev.part == cur.part && prev.chain_length > cur.chain_length)));
        }
    }
}
