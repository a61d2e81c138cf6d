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
#include <unf/semisimple.hpp>
#include <unf/young.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace unf;

TEST_CASE("a seed reproduces the same stream") {
    CorpusRng a(12345), b(12345);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = a.range(1, 6);
        REQUIRE(b.range(1, 6) == n);
        CHECK(random_integer_matrix(a, n, -9, 9) == random_integer_matrix(b, n, -9, 9));
    }
    CorpusRng c(54321);
    CHECK(random_integer_matrix(a, 3, -9, 9) != random_integer_matrix(c, 3, -9, 9));
}

TEST_CASE("random_integer_matrix respects its bounds") {
    CorpusRng rng(7);
    const Mat m = random_integer_matrix(rng, 5, -3, 3);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            CHECK(m(i, j) >= -3);
            CHECK(m(i, j) <= 3);
            CHECK(denominator(m(i, j)) == 1);
        }
}

TEST_CASE("random_unimodular is invertible with integer entries") {
    CorpusRng rng(11);
    CHECK(random_unimodular(rng, 1) == Mat::identity(1));
    for (int trial = 0; trial < 10; ++trial) {
        const int n = rng.range(2, 6);
        const Mat t = random_unimodular(rng, n);
        const auto inv = inverse(t);
        REQUIRE(inv.has_value());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CHECK(denominator(t(i, j)) == 1);
                CHECK(denominator((*inv)(i, j)) == 1);
            }
    }
}

TEST_CASE("random_nilpotent is nilpotent of full support") {
    CorpusRng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = rng.range(1, 6);
        const Mat m = random_nilpotent(rng, n);
        CHECK(nilpotency_index(m) <= n);
        int total = 0;
        for (const JordanChain& chain : young_basis(m).chains)
            total += chain.length;
        CHECK(total == n);
    }
}

TEST_CASE("random_jc_oracle satisfies the decomposition axioms") {
    CorpusRng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = rng.range(1, 6);
        const OracleCase oc = random_jc_oracle(rng, n);
        CHECK(oc.s + oc.n == oc.a);
        CHECK(oc.s * oc.n == oc.n * oc.s);
        // s is semisimple: the square-free part of its char poly kills it.
        CHECK(eval_poly_at(squarefree_part(char_poly(oc.s)).p, oc.s).is_zero());
        // n is nilpotent.
        Mat power = Mat::identity(n);
        for (int i = 0; i < n; ++i)
            power = power * oc.n;
        CHECK(power.is_zero());
    }
}
