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
#include "unf/poly.hpp"

#include <stdexcept>

namespace unf {

// Square-free data attached to a characteristic polynomial chi: the monic
// gcd d = gcd(chi, chi'), the square-free part p = chi / d (same roots as
// chi, each once), and the smallest big_m with chi | p^big_m. A matrix is
// semisimple exactly when p annihilates it, and big_m bounds how many terms
// the semisimple-part recursion needs. No factorization happens anywhere.
struct SquarefreeData {
    Poly chi;
    Poly d;
    Poly p;
    int big_m = 0;
};

/// Smallest M >= 1 with chi dividing p^M, by repeated multiplication.
inline int multiplicity(const Poly& chi, const Poly& p) {
    Poly power = Poly::one();
    for (int m = 1; m <= chi.degree(); ++m) {
        power *= p;
        if (poly_divmod(power, chi).remainder.is_zero())
            return m;
    }
    throw std::invalid_argument("p does not divide chi to any power up to its degree");
}

inline SquarefreeData squarefree_part(const Poly& chi) {
    if (!chi.is_monic() || chi.degree() < 1)
        throw std::invalid_argument("characteristic polynomial must be monic of degree >= 1");
    SquarefreeData out;
    out.chi = chi;
    out.d = poly_gcd_monic(chi, derivative(chi));
    out.p = poly_div_exact(chi, out.d);
    out.big_m = multiplicity(chi, out.p);
    return out;
}

struct SemisimpleResult {
    bool flag = false;
    Mat witness; // p(A); zero exactly when a is semisimple
    SquarefreeData squarefree;
};

/// Semisimplicity certificate: compute p from chi_A and test p(A) = 0.
inline SemisimpleResult is_semisimple(const Mat& a) {
    if (!a.is_square() || a.rows() == 0)
        throw std::invalid_argument("semisimplicity test needs a nonempty square matrix");
    SemisimpleResult out;
    out.squarefree = squarefree_part(char_poly(a));
    out.witness = eval_poly_at(out.squarefree.p, a);
    out.flag = out.witness.is_zero();
    return out;
}

} // namespace unf
