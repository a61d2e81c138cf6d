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
#include "unf/matrix.hpp"
#include "unf/poly.hpp"
#include "unf/semisimple.hpp"

#include <stdexcept>
#include <vector>

namespace unf {

// Intermediate polynomial sequences of the semisimple-part recursion. All
// vectors are subscript aligned (entry i is the sequence member with index
// i) and have length max(M, 1):
//   b[0] = 1; r[0], q[0], e[0], d[0] unused (zero)
//   e[1] = 0, e_n = correction_term(n) for n >= 2
//   d_n  = h * (b_{n-1} + e_n)
//   q_n, r_n from d_n = q_n * p + r_n, so deg r_n < deg p
//   b_n  = g * (b_{n-1} + e_n) - p' * q_n
// In particular r[1] = h, b[1] = g. The defining identity, checked in tests
// for every index, is
//   r_i * p' + e_i = b_i * p - b_{i-1},
// which follows by substituting the definitions and g*p - h*p' = 1; the
// b_{n-1} summand carries the previous residue forward, which is what makes
// the identity exact rather than merely a congruence mod p.
struct JCState {
    Poly p;
    std::vector<Poly> p_derivs; // scaled derivatives p^(0) .. p^(M-1)
    Poly g;
    Poly h; // g * p - h * p' = 1, deg h < deg p
    std::vector<Poly> r;
    std::vector<Poly> b;
    std::vector<Poly> q;
    std::vector<Poly> e;
    std::vector<Poly> d;
};

struct JCDecomposition {
    Mat s;             // semisimple part
    Mat n;             // nilpotent part, n = a - s
    Poly s_polynomial; // s(lambda) with S = s(A), reduced mod chi_A
    JCState state;
    SquarefreeData squarefree;
};

/// Solve g * p - h * p' = 1 with deg h < deg p. Fails unless p is
/// square-free, which is exactly when p and p' are coprime.
inline std::pair<Poly, Poly> bezout_pair(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("bezout_pair needs a monic polynomial of degree >= 1");
    const BezoutTriple t = poly_ext_gcd(p, derivative(p));
    if (!t.g.is_one())
        throw std::invalid_argument("polynomial is not square-free");
    return {t.u, -t.v};
}

namespace detail {

// Truncated power series in z whose coefficients are polynomials in lambda;
// index = z-degree, capped at `cap` inclusive.
using ZSeries = std::vector<Poly>;

inline ZSeries zmul(const ZSeries& a, const ZSeries& b, int cap) {
    ZSeries out(static_cast<std::size_t>(cap) + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(cap); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

} // namespace detail

/// The correction e_n = sum_{j=2..n} c_{n,j} p^(j), where c_{n,j} is the
/// coefficient of z^n in (r_1 z + ... + r_{n-1} z^{n-1})^j. Only r_1..r_{n-1}
/// enter: a term of T(z)^j with j >= 2 touching z^m for m >= n has total
/// z-degree > n, so truncating T at z^{n-1} loses nothing.
inline Poly correction_term(const JCState& state, int n) {
    if (n < 2)
        throw std::invalid_argument("correction_term is defined for n >= 2");
    const int cap = n;
    detail::ZSeries t(static_cast<std::size_t>(cap) + 1);
    for (int m = 1; m <= n - 1 && m < static_cast<int>(state.r.size()); ++m)
        t[static_cast<std::size_t>(m)] = state.r[static_cast<std::size_t>(m)];
    Poly e_n;
    detail::ZSeries power = t; // T^1
    for (int j = 2; j <= n; ++j) {
        power = detail::zmul(power, t, cap);
        if (j < static_cast<int>(state.p_derivs.size()))
            e_n += power[static_cast<std::size_t>(cap)] * state.p_derivs[static_cast<std::size_t>(j)];
    }
    return e_n;
}

/// Exact verification of a decomposition. Every check is a strict matrix or
/// polynomial identity over the rationals.
inline CheckReport jc_verify(const Mat& a, const JCDecomposition& dec) {
    CheckReport rep;
    rep.add("S+N=A", dec.s + dec.n == a);
    rep.add("SN=NS", dec.s * dec.n == dec.n * dec.s);
    rep.add("p(S)=0", eval_poly_at(dec.squarefree.p, dec.s).is_zero());
    Mat npow = Mat::identity(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        npow = npow * dec.n;
    rep.add("N^dim=0", npow.is_zero());
    rep.add("S=s_polynomial(A)", eval_poly_at(dec.s_polynomial, a) == dec.s);
    return rep;
}

/// The factorization-free Jordan decomposition: S semisimple, N nilpotent,
/// S + N = A, SN = NS, both polynomials in A. S is produced as
/// A + sum_{j=1..M-1} r_j(A) p(A)^j with the r_j built by the recursion
/// d_n = h (b_{n-1} + e_n), d_n = q_n p + r_n, b_n = g (b_{n-1} + e_n) - p' q_n.
/// Summing the per-index identity r_i p' + e_i = b_i p - b_{i-1} against p^i
/// telescopes the Taylor expansion of p(S) to b_{M-1}(A) p(A)^M = 0.
inline JCDecomposition jc_iterate(const Mat& a) {
    if (!a.is_square() || a.rows() == 0)
        throw std::invalid_argument("decomposition needs a nonempty square matrix");
    JCDecomposition dec;
    dec.squarefree = squarefree_part(char_poly(a));
    const Poly& chi = dec.squarefree.chi;
    const Poly& p = dec.squarefree.p;
    const int big_m = dec.squarefree.big_m;

    JCState& st = dec.state;
    st.p = p;

    if (big_m == 1 || chi.degree() == 1) {
        // chi | p, so p(A) = 0 already: A is its own semisimple part.
        st.p_derivs = scaled_derivatives(p, 0);
        st.r.assign(1, Poly{});
        st.b.assign(1, Poly::one());
        st.q.assign(1, Poly{});
        st.e.assign(1, Poly{});
        st.d.assign(1, Poly{});
        dec.s = a;
        dec.n = Mat(a.rows(), a.cols());
        dec.s_polynomial = poly_mod(Poly::monomial(1), chi);
    } else {
        st.p_derivs = scaled_derivatives(p, big_m - 1);
        auto [g, h] = bezout_pair(p);
        st.g = g;
        st.h = h;
        const std::size_t len = static_cast<std::size_t>(big_m);
        st.r.assign(len, Poly{});
        st.b.assign(len, Poly{});
        st.q.assign(len, Poly{});
        st.e.assign(len, Poly{});
        st.d.assign(len, Poly{});
        st.b[0] = Poly::one();

        // n = 1 gives d_1 = h, q_1 = 0, r_1 = h, b_1 = g, reproducing the
        // Bezout base case through the same formulas.
        for (int n = 1; n <= big_m - 1; ++n) {
            const std::size_t un = static_cast<std::size_t>(n);
            if (n >= 2)
                st.e[un] = correction_term(st, n);
            const Poly carry = st.b[un - 1] + st.e[un];
            st.d[un] = h * carry;
            auto [qn, rn] = poly_divmod(st.d[un], p);
            st.q[un] = std::move(qn);
            st.r[un] = std::move(rn);
            st.b[un] = g * carry - st.p_derivs[1] * st.q[un];
        }

        // S = A + sum r_j(A) P^j by Horner in P = p(A), and the matching
        // s(lambda) reduced mod chi as a certificate that S is a polynomial
        // in A.
        const Mat pa = eval_poly_at(p, a);
        Mat acc(a.rows(), a.cols());
        Poly s_poly;
        for (int j = big_m - 1; j >= 1; --j) {
            acc = pa * acc + eval_poly_at(st.r[static_cast<std::size_t>(j)], a);
            s_poly = p * s_poly + st.r[static_cast<std::size_t>(j)];
        }
        dec.s = a + pa * acc;
        dec.n = a - dec.s;
        dec.s_polynomial = poly_mod(Poly::monomial(1) + p * s_poly, chi);
    }

    // The construction guarantees these; a failure here is a bug, not bad
    // input.
    if (!(dec.s + dec.n == a) || !(dec.s * dec.n == dec.n * dec.s) ||
        !eval_poly_at(p, dec.s).is_zero())
        throw std::logic_error("semisimple-part recursion produced an invalid decomposition");
    return dec;
}

} // namespace unf
