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

#include "unf/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace unf {

// Dense univariate polynomial over the rationals. Coefficients are stored in
// ascending degree with no trailing zeros; the zero polynomial is the empty
// sequence and reports degree() == -1. All arithmetic is exact; there is no
// attempt at asymptotically fast multiplication, the degrees in this library
// stay small.
class Poly {
  public:
    Poly() = default;

    Poly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { prune(); }

    static Poly from_coeffs(std::vector<Rational> ascending) {
        Poly p;
        p.coeffs_ = std::move(ascending);
        p.prune();
        return p;
    }

    static Poly constant(Rational c) {
        Poly p;
        if (c != 0)
            p.coeffs_.push_back(std::move(c));
        return p;
    }

    static Poly one() { return constant(1); }

    /// c * lambda^d
    static Poly monomial(int d, Rational c = Rational(1)) {
        Poly p;
        if (c != 0) {
            p.coeffs_.assign(static_cast<std::size_t>(d) + 1, Rational(0));
            p.coeffs_.back() = std::move(c);
        }
        return p;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Coefficient of lambda^i; zero beyond the degree.
    Rational coeff(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size())
            return Rational(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    Rational leading() const {
        if (coeffs_.empty())
            throw std::invalid_argument("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    std::span<const Rational> coeffs() const { return coeffs_; }

    bool operator==(const Poly& other) const = default;

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            out[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            out[i] += b.coeffs_[i];
        return from_coeffs(std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero())
            return Poly{};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coeffs(std::move(out));
    }

    friend Poly operator*(const Rational& s, const Poly& p) {
        if (s == 0)
            return Poly{};
        Poly r = p;
        for (auto& c : r.coeffs_)
            c *= s;
        return r;
    }

    Poly& operator+=(const Poly& other) { return *this = *this + other; }
    Poly& operator-=(const Poly& other) { return *this = *this - other; }
    Poly& operator*=(const Poly& other) { return *this = *this * other; }

    /// Evaluation at a scalar, by Horner.
    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * x + coeffs_[i];
        return acc;
    }

  private:
    void prune() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) {
    os << "[";
    for (int i = 0; i <= p.degree(); ++i) {
        if (i)
            os << ", ";
        os << p.coeff(i);
    }
    return os << "]";
}

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

/// Division with remainder: a = quotient * b + remainder, deg r < deg b.
inline PolyDivMod poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    const int db = b.degree();
    const Rational lead = b.leading();
    if (a.degree() < db)
        return {Poly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1, Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        const Rational c = rem[static_cast<std::size_t>(i)] / lead;
        if (c == 0)
            continue;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
    }
    return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).remainder; }

/// Exact quotient; throws if the division leaves a remainder.
inline Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero())
        throw std::invalid_argument("inexact polynomial division");
    return q;
}

inline Poly monic(const Poly& f) {
    if (f.is_zero())
        throw std::invalid_argument("cannot normalize the zero polynomial");
    return (Rational(1) / f.leading()) * f;
}

/// Monic gcd by the Euclidean algorithm.
inline Poly poly_gcd_monic(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd(0, 0) is undefined");
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = poly_divmod(r0, r1).remainder;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return monic(r0);
}

struct BezoutTriple {
    Poly u;
    Poly v;
    Poly g; // monic gcd, u*a + v*b = g
};

/// Extended Euclidean algorithm. Returns u, v with u*a + v*b = g (monic).
/// When g = 1 and deg a >= 1 the pair is reduced so that deg v < deg a.
inline BezoutTriple poly_ext_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd(0, 0) is undefined");
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(), s1{};
    Poly t0{}, t1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Rational inv = Rational(1) / r0.leading();
    Poly g = inv * r0, u = inv * s0, v = inv * t0;
    if (g.is_one() && a.degree() >= 1 && v.degree() >= a.degree()) {
        auto [q, vr] = poly_divmod(v, a);
        v = std::move(vr);
        u = u + q * b;
    }
    return {std::move(u), std::move(v), std::move(g)};
}

inline Poly derivative(const Poly& f) {
    std::vector<Rational> out;
    for (int i = 1; i <= f.degree(); ++i)
        out.push_back(Rational(i) * f.coeff(i));
    return Poly::from_coeffs(std::move(out));
}

/// Scaled derivatives f^(0), ..., f^(k) where f^(i) is 1/i! times the i-th
/// derivative. These satisfy f(x + z) = sum_i f^(i)(x) z^i with no
/// factorials anywhere downstream.
inline std::vector<Poly> scaled_derivatives(const Poly& f, int k) {
    if (k < 0)
        throw std::invalid_argument("negative derivative count");
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    out.push_back(f);
    for (int i = 1; i <= k; ++i)
        out.push_back((Rational(1) / Rational(i)) * derivative(out.back()));
    return out;
}

inline Poly poly_pow(const Poly& f, int e) {
    if (e < 0)
        throw std::invalid_argument("negative polynomial power");
    Poly acc = Poly::one();
    for (int i = 0; i < e; ++i)
        acc *= f;
    return acc;
}

} // namespace unf
