/*
   Copyright 2026 The genuscenter Authors

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

#ifndef GENUS_EXACT_CYCLOTOMIC_HPP
#define GENUS_EXACT_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "genus/error.hpp"

namespace genus::exact {

/// One raw term q * zeta_N^exponent, q = numerator / denominator.
struct RawTerm {
    long exponent = 0;
    mpz_class numerator;
    mpz_class denominator{1};
};

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Stored in the power basis 1, zeta, ..., zeta^(phi(N)-1) reduced modulo the
/// N-th cyclotomic polynomial, as integer numerators over one positive common
/// denominator with gcd(numerators, denominator) = 1. Values are immutable
/// from the outside; every operation returns a new canonical value.
class Cyclotomic {
public:
    Cyclotomic();                        // zero, order 1
    Cyclotomic(long value);              // NOLINT(google-explicit-constructor)
    explicit Cyclotomic(const mpq_class &value);

    static Cyclotomic rational(long num, long den);
    /// zeta_order^exponent (exponent may be negative).
    static Cyclotomic zeta(int order, long exponent = 1);
    /// Canonical form of an arbitrary sum of terms of the given order.
    /// Throws MalformedRational for a zero denominator, InvalidArgument for order < 1.
    static Cyclotomic from_terms(int order, const std::vector<RawTerm> &terms);

    int order() const { return order_; }
    int degree() const { return static_cast<int>(num_.size()); }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Rational value; requires is_rational().
    mpq_class to_rational() const;
    /// Coefficient of zeta^k in the canonical basis, 0 <= k < degree().
    mpq_class coefficient(int k) const;

    /// Same value expressed in Q(zeta_m); m must be a multiple of order().
    Cyclotomic lift(int m) const;
    /// Galois automorphism zeta -> zeta^t, gcd(t, order) = 1.
    Cyclotomic galois(long t) const;
    /// Complex conjugation, the automorphism zeta -> zeta^-1.
    Cyclotomic conj() const { return galois(-1); }
    Cyclotomic inverse() const;
    /// Embedding zeta_N -> exp(2 pi i / N).
    std::complex<double> to_complex() const;
    /// Embedding zeta_N -> exp(2 pi i t / N).
    std::complex<double> to_complex(long t) const;

    /// Canonical terms (exponent, numerator, denominator), each fraction reduced.
    std::vector<std::tuple<int, mpz_class, mpz_class>> terms() const;
    std::string to_string() const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b);
    Cyclotomic &operator+=(const Cyclotomic &b) { return *this = *this + b; }
    Cyclotomic &operator-=(const Cyclotomic &b) { return *this = *this - b; }
    Cyclotomic &operator*=(const Cyclotomic &b) { return *this = *this * b; }
    Cyclotomic &operator/=(const Cyclotomic &b) { return *this = *this / b; }
    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);
    friend bool operator!=(const Cyclotomic &a, const Cyclotomic &b) { return !(a == b); }

private:
    Cyclotomic(int order, std::vector<mpz_class> num, mpz_class den);
    void canonicalize();

    int order_ = 1;
    std::vector<mpz_class> num_;
    mpz_class den_{1};
};

std::ostream &operator<<(std::ostream &os, const Cyclotomic &c);

/// Euler totient.
int totient(int n);
/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long> &cyclotomic_polynomial(int n);

}  // namespace genus::exact

#endif
