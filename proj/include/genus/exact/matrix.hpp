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

#ifndef GENUS_EXACT_MATRIX_HPP
#define GENUS_EXACT_MATRIX_HPP

#include <string>
#include <vector>

#include "genus/exact/cyclotomic.hpp"

namespace genus::exact {

using Vector = std::vector<Cyclotomic>;

/// Dense row-major matrix of cyclotomic numbers.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);
    ExactMatrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows);

    static ExactMatrix identity(int n);
    static ExactMatrix scalar(const Cyclotomic &c) { return ExactMatrix(1, 1).set(0, 0, c); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const Cyclotomic &operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
    Cyclotomic &operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    ExactMatrix &set(int r, int c, const Cyclotomic &v) {
        (*this)(r, c) = v;
        return *this;
    }

    bool is_zero() const;
    bool is_identity() const;
    ExactMatrix transpose() const;
    Vector row(int r) const;
    Vector column(int c) const;
    Cyclotomic trace() const;

    friend ExactMatrix operator+(const ExactMatrix &a, const ExactMatrix &b);
    friend ExactMatrix operator-(const ExactMatrix &a, const ExactMatrix &b);
    friend ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b);
    friend ExactMatrix operator*(const Cyclotomic &s, const ExactMatrix &a);
    ExactMatrix operator-() const;
    ExactMatrix &operator+=(const ExactMatrix &b);
    friend bool operator==(const ExactMatrix &a, const ExactMatrix &b);
    friend bool operator!=(const ExactMatrix &a, const ExactMatrix &b) { return !(a == b); }
    Vector apply(const Vector &v) const;

    /// Block-diagonal direct sum.
    static ExactMatrix direct_sum(const ExactMatrix &a, const ExactMatrix &b);
    /// Kronecker product.
    static ExactMatrix kron(const ExactMatrix &a, const ExactMatrix &b);

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Cyclotomic> data_;
};

/// Reduced row echelon form with the list of pivot columns.
struct Echelon {
    ExactMatrix rref;
    std::vector<int> pivots;
};

Echelon row_reduce(const ExactMatrix &m);
int rank(const ExactMatrix &m);
/// Basis of {v : M v = 0}.
std::vector<Vector> nullspace(const ExactMatrix &m);
/// Some solution of M x = rhs; throws SingularMatrix when inconsistent.
Vector solve(const ExactMatrix &m, const Vector &rhs);
/// Throws SingularMatrix when not invertible, DimensionMismatch when not square.
ExactMatrix inverse(const ExactMatrix &m);

/// Floating-point rank of the embedding zeta -> exp(2 pi i / N), for cross-checks.
int float_rank(const ExactMatrix &m, double tol = 1e-8);

}  // namespace genus::exact

#endif
