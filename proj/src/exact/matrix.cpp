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

#include "genus/exact/matrix.hpp"

#include <Eigen/Dense>
#include <sstream>

namespace genus::exact {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto &r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto &x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const auto &x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector ExactMatrix::row(int r) const { return Vector(data_.begin() + static_cast<long>(r) * cols_, data_.begin() + static_cast<long>(r + 1) * cols_); }

Vector ExactMatrix::column(int c) const {
    Vector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

Cyclotomic ExactMatrix::trace() const {
    if (rows_ != cols_) throw DimensionMismatch("trace of a non-square matrix");
    Cyclotomic s;
    for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
}

ExactMatrix operator+(const ExactMatrix &a, const ExactMatrix &b) {
    ExactMatrix r = a;
    r += b;
    return r;
}

ExactMatrix &ExactMatrix::operator+=(const ExactMatrix &b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    for (size_t k = 0; k < data_.size(); ++k)
        if (!b.data_[k].is_zero()) data_[k] += b.data_[k];
    return *this;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r = *this;
    for (auto &x : r.data_)
        if (!x.is_zero()) x = -x;
    return r;
}

ExactMatrix operator-(const ExactMatrix &a, const ExactMatrix &b) { return a + (-b); }

ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b) {
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    ExactMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Cyclotomic &x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Cyclotomic &y = b(k, j);
                if (y.is_zero()) continue;
                r(i, j) += x * y;
            }
        }
    return r;
}

ExactMatrix operator*(const Cyclotomic &s, const ExactMatrix &a) {
    ExactMatrix r = a;
    if (s.is_one()) return r;
    for (auto &x : r.data_)
        if (!x.is_zero()) x = s * x;
    return r;
}

bool operator==(const ExactMatrix &a, const ExactMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector ExactMatrix::apply(const Vector &v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

ExactMatrix ExactMatrix::direct_sum(const ExactMatrix &a, const ExactMatrix &b) {
    ExactMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
    return r;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix &a, const ExactMatrix &b) {
    ExactMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows_; ++k)
                for (int l = 0; l < b.cols_; ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
        }
    return r;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

Echelon row_reduce(const ExactMatrix &m) {
    Echelon e{m, {}};
    ExactMatrix &a = e.rref;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        Cyclotomic inv = a(r, c).inverse();
        for (int j = c; j < a.cols(); ++j)
            if (!a(r, j).is_zero()) a(r, j) = a(r, j) * inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Cyclotomic f = a(i, c);
            for (int j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

int rank(const ExactMatrix &m) { return static_cast<int>(row_reduce(m).pivots.size()); }

std::vector<Vector> nullspace(const ExactMatrix &m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (size_t r = 0; r < e.pivots.size(); ++r)
            if (!e.rref(static_cast<int>(r), f).is_zero()) v[e.pivots[r]] = -e.rref(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Vector solve(const ExactMatrix &m, const Vector &rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
    ExactMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    Echelon e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) throw SingularMatrix("solve: inconsistent system");
    Vector x(m.cols());
    for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rref(static_cast<int>(r), m.cols());
    return x;
}

ExactMatrix inverse(const ExactMatrix &m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    int n = m.rows();
    if (n == 0) return ExactMatrix(0, 0);
    ExactMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = row_reduce(aug);
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
    ExactMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
    return inv;
}

int float_rank(const ExactMatrix &m, double tol) {
    if (m.empty()) return 0;
    Eigen::MatrixXcd f(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) f(i, j) = m(i, j).to_complex();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(f);
    const auto &s = svd.singularValues();
    double top = s.size() ? s(0) : 0.0;
    int r = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > tol * std::max(1.0, top)) ++r;
    return r;
}

}  // namespace genus::exact
