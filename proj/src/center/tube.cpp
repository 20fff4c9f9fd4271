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

#include "genus/center/center.hpp"

#include <numeric>

#include "genus/error.hpp"

namespace genus::center {

using exact::Vector;

TubeAlgebra::TubeAlgebra(const Center &c) : r_(c.engine().rank()) {
    const Engine &e = c.engine();
    const auto &spec = e.cat().spec();
    for (const auto &[k, v] : spec.F) field_ = std::lcm(field_, v.order());
    if (spec.R)
        for (const auto &[k, v] : *spec.R) field_ = std::lcm(field_, v.order());
    for (const auto &v : spec.pivotal) field_ = std::lcm(field_, v.order());
    std::vector<SigmaPair> ind;
    for (int a = 0; a < r_; ++a) ind.push_back(c.induce(Object{Word{a}}));
    size_.assign(r_, std::vector<int>(r_, 0));
    offset_.assign(r_, std::vector<int>(r_, 0));
    int off = 0;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) {
            size_[i][j] = e.basis_size(ind[j].carrier, i);
            offset_[i][j] = off;
            off += size_[i][j];
        }
    lift_.assign(r_, std::vector<std::vector<Morphism>>(r_));
    for (int j = 0; j < r_; ++j)
        for (int k = 0; k < r_; ++k) {
            const Object xj{Word{j}};
            for (int t = 0; t < size_[j][k]; ++t) {
                // Hom(j, k_sigma) lives in the single block at charge j
                Morphism y = e.zero(xj, ind[k].carrier);
                y.blocks[j](t, 0) = 1;
                lift_[j][k].push_back(c.adjoint_F(xj, ind[k], ind[j], y));
            }
        }
}

int TubeAlgebra::dimension() const {
    int d = 0;
    for (const auto &row : size_)
        for (int s : row) d += s;
    return d;
}

Vector TubeAlgebra::multiply(int i, int j, int k, const Vector &x, const Vector &y) const {
    Vector out(size_[i][k]);
    for (int t = 0; t < size_[j][k]; ++t) {
        if (y[t].is_zero()) continue;
        Vector v = action(i, j, k, t).apply(x);
        for (int s = 0; s < size_[i][k]; ++s)
            if (!v[s].is_zero()) out[s] += y[t] * v[s];
    }
    return out;
}

Vector TubeAlgebra::multiply(const Vector &x, const Vector &y) const {
    Vector out(dimension());
    auto part = [&](const Vector &v, int i, int j) {
        return Vector(v.begin() + offset_[i][j], v.begin() + offset_[i][j] + size_[i][j]);
    };
    auto nz = [](const Vector &v) {
        for (const auto &c : v)
            if (!c.is_zero()) return true;
        return false;
    };
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) {
            Vector xi = part(x, i, j);
            if (!nz(xi)) continue;
            for (int k = 0; k < r_; ++k) {
                Vector yk = part(y, j, k);
                if (!nz(yk)) continue;
                Vector p = multiply(i, j, k, xi, yk);
                for (int s = 0; s < size_[i][k]; ++s) out[offset_[i][k] + s] += p[s];
            }
        }
    return out;
}

Vector TubeAlgebra::unit() const {
    Vector u(dimension());
    // the all-unit summand comes first, so its tree is index 0 at charge i
    for (int i = 0; i < r_; ++i) u[offset_[i][i]] = 1;
    return u;
}

fusion::Report check_tube_algebra(const TubeAlgebra &a) {
    fusion::Report rep{"tube algebra", {}, 0};
    const int r = a.rank();
    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
            for (int l = 0; l < r; ++l)
                for (int t2 = 0; t2 < a.block(j, k); ++t2)
                    for (int t3 = 0; t3 < a.block(k, l); ++t3) {
                        // y * z expanded in (j, l), then F(y * z) against F(z) F(y)
                        Vector w = a.action(j, k, l, t3).column(t2);
                        for (int i = 0; i < r; ++i) {
                            if (a.block(i, j) == 0) continue;
                            ExactMatrix lhs = a.action(i, k, l, t3) * a.action(i, j, k, t2);
                            ExactMatrix rhs(lhs.rows(), lhs.cols());
                            for (int s = 0; s < a.block(j, l); ++s)
                                if (!w[s].is_zero()) rhs += w[s] * a.action(i, j, l, s);
                            ++rep.instances;
                            if (!(lhs == rhs))
                                rep.violations.push_back("associativity (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                                         std::to_string(k) + "," + std::to_string(l) + ")");
                        }
                    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            // e_i * x = x for every x in (i, j)
            for (int t = 0; t < a.block(i, j); ++t) {
                ++rep.instances;
                Vector v = a.action(i, i, j, t).column(0);
                for (int s = 0; s < a.block(i, j); ++s)
                    if (v[s] != (s == t ? Cyclotomic(1) : Cyclotomic(0))) {
                        rep.violations.push_back("left unit on (" + std::to_string(i) + "," + std::to_string(j) + ")");
                        break;
                    }
            }
            // x * e_j = x: F(e_j) acts as the identity
            ++rep.instances;
            if (a.block(i, j) > 0 && !a.action(i, j, j, 0).is_identity())
                rep.violations.push_back("right unit on (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return rep;
}

int regular_rep_rank(const TubeAlgebra &a) {
    // span of [x, y] over basis pairs, through left multiplication matrices
    const int d = a.dimension();
    std::vector<Vector> basis;
    for (int k = 0; k < d; ++k) {
        Vector v(d);
        v[k] = 1;
        basis.push_back(v);
    }
    std::vector<Vector> rows;
    for (int x = 0; x < d; ++x)
        for (int y = x + 1; y < d; ++y) {
            Vector p = a.multiply(basis[x], basis[y]), q = a.multiply(basis[y], basis[x]);
            bool nz = false;
            for (int s = 0; s < d; ++s) {
                p[s] -= q[s];
                nz = nz || !p[s].is_zero();
            }
            if (nz) rows.push_back(p);
        }
    if (rows.empty()) return d;
    ExactMatrix m(static_cast<int>(rows.size()), d);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int s = 0; s < d; ++s) m(static_cast<int>(i), s) = rows[i][s];
    return d - exact::rank(m);
}

}  // namespace genus::center
