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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <random>

#include "genus/center/center.hpp"
#include "genus/error.hpp"

namespace genus::center {

using exact::Vector;
using cplx = std::complex<double>;

namespace {

// Central elements are stored by their diagonal blocks (i, i).
struct CenterBasis {
    std::vector<int> diag_off;  // offset of block (i, i) in the unknown vector
    int unknowns = 0;
    std::vector<Vector> basis;  // over the unknowns
    std::vector<int> free;      // free column of each basis vector
};

CenterBasis compute_center(const TubeAlgebra &a) {
    const int r = a.rank();
    CenterBasis cb;
    for (int i = 0; i < r; ++i) {
        cb.diag_off.push_back(cb.unknowns);
        cb.unknowns += a.block(i, i);
    }
    std::vector<Vector> rows;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int t = 0; t < a.block(i, j); ++t) {
                // z_i * x - x * z_j = 0 with x the basis element t of (i, j)
                const ExactMatrix &Fx = a.action(i, i, j, t);
                for (int s = 0; s < a.block(i, j); ++s) {
                    Vector row(cb.unknowns);
                    bool nz = false;
                    for (int u = 0; u < a.block(i, i); ++u)
                        if (!Fx(s, u).is_zero()) {
                            row[cb.diag_off[i] + u] += Fx(s, u);
                            nz = true;
                        }
                    for (int u = 0; u < a.block(j, j); ++u) {
                        const Cyclotomic &v = a.action(i, j, j, u)(s, t);
                        if (!v.is_zero()) {
                            row[cb.diag_off[j] + u] -= v;
                            nz = true;
                        }
                    }
                    if (nz) rows.push_back(std::move(row));
                }
            }
    ExactMatrix m(static_cast<int>(rows.size()), cb.unknowns);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int s = 0; s < cb.unknowns; ++s) m(static_cast<int>(i), s) = rows[i][s];
    exact::Echelon e = exact::row_reduce(m);
    std::vector<bool> piv(cb.unknowns, false);
    for (int p : e.pivots) piv[p] = true;
    for (int f = 0; f < cb.unknowns; ++f)
        if (!piv[f]) cb.free.push_back(f);
    cb.basis = exact::nullspace(m);
    return cb;
}

// Product of two central elements, block by block.
Vector center_product(const TubeAlgebra &a, const CenterBasis &cb, const Vector &z, const Vector &w) {
    Vector out(cb.unknowns);
    for (int i = 0; i < a.rank(); ++i) {
        const int n = a.block(i, i), o = cb.diag_off[i];
        Vector zi(z.begin() + o, z.begin() + o + n), wi(w.begin() + o, w.begin() + o + n);
        Vector p = a.multiply(i, i, i, zi, wi);
        for (int s = 0; s < n; ++s) out[o + s] = p[s];
    }
    return out;
}

Vector coords(const CenterBasis &cb, const Vector &z) {
    Vector c;
    for (int f : cb.free) c.push_back(z[f]);
    return c;
}

Vector combine(const CenterBasis &cb, const Vector &c) {
    Vector z(cb.unknowns);
    for (size_t m = 0; m < c.size(); ++m)
        if (!c[m].is_zero())
            for (int s = 0; s < cb.unknowns; ++s)
                if (!cb.basis[m][s].is_zero()) z[s] += c[m] * cb.basis[m][s];
    return z;
}

// Closest fraction with denominator at most maxden, if within tol.
std::optional<mpq_class> recognize(double x, long maxden, double tol) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > maxden) break;
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        if (std::abs(x - static_cast<double>(p1) / q1) < tol) {
            mpq_class r(p1, q1);
            r.canonicalize();
            return r;
        }
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}


// Primitive central idempotents with coordinates in Q(zeta_L), or an empty
// list when some of them are not defined over that field.
std::vector<Vector> try_split(const TubeAlgebra &a, const CenterBasis &cb, const std::vector<std::vector<Vector>> &C,
                              const Vector &ucoords, int L) {
    const int R = static_cast<int>(cb.basis.size());
    std::vector<long> units;
    for (long t = 1; t < L; ++t)
        if (std::gcd(t, static_cast<long>(L)) == 1) units.push_back(t);
    const int phi = static_cast<int>(units.size());

    // multiplication by a generic central element, embedded through zeta -> zeta^t
    std::mt19937_64 rng(20260518);
    std::uniform_int_distribution<int> coef(1, 7);
    std::vector<std::vector<std::vector<cplx>>> idem;  // [t][s] float coordinates
    for (int attempt = 0; attempt < 8; ++attempt) {
        Vector g(R);
        for (auto &x : g) x = coef(rng);
        idem.assign(phi, {});
        bool ok = true;
        for (int ti = 0; ti < phi && ok; ++ti) {
            Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(R, R);
            for (int p = 0; p < R; ++p)
                for (int q = 0; q < R; ++q)
                    for (int s = 0; s < R; ++s)
                        if (!C[p][q][s].is_zero()) M(s, q) += g[p].to_complex() * C[p][q][s].to_complex(units[ti]);
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M);
            const auto &ev = es.eigenvalues();
            for (int s = 0; s < R && ok; ++s)
                for (int u = s + 1; u < R; ++u)
                    if (std::abs(ev(s) - ev(u)) < 1e-6) ok = false;
            if (!ok) break;
            Eigen::MatrixXcd P = es.eigenvectors();
            Eigen::MatrixXcd Pinv = P.inverse();
            Eigen::VectorXcd u(R);
            for (int s = 0; s < R; ++s) u(s) = ucoords[s].to_complex(units[ti]);
            Eigen::VectorXcd w = Pinv * u;
            for (int s = 0; s < R; ++s) {
                Eigen::VectorXcd e = P.col(s) * w(s);
                std::vector<cplx> v(R);
                for (int m = 0; m < R; ++m) v[m] = e(m);
                idem[ti].push_back(v);
            }
        }
        if (ok) break;
        idem.clear();
    }
    if (idem.empty()) throw InternalInconsistency("no generic central element found");

    // The idempotent s in the standard embedding has one partner in every other
    // embedding. Try all assignments; complex conjugation fixes the partner of
    // L - t once t is chosen.
    std::vector<int> reps;
    for (int ti = 0; ti < phi; ++ti)
        if (units[ti] == 1 || 2 * units[ti] < L) reps.push_back(ti);
    auto conj_index = [&](int ti) {
        long t = L - units[ti];
        return static_cast<int>(std::find(units.begin(), units.end(), t) - units.begin());
    };
    Eigen::MatrixXcd V(phi, phi);
    for (int ti = 0; ti < phi; ++ti)
        for (int k = 0; k < phi; ++k) V(ti, k) = std::polar(1.0, 2 * M_PI * static_cast<double>(units[ti] * k) / L);
    Eigen::MatrixXcd Vinv = V.inverse();

    std::vector<Vector> found;
    for (int s = 0; s < R; ++s) {
        std::vector<int> choice(reps.size(), 0);
        choice[0] = s;
        bool hit = false;
        while (true) {
            Vector cand(R);
            bool good = true;
            for (int m = 0; m < R && good; ++m) {
                Eigen::VectorXcd vals(phi);
                for (size_t ri = 0; ri < reps.size(); ++ri) {
                    cplx v = idem[reps[ri]][choice[ri]][m];
                    vals(conj_index(reps[ri])) = std::conj(v);
                    vals(reps[ri]) = v;
                }
                Eigen::VectorXcd q = Vinv * vals;
                std::vector<exact::RawTerm> terms;
                for (int k = 0; k < phi && good; ++k) {
                    if (std::abs(q(k).imag()) > 1e-6) good = false;
                    auto rq = recognize(q(k).real(), 4096, 1e-9);
                    if (!rq) good = false;
                    else if (*rq != 0) terms.push_back({k, rq->get_num(), rq->get_den()});
                }
                if (good) cand[m] = Cyclotomic::from_terms(L, terms);
            }
            if (good) {
                Vector z = combine(cb, cand);
                bool nz = false;
                for (const auto &x : z) nz = nz || !x.is_zero();
                if (nz && center_product(a, cb, z, z) == z) {
                    found.push_back(z);
                    hit = true;
                    break;
                }
            }
            size_t ri = 1;
            while (ri < choice.size() && ++choice[ri] == R) choice[ri++] = 0;
            if (ri >= choice.size()) break;
        }
        if (!hit) return {};
    }
    return found;
}

}  // namespace

RankResult center_rank(const TubeAlgebra &a) {
    RankResult res;
    res.total_dim = a.dimension();
    CenterBasis cb = compute_center(a);
    const int R = static_cast<int>(cb.basis.size());
    res.rank = R;

    Vector unit(cb.unknowns);
    for (int i = 0; i < a.rank(); ++i)
        if (a.block(i, i) > 0) unit[cb.diag_off[i]] = 1;

    // structure constants of the center in the basis cb.basis
    std::vector<std::vector<Vector>> C(R, std::vector<Vector>(R));
    int L = a.field_order();
    for (int p = 0; p < R; ++p)
        for (int q = p; q < R; ++q) {
            C[p][q] = coords(cb, center_product(a, cb, cb.basis[p], cb.basis[q]));
            C[q][p] = C[p][q];
            for (const auto &x : C[p][q]) L = std::lcm(L, x.order());
        }
    Vector ucoords = coords(cb, unit);
    if (L % 2 == 1) L *= 2;  // Q(zeta_L) = Q(zeta_2L) for odd L

    // The data field first, then small cyclotomic extensions of it.
    std::vector<Vector> found;
    for (int m : {1, 2, 3, 4, 5, 6, 8, 9}) {
        found = try_split(a, cb, C, ucoords, L * m);
        if (!found.empty()) {
            res.field_order = L * m;
            break;
        }
        if (R == 0) break;
    }
    auto fail = [&](const std::string &why) {
        res.split = false;
        res.diagnostic = why;
        throw NonSplit("center of rank " + std::to_string(R) + " does not split over the coefficient field: " + why);
    };
    if (static_cast<int>(found.size()) != R) fail("recovered " + std::to_string(found.size()) + " of " + std::to_string(R) + " idempotents");
    // orthogonality and completeness
    Vector sum(cb.unknowns);
    for (int s = 0; s < R; ++s) {
        for (int u = s + 1; u < R; ++u) {
            Vector p = center_product(a, cb, found[s], found[u]);
            for (const auto &x : p)
                if (!x.is_zero()) fail("idempotents are not orthogonal");
        }
        for (int k = 0; k < cb.unknowns; ++k) sum[k] += found[s][k];
    }
    if (sum != unit) fail("idempotents do not sum to the unit");

    // block size from the trace of left multiplication
    int total = 0;
    for (int s = 0; s < R; ++s) {
        Cyclotomic tr;
        for (int i = 0; i < a.rank(); ++i) {
            const int o = cb.diag_off[i], n = a.block(i, i);
            Vector ei(found[s].begin() + o, found[s].begin() + o + n);
            for (int j = 0; j < a.rank(); ++j)
                for (int t = 0; t < a.block(i, j); ++t) {
                    Vector v = a.action(i, i, j, t).apply(ei);
                    tr += v[t];
                }
        }
        if (!tr.is_rational() || tr.to_rational().get_den() != 1) fail("non-integral block trace " + tr.to_string());
        long sq = tr.to_rational().get_num().get_si();
        long d = std::lround(std::sqrt(static_cast<double>(sq)));
        if (d * d != sq) fail("block trace " + std::to_string(sq) + " is not a square");
        res.block_dims.push_back(static_cast<int>(d));
        total += static_cast<int>(sq);
    }
    if (total != res.total_dim) fail("blocks cover " + std::to_string(total) + " of " + std::to_string(res.total_dim));
    std::sort(res.block_dims.begin(), res.block_dims.end());
    return res;
}

}  // namespace genus::center
