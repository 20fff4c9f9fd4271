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

#include "genus/fusion/checks.hpp"

#include <functional>
#include <set>

namespace genus::fusion {

namespace {

std::string lbl(const CategorySpec &s, int i) {
    return (i >= 0 && i < s.rank()) ? s.labels[i] : "#" + std::to_string(i);
}

}  // namespace

Report validate_structure(const CategorySpec &s) {
    Report rep{"structure", {}, 0};
    auto bad = [&](const std::string &m) { rep.violations.push_back(m); };
    int r = s.rank();
    if (r == 0) {
        bad("no labels");
        return rep;
    }
    std::set<std::string> seen;
    for (const auto &l : s.labels)
        if (!seen.insert(l).second) bad("duplicate label " + l);
    if (s.unit < 0 || s.unit >= r) {
        bad("unit references unknown label " + lbl(s, s.unit));
        return rep;
    }
    if (static_cast<int>(s.dual.size()) != r) {
        bad("dual table has " + std::to_string(s.dual.size()) + " entries, expected " + std::to_string(r));
        return rep;
    }
    bool dual_ok = true;
    for (int a = 0; a < r; ++a)
        if (s.dual[a] < 0 || s.dual[a] >= r) {
            bad("dual of " + lbl(s, a) + " references unknown label " + lbl(s, s.dual[a]));
            dual_ok = false;
        }
    if (dual_ok)
        for (int a = 0; a < r; ++a)
            if (s.dual[s.dual[a]] != a) bad("dual is not an involution at " + lbl(s, a));
    bool shape_ok = static_cast<int>(s.fusion.size()) == r;
    for (const auto &row : s.fusion) {
        if (static_cast<int>(row.size()) != r) shape_ok = false;
        for (const auto &col : row)
            if (static_cast<int>(col.size()) != r) shape_ok = false;
    }
    if (!shape_ok) {
        bad("fusion table is not rank x rank x rank");
        return rep;
    }
    int u = s.unit;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            ++rep.instances;
            int want = a == b ? 1 : 0;
            if (s.fusion[u][a][b] != want) bad("N_{1," + lbl(s, a) + "}^" + lbl(s, b) + " != delta");
            if (s.fusion[a][u][b] != want) bad("N_{" + lbl(s, a) + ",1}^" + lbl(s, b) + " != delta");
            if (dual_ok && s.fusion[a][b][u] != (b == s.dual[a] ? 1 : 0))
                bad("N_{" + lbl(s, a) + "," + lbl(s, b) + "}^1 disagrees with the dual table");
            for (int c = 0; c < r; ++c)
                if (s.fusion[a][b][c] < 0) bad("negative fusion multiplicity");
        }
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    long lhs = 0, rhs = 0;
                    for (int e = 0; e < r; ++e) {
                        lhs += static_cast<long>(s.fusion[a][b][e]) * s.fusion[e][c][d];
                        rhs += static_cast<long>(s.fusion[b][c][e]) * s.fusion[a][e][d];
                    }
                    if (lhs != rhs)
                        bad("fusion rules not associative at (" + lbl(s, a) + "," + lbl(s, b) + "," + lbl(s, c) +
                            ";" + lbl(s, d) + ")");
                }
    for (const auto &[k, v] : s.F) {
        for (int i : {k.a, k.b, k.c, k.d, k.e, k.f})
            if (i < 0 || i >= r) bad("F entry references unknown label " + lbl(s, i));
    }
    if (s.R)
        for (const auto &[k, v] : *s.R)
            for (int i : {k.a, k.b, k.c})
                if (i < 0 || i >= r) bad("R entry references unknown label " + lbl(s, i));
    if (static_cast<int>(s.pivotal.size()) != r)
        bad("pivotal table has " + std::to_string(s.pivotal.size()) + " entries, expected " + std::to_string(r));
    else {
        if (!s.pivotal[u].is_one()) bad("pivotal(1) != 1");
        for (int a = 0; a < r; ++a)
            if (s.pivotal[a].is_zero()) bad("pivotal(" + lbl(s, a) + ") = 0");
    }
    return rep;
}

Report check_pentagon(const Category &cat) {
    Report rep{"pentagon", {}, 0};
    int r = cat.rank();
    int u = cat.unit();
    const auto &s = cat.spec();
    auto n = [&](int i) { return lbl(s, i); };
    // entry lookup through blocks
    auto Fv = [&](int a, int b, int c, int d, int e, int al, int be, int f, int mu, int nu) -> Cyclotomic {
        const FBlock &blk = cat.F(a, b, c, d);
        int i = blk.row_index(e, al, be), j = blk.col_index(f, mu, nu);
        if (i < 0 || j < 0) return Cyclotomic();
        return blk.m(i, j);
    };
    // unit normalization
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    if (a != u && b != u && c != u) continue;
                    const FBlock &blk = cat.F(a, b, c, d);
                    for (size_t i = 0; i < blk.rows.size(); ++i)
                        for (size_t j = 0; j < blk.cols.size(); ++j) {
                            const auto &ro = blk.rows[i];
                            const auto &co = blk.cols[j];
                            bool match;
                            if (a == u)
                                match = ro.m2 == co.m1;
                            else if (b == u)
                                match = ro.m2 == co.m2;
                            else
                                match = ro.m1 == co.m2;
                            ++rep.instances;
                            const Cyclotomic &v = blk.m(static_cast<int>(i), static_cast<int>(j));
                            if (match ? !v.is_one() : !v.is_zero())
                                rep.violations.push_back("unit normalization fails at F^{" + n(a) + "," + n(b) + "," +
                                                         n(c) + "}_" + n(d));
                        }
                }
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d)
                    for (int e = 0; e < r; ++e) {
                        // start: ((ab)_f c)_g d)_e ; end: a(b(cd)_l)_k)_e
                        for (int f : cat.channels(a, b))
                            for (int g : cat.channels(f, c)) {
                                if (cat.N(g, d, e) == 0) continue;
                                for (int l : cat.channels(c, d))
                                    for (int k : cat.channels(b, l)) {
                                        if (cat.N(a, k, e) == 0) continue;
                                        for (int al = 0; al < cat.N(a, b, f); ++al)
                                            for (int be = 0; be < cat.N(f, c, g); ++be)
                                                for (int ga = 0; ga < cat.N(g, d, e); ++ga)
                                                    for (int mu = 0; mu < cat.N(c, d, l); ++mu)
                                                        for (int rho = 0; rho < cat.N(b, l, k); ++rho)
                                                            for (int tau = 0; tau < cat.N(a, k, e); ++tau) {
                                                                Cyclotomic lhs, rhs;
                                                                for (int nu = 0; nu < cat.N(f, l, e); ++nu)
                                                                    lhs += Fv(f, c, d, e, g, be, ga, l, mu, nu) *
                                                                           Fv(a, b, l, e, f, al, nu, k, rho, tau);
                                                                for (int h : cat.channels(b, c)) {
                                                                    if (cat.N(a, h, g) == 0 || cat.N(h, d, k) == 0)
                                                                        continue;
                                                                    for (int ka = 0; ka < cat.N(b, c, h); ++ka)
                                                                        for (int la = 0; la < cat.N(a, h, g); ++la)
                                                                            for (int de = 0; de < cat.N(h, d, k); ++de)
                                                                                rhs += Fv(a, b, c, g, f, al, be, h, ka,
                                                                                          la) *
                                                                                       Fv(a, h, d, e, g, la, ga, k, de,
                                                                                          tau) *
                                                                                       Fv(b, c, d, k, h, ka, de, l, mu,
                                                                                          rho);
                                                                }
                                                                ++rep.instances;
                                                                if (lhs != rhs)
                                                                    rep.violations.push_back(
                                                                        "pentagon fails at (" + n(a) + "," + n(b) +
                                                                        "," + n(c) + "," + n(d) + "; " + n(e) +
                                                                        ") f=" + n(f) + " g=" + n(g) + " l=" + n(l) +
                                                                        " k=" + n(k) + ": residual " +
                                                                        (lhs - rhs).to_string());
                                                            }
                                    }
                            }
                    }
    return rep;
}

namespace {

// One hexagon family; rmat(x,y,z) is the braiding coefficient matrix used.
void hexagon_family(const Category &cat, const std::function<ExactMatrix(int, int, int)> &rmat, const std::string &tag,
                    Report &rep) {
    int r = cat.rank();
    const auto &s = cat.spec();
    auto n = [&](int i) { return lbl(s, i); };
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    const FBlock &abc = cat.F(a, b, c, d);
                    if (abc.rows.empty()) continue;
                    const FBlock &bac = cat.F(b, a, c, d);
                    const FBlock &bca = cat.F(b, c, a, d);
                    int m = static_cast<int>(abc.rows.size());
                    // D1: rows(abc) -> rows(bac), R^{ab}_e on the first vertex
                    ExactMatrix D1(m, m), D2(m, m), L(m, m);
                    for (int i = 0; i < m; ++i) {
                        const auto &ro = abc.rows[i];
                        ExactMatrix R = rmat(a, b, ro.label);
                        for (int j = 0; j < m; ++j) {
                            const auto &rb = bac.rows[j];
                            if (rb.label == ro.label && rb.m2 == ro.m2) D1(i, j) = R(ro.m1, rb.m1);
                        }
                    }
                    // D2: cols(bac) -> cols(bca), R^{ac}_g on the inner vertex
                    for (int i = 0; i < m; ++i) {
                        const auto &co = bac.cols[i];
                        ExactMatrix R = rmat(a, c, co.label);
                        for (int j = 0; j < m; ++j) {
                            const auto &cb = bca.cols[j];
                            if (cb.label == co.label && cb.m2 == co.m2) D2(i, j) = R(co.m1, cb.m1);
                        }
                    }
                    // L: cols(abc) -> rows(bca), R^{af}_d on the outer vertex
                    for (int i = 0; i < m; ++i) {
                        const auto &co = abc.cols[i];
                        ExactMatrix R = rmat(a, co.label, d);
                        for (int j = 0; j < m; ++j) {
                            const auto &rb = bca.rows[j];
                            if (rb.label == co.label && rb.m1 == co.m1) L(i, j) = R(co.m2, rb.m2);
                        }
                    }
                    ExactMatrix rhs = abc.inv * D1 * bac.m * D2 * bca.inv;
                    ++rep.instances;
                    if (rhs != L)
                        rep.violations.push_back(tag + " hexagon fails at (" + n(a) + "," + n(b) + "," + n(c) + "; " +
                                                 n(d) + ")");
                }
}

}  // namespace

Report check_hexagon(const Category &cat) {
    Report rep{"hexagon", {}, 0};
    if (!cat.braided()) throw PremodularRequired("hexagon check needs braiding data");
    int r = cat.rank();
    int u = cat.unit();
    for (int a = 0; a < r; ++a) {
        ++rep.instances;
        if (!cat.R(u, a, a).is_identity() || !cat.R(a, u, a).is_identity())
            rep.violations.push_back("braiding with the unit is not trivial at " + cat.name(a));
        for (int b = 0; b < r; ++b)
            for (int c : cat.channels(a, b))
                if (cat.N(b, a, c) != cat.N(a, b, c))
                    rep.violations.push_back("fusion is not commutative at " + cat.name(a) + "," + cat.name(b));
    }
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c : cat.channels(a, b)) {
                auto rm = cat.R(a, b, c);
                if (exact::rank(rm) != rm.rows())
                    rep.violations.push_back("singular R^{" + cat.name(a) + "," + cat.name(b) + "}_" + cat.name(c));
            }
    if (!rep.ok()) return rep;
    hexagon_family(cat, [&](int x, int y, int z) { return cat.R(x, y, z); }, "braiding", rep);
    hexagon_family(cat, [&](int x, int y, int z) { return cat.Rinv(y, x, z); }, "reverse-braiding", rep);
    return rep;
}

}  // namespace genus::fusion
