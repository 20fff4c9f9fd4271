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

// Annular algebra: span of Hom(a i, j a) over simples a, i, j, with the
// product that stacks two annuli and resolves b a into its simple channels.

#include "genus/center/center.hpp"

namespace genus::center {

namespace {

struct Elem {
    int a, i, j, k;  // label around the annulus, bottom, top, basis index
};

}  // namespace

int annular_center_dim(const Engine &e) {
    const int r = e.rank();
    std::vector<Elem> basis;
    std::map<std::tuple<int, int, int>, int> first;
    for (int a = 0; a < r; ++a)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                int d = e.hom_dim({{a, i}}, {{j, a}});
                first[{a, i, j}] = static_cast<int>(basis.size());
                for (int k = 0; k < d; ++k) basis.push_back({a, i, j, k});
            }
    const int D = static_cast<int>(basis.size());
    auto morph = [&](const Elem &x) { return e.basis_element({{x.a, x.i}}, {{x.j, x.a}}, x.k); };
    // x then y, expanded on the basis
    auto product = [&](const Elem &x, const Elem &y) {
        std::vector<Cyclotomic> out(D);
        if (x.j != y.i) return out;
        const int a = x.a, b = y.a;
        Morphism mx = morph(x), my = morph(y);
        Morphism mid = e.compose(e.whisker_right(my, {{a}}), e.whisker_left({{b}}, mx));
        for (int c : e.cat().channels(b, a))
            for (int mu = 0; mu < e.cat().N(b, a, c); ++mu) {
                Morphism z = e.compose(mid, e.whisker_right(e.split(b, a, c, mu), {{x.i}}));
                z = e.compose(e.whisker_left({{y.j}}, e.merge(b, a, c, mu)), z);
                auto v = e.to_vector(z);
                int base = first.at({c, x.i, y.j});
                for (size_t s = 0; s < v.size(); ++s)
                    if (!v[s].is_zero()) out[base + s] += v[s];
            }
        return out;
    };
    // central elements live on the diagonal sectors i = j
    std::vector<int> diag;
    for (int s = 0; s < D; ++s)
        if (basis[s].i == basis[s].j) diag.push_back(s);
    const int U = static_cast<int>(diag.size());
    std::vector<std::vector<Cyclotomic>> rows;
    for (int x = 0; x < D; ++x) {
        // column u: diag[u] * x - x * diag[u]
        std::vector<std::vector<Cyclotomic>> cols;
        for (int u = 0; u < U; ++u) {
            auto p = product(basis[diag[u]], basis[x]);
            auto q = product(basis[x], basis[diag[u]]);
            for (int s = 0; s < D; ++s) p[s] -= q[s];
            cols.push_back(std::move(p));
        }
        for (int s = 0; s < D; ++s) {
            std::vector<Cyclotomic> row(U);
            bool nz = false;
            for (int u = 0; u < U; ++u) {
                row[u] = cols[u][s];
                nz = nz || !row[u].is_zero();
            }
            if (nz) rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return U;
    ExactMatrix m(static_cast<int>(rows.size()), U);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int u = 0; u < U; ++u) m(static_cast<int>(i), u) = rows[i][u];
    return U - exact::rank(m);
}

}  // namespace genus::center
