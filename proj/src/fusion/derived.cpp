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

#include "genus/fusion/derived.hpp"

#include "genus/diagram/engine.hpp"

namespace genus::fusion {

namespace {

std::shared_ptr<const Category> borrow(const Category &cat) {
    return std::shared_ptr<const Category>(&cat, [](const Category *) {});
}

exact::ExactMatrix want_scalar(int n, const Cyclotomic &c) {
    exact::ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

}  // namespace

QuantumDims quantum_dims(const Category &cat) {
    diagram::Engine eng(borrow(cat));
    QuantumDims q;
    for (int a = 0; a < cat.rank(); ++a) {
        Cyclotomic d = eng.loop(a);
        q.omega.total += d * d;
        q.omega.weights.push_back(std::move(d));
    }
    if (cat.spec().braided())
        for (int a = 0; a < cat.rank(); ++a) q.twists.push_back(eng.twist_scalar(a));
    return q;
}

Report check_spherical_ribbon(const Category &cat) {
    Report rep{"spherical/ribbon", {}, 0};
    diagram::Engine eng(borrow(cat));
    auto nm = [&](int a) { return cat.name(a); };
    for (int a = 0; a < cat.rank(); ++a) {
        int ad = cat.dual(a);
        Cyclotomic right = eng.loop(a);
        Cyclotomic left = eng.scalar(eng.compose(eng.ev(a), eng.coev_r(a)));
        ++rep.instances;
        if (right != left)
            rep.violations.push_back("left trace " + left.to_string() + " != right trace " + right.to_string() +
                                     " on " + nm(a));
        if (right != eng.loop(ad))
            rep.violations.push_back("dim(" + nm(a) + ") = " + right.to_string() + " but dim(" + nm(ad) +
                                     ") = " + eng.loop(ad).to_string());
    }
    if (!cat.spec().braided()) return rep;
    std::vector<Cyclotomic> th;
    for (int a = 0; a < cat.rank(); ++a) th.push_back(eng.twist_scalar(a));
    for (int a = 0; a < cat.rank(); ++a) {
        ++rep.instances;
        if (th[a] != th[cat.dual(a)])
            rep.violations.push_back("theta(" + nm(a) + ") != theta(" + nm(cat.dual(a)) + ")");
    }
    for (int a = 0; a < cat.rank(); ++a)
        for (int b = 0; b < cat.rank(); ++b)
            for (int c : cat.channels(a, b)) {
                ++rep.instances;
                exact::ExactMatrix lhs = cat.R(a, b, c) * cat.R(b, a, c);
                Cyclotomic want = th[c] / (th[a] * th[b]);
                if (lhs != want_scalar(lhs.rows(), want))
                    rep.violations.push_back("balancing fails on " + nm(a) + " (x) " + nm(b) + " -> " + nm(c));
            }
    return rep;
}

SMatrix s_matrix_and_transparency(const Category &cat) {
    if (!cat.spec().braided()) throw PremodularRequired("S-matrix needs a braiding");
    diagram::Engine eng(borrow(cat));
    int r = cat.rank();
    SMatrix out;
    out.S = exact::ExactMatrix(r, r);
    std::vector<Cyclotomic> d(r);
    for (int a = 0; a < r; ++a) d[a] = eng.loop(a);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            out.S(i, j) = eng.trace(eng.compose(eng.braid(j, i), eng.braid(i, j)));
    for (int j = 0; j < r; ++j) {
        bool t = true;
        for (int i = 0; i < r && t; ++i) t = out.S(i, j) == d[i] * d[j];
        if (t) out.transparent.push_back(j);
    }
    out.modular = exact::rank(out.S) == r;
    return out;
}

}  // namespace genus::fusion
