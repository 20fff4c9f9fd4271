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

#include "genus/error.hpp"

namespace genus::center {

namespace {

Object single(int a) { return Object{Word{a}}; }

Morphism random_morphism(const Engine &e, const Object &s, const Object &t, std::mt19937_64 &rng, int bound = 2) {
    Morphism m = e.zero(s, t);
    std::uniform_int_distribution<int> d(-bound, bound);
    for (auto &b : m.blocks)
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) b(i, j) = d(rng);
    return m;
}

}  // namespace

const Morphism &Center::right_side(const SigmaPair &p, int k, int a) const {
    auto key = std::make_tuple(0, k, a);
    auto it = p.cache.find(key);
    if (it != p.cache.end()) return it->second;
    const Engine &e = *eng_;
    Morphism m = e.whisker_left(p.carrier, e.coev(a));
    m = e.compose(e.whisker_right(e.inverse(p.braidings.at(k).blocks.at(a)), single(e.dual(a))), m);
    return p.cache.emplace(key, std::move(m)).first->second;
}

const Morphism &Center::left_side(const SigmaPair &p, int k, int a) const {
    auto key = std::make_tuple(1, k, a);
    auto it = p.cache.find(key);
    if (it != p.cache.end()) return it->second;
    const Engine &e = *eng_;
    Morphism m = e.whisker_right(p.braidings.at(k).blocks.at(a), single(e.dual(a)));
    m = e.compose(e.whisker_left(p.carrier, e.ev_r(a)), m);
    return p.cache.emplace(key, std::move(m)).first->second;
}

Morphism Center::project_orbit(int k, const SigmaPair &px, const SigmaPair &py, const Morphism &f) const {
    const Engine &e = *eng_;
    if (f.src != px.carrier || f.tgt != py.carrier) throw DimensionMismatch("averaging: morphism does not match the carriers");
    Morphism out = e.zero(f.src, f.tgt);
    if (f.is_zero()) return out;
    const Cyclotomic inv = dim_omega_.inverse();
    for (int a = 0; a < e.rank(); ++a) {
        Morphism mid = e.whisker_right(e.whisker_left(single(a), f), single(e.dual(a)));
        Morphism t = e.compose(left_side(py, k, a), e.compose(mid, right_side(px, k, a)));
        out += (dims_[a] * inv) * t;
    }
    return out;
}

Morphism Center::project(const SigmaPair &px, const SigmaPair &py, const Morphism &f, std::vector<int> order) const {
    if (order.empty())
        for (int k = 0; k < n(); ++k) order.push_back(k);
    Morphism m = f;
    for (auto it = order.rbegin(); it != order.rend(); ++it) m = project_orbit(*it, px, py, m);
    return m;
}

bool Center::is_sigma_morphism(const SigmaPair &px, const SigmaPair &py, const Morphism &f) const {
    const Engine &e = *eng_;
    for (int k = 0; k < n(); ++k)
        for (int z = 0; z < e.rank(); ++z) {
            Morphism l = e.compose(py.braidings[k].blocks[z], e.whisker_left(single(z), f));
            Morphism r = e.compose(e.whisker_right(f, single(z)), px.braidings[k].blocks[z]);
            if (l != r) return false;
        }
    return true;
}

Morphism Center::adjoint_F(const Object &x, const SigmaPair &py, const SigmaPair &ix, const Morphism &phi) const {
    Cyclotomic s = 1;
    for (int k = 0; k < n(); ++k) s *= dim_omega_;
    return s * project(ix, py, eng_->compose(phi, unit_projection(x)));
}

Morphism Center::adjoint_G(const Object &x, const Morphism &psi) const {
    return eng_->compose(psi, unit_inclusion(x));
}

int hom_Z_dim(const Center &c, const SigmaPair &px, const SigmaPair &py) {
    const Engine &e = c.engine();
    int d = e.hom_dim(px.carrier, py.carrier);
    if (d == 0) return 0;
    ExactMatrix m(d, d);
    for (int k = 0; k < d; ++k) {
        auto v = e.to_vector(c.project(px, py, e.basis_element(px.carrier, py.carrier, k)));
        for (int i = 0; i < d; ++i) m(i, k) = v[i];
    }
    return exact::rank(m);
}

AdjunctionReport check_adjunction(const Center &c) {
    const Engine &e = c.engine();
    AdjunctionReport rep{{"adjunction G o F", {}, 0}, {"adjunction F o G", {}, 0}};
    std::mt19937_64 rng(1);
    std::vector<SigmaPair> ind;
    for (int a = 0; a < e.rank(); ++a) ind.push_back(c.induce(single(a)));
    for (int i = 0; i < e.rank(); ++i)
        for (int j = 0; j < e.rank(); ++j) {
            const Object xi = single(i);
            const Object &yj = ind[j].carrier;
            std::string tag = e.cat().name(i) + " -> " + e.cat().name(j);
            int d = e.hom_dim(xi, yj);
            for (int k = 0; k < d; ++k) {
                Morphism phi = e.basis_element(xi, yj, k);
                Morphism F = c.adjoint_F(xi, ind[j], ind[i], phi);
                ++rep.gf.instances;
                if (c.adjoint_G(xi, F) != phi) rep.gf.violations.push_back(tag + " basis " + std::to_string(k));
            }
            // Random averaged morphisms until their span stops growing; the
            // subspace is far smaller than Hom(I(i), I(j)).
            std::vector<exact::Vector> rows;
            int rank = 0, stale = 0;
            while (stale < 3) {
                Morphism psi = c.project(ind[i], ind[j], random_morphism(e, ind[i].carrier, yj, rng, 50));
                rows.push_back(e.to_vector(psi));
                ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
                for (size_t r = 0; r < rows.size(); ++r)
                    for (size_t s = 0; s < rows[r].size(); ++s) m(static_cast<int>(r), static_cast<int>(s)) = rows[r][s];
                int now = rows[0].empty() ? 0 : exact::rank(m);
                if (now == rank) {
                    ++stale;
                    rows.pop_back();
                    continue;
                }
                rank = now;
                stale = 0;
                ++rep.fg.instances;
                Morphism back = c.adjoint_F(xi, ind[j], ind[i], c.adjoint_G(xi, psi));
                if (back != psi) rep.fg.violations.push_back(tag + " averaged sample " + std::to_string(rank));
            }
        }
    return rep;
}

fusion::Report check_projection_functoriality(const Center &c, int samples, std::mt19937_64 &rng) {
    const Engine &e = c.engine();
    fusion::Report rep{"averaging respects composition", {}, 0};
    std::vector<SigmaPair> ind;
    for (int a = 0; a < e.rank(); ++a) ind.push_back(c.induce(single(a)));
    std::uniform_int_distribution<int> pick(0, e.rank() - 1);
    for (int s = 0; s < samples; ++s) {
        int i = pick(rng), j = pick(rng), k = pick(rng);
        Morphism f = random_morphism(e, ind[i].carrier, ind[j].carrier, rng);
        Morphism g = random_morphism(e, ind[j].carrier, ind[k].carrier, rng);
        ++rep.instances;
        Morphism lhs = c.project(ind[i], ind[k], e.compose(g, f));
        Morphism rhs = e.compose(c.project(ind[j], ind[k], g), c.project(ind[i], ind[j], f));
        if (lhs != rhs)
            rep.violations.push_back(e.cat().name(i) + " -> " + e.cat().name(j) + " -> " + e.cat().name(k) + " sample " +
                                     std::to_string(s));
    }
    return rep;
}

fusion::Report check_projection_bimodule(const Center &c, int samples, std::mt19937_64 &rng) {
    const Engine &e = c.engine();
    fusion::Report rep{"averaging is a bimodule map", {}, 0};
    std::vector<SigmaPair> ind;
    for (int a = 0; a < e.rank(); ++a) ind.push_back(c.induce(single(a)));
    std::uniform_int_distribution<int> pick(0, e.rank() - 1);
    for (int s = 0; s < samples; ++s) {
        int h = pick(rng), i = pick(rng), j = pick(rng), k = pick(rng);
        Morphism chi = c.project(ind[h], ind[i], random_morphism(e, ind[h].carrier, ind[i].carrier, rng));
        Morphism f = random_morphism(e, ind[i].carrier, ind[j].carrier, rng);
        Morphism psi = c.project(ind[j], ind[k], random_morphism(e, ind[j].carrier, ind[k].carrier, rng));
        ++rep.instances;
        Morphism lhs = c.project(ind[h], ind[k], e.compose(psi, e.compose(f, chi)));
        Morphism rhs = e.compose(psi, e.compose(c.project(ind[i], ind[j], f), chi));
        if (lhs != rhs) rep.violations.push_back("sample " + std::to_string(s));
    }
    return rep;
}

fusion::Report check_projection_idempotent(const Center &c, int samples, std::mt19937_64 &rng) {
    const Engine &e = c.engine();
    fusion::Report rep{"averaging is an idempotent onto sigma-morphisms", {}, 0};
    std::vector<SigmaPair> ind;
    for (int a = 0; a < e.rank(); ++a) ind.push_back(c.induce(single(a)));
    std::uniform_int_distribution<int> pick(0, e.rank() - 1);
    for (int s = 0; s < samples; ++s) {
        int i = pick(rng), j = pick(rng);
        Morphism p = c.project(ind[i], ind[j], random_morphism(e, ind[i].carrier, ind[j].carrier, rng));
        ++rep.instances;
        if (c.project(ind[i], ind[j], p) != p) rep.violations.push_back("not idempotent, sample " + std::to_string(s));
        if (!c.is_sigma_morphism(ind[i], ind[j], p)) rep.violations.push_back("not a sigma-morphism, sample " + std::to_string(s));
    }
    return rep;
}

fusion::Report check_unity_trace(const Center &c) {
    const Engine &e = c.engine();
    fusion::Report rep{"unity trace", {}, 0};
    for (int a = 0; a < e.rank(); ++a) {
        SigmaPair p = c.induce(single(a));
        Morphism id = e.identity(p.carrier);
        for (int k = 0; k < c.n(); ++k) {
            ++rep.instances;
            if (c.project_orbit(k, p, p, id) != id)
                rep.violations.push_back(e.cat().name(a) + " orbit " + std::to_string(c.orbits()[k].low));
        }
    }
    return rep;
}

fusion::Report check_projection_order(const Center &c, int samples, std::mt19937_64 &rng) {
    const Engine &e = c.engine();
    fusion::Report rep{"orbit order inside the averaging map", {}, 0};
    std::vector<SigmaPair> ind;
    for (int a = 0; a < e.rank(); ++a) ind.push_back(c.induce(single(a)));
    std::vector<int> rev;
    for (int k = c.n() - 1; k >= 0; --k) rev.push_back(k);
    std::uniform_int_distribution<int> pick(0, e.rank() - 1);
    for (int s = 0; s < samples; ++s) {
        int i = pick(rng), j = pick(rng);
        Morphism f = random_morphism(e, ind[i].carrier, ind[j].carrier, rng);
        ++rep.instances;
        if (c.project(ind[i], ind[j], f) != c.project(ind[i], ind[j], f, rev))
            rep.violations.push_back("sample " + std::to_string(s));
    }
    return rep;
}

}  // namespace genus::center
