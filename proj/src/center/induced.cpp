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

Center::Center(EnginePtr eng, Gluing sigma, Routing routing)
    : eng_(std::move(eng)), sigma_(std::move(sigma)), routing_(routing), orbits_(gluing::orbits(sigma_)) {
    const int r = eng_->rank();
    for (int a = 0; a < r; ++a) {
        dims_.push_back(eng_->loop(a));
        dim_omega_ += dims_.back() * dims_.back();
    }
    // lexicographic over the orbits, unit label first
    std::vector<int> a(n(), 0);
    std::vector<int> labels;
    labels.push_back(eng_->unit());
    for (int x = 0; x < r; ++x)
        if (x != eng_->unit()) labels.push_back(x);
    std::vector<int> digit(n(), 0);
    while (true) {
        for (int k = 0; k < n(); ++k) a[k] = labels[digit[k]];
        assign_.push_back(a);
        int k = n() - 1;
        while (k >= 0 && ++digit[k] == r) digit[k--] = 0;
        if (k < 0) break;
    }
}

int Center::assignment_index(const std::vector<int> &a) const {
    for (size_t k = 0; k < assign_.size(); ++k)
        if (assign_[k] == a) return static_cast<int>(k);
    throw InvalidArgument("unknown orbit assignment");
}

Word Center::leg_word(const std::vector<int> &a, const Word &w) const {
    const int n2 = 2 * n();
    std::vector<int> leg(n2);
    for (int k = 0; k < n(); ++k) {
        leg[orbits_[k].low - 1] = a[k];
        leg[orbits_[k].high - 1] = eng_->dual(a[k]);
    }
    Word out(leg.begin(), leg.begin() + n());
    out.insert(out.end(), w.begin(), w.end());
    out.insert(out.end(), leg.begin() + n(), leg.end());
    return out;
}

Object Center::induced_carrier(const Object &x) const {
    Object out;
    for (const auto &a : assign_)
        for (const auto &w : x) out.push_back(leg_word(a, w));
    return out;
}

namespace {

// Z moves one step right across the strand to its right, at position pos.
Morphism cross(const Engine &e, const Word &cur, int pos, bool over) {
    Word pre(cur.begin(), cur.begin() + pos), post(cur.begin() + pos + 2, cur.end());
    int z = cur[pos], y = cur[pos + 1];
    return e.place(pre, over ? e.braid(z, y) : e.braid_inv(y, z), post);
}

}  // namespace

Morphism Center::induced_braiding(const Object &x, int k, int z) const {
    const Engine &e = *eng_;
    Object carrier = induced_carrier(x);
    Object src, tgt;
    for (const auto &w : carrier) {
        Word s{z};
        s.insert(s.end(), w.begin(), w.end());
        src.push_back(s);
        Word t = w;
        t.push_back(z);
        tgt.push_back(t);
    }
    Morphism out = e.zero(src, tgt);
    const auto &ob = orbits_[k];
    for (size_t ai = 0; ai < assign_.size(); ++ai)
        for (size_t wi = 0; wi < x.size(); ++wi) {
            const Word &w = x[wi];
            const int wl = static_cast<int>(w.size());
            auto pos_of = [&](int leg) { return leg <= n() ? leg - 1 : leg - 1 + wl; };
            const int p1 = pos_of(ob.low), p2 = pos_of(ob.high);
            const int a = assign_[ai][k];
            const Word base = leg_word(assign_[ai], w);
            const int ks = static_cast<int>(ai * x.size() + wi);
            for (int b : e.cat().channels(z, a)) {
                std::vector<int> na = assign_[ai];
                na[k] = b;
                const int kt = static_cast<int>(assignment_index(na) * x.size() + wi);
                for (int mu = 0; mu < e.cat().N(z, a, b); ++mu) {
                    Word cur{z};
                    cur.insert(cur.end(), base.begin(), base.end());
                    Morphism m = e.identity({cur});
                    for (int q = 0; q < p1; ++q) {
                        m = e.compose(cross(e, cur, q, routing_.before_over), m);
                        std::swap(cur[q], cur[q + 1]);
                    }
                    // Z now at p1, the leg a at p1 + 1
                    {
                        Word pre(cur.begin(), cur.begin() + p1), post(cur.begin() + p1 + 2, cur.end());
                        m = e.compose(e.place(pre, e.merge(z, a, b, mu), post), m);
                        cur.erase(cur.begin() + p1);
                        cur[p1] = b;
                    }
                    // the dual leg at p2 becomes b* Z through the mate of the vertex
                    {
                        const int ad = e.dual(a), bd = e.dual(b);
                        Morphism t = e.place({}, e.coev_r(b), {ad});
                        t = e.compose(e.place({bd}, e.split(z, a, b, mu), {ad}), t);
                        t = e.compose(e.place({bd, z}, e.ev_r(a), {}), t);
                        Word pre(cur.begin(), cur.begin() + p2), post(cur.begin() + p2 + 1, cur.end());
                        m = e.compose(e.place(pre, t, post), m);
                        cur[p2] = bd;
                        cur.insert(cur.begin() + p2 + 1, z);
                    }
                    for (int q = p2 + 1; q + 1 < static_cast<int>(cur.size()); ++q) {
                        m = e.compose(cross(e, cur, q, routing_.after_over), m);
                        std::swap(cur[q], cur[q + 1]);
                    }
                    e.add_into(out, m, ks, kt);
                }
            }
        }
    return out;
}

SigmaPair Center::induce(const Object &x) const {
    SigmaPair p{induced_carrier(x), {}};
    for (int k = 0; k < n(); ++k) {
        HalfBraiding h;
        for (int z = 0; z < eng_->rank(); ++z) h.blocks.push_back(induced_braiding(x, k, z));
        p.braidings.push_back(std::move(h));
    }
    return p;
}

Morphism Center::induced_arrow(const Morphism &f) const {
    const Engine &e = *eng_;
    Object s = induced_carrier(f.src), t = induced_carrier(f.tgt);
    Morphism out = e.zero(s, t);
    for (size_t ai = 0; ai < assign_.size(); ++ai) {
        const auto &a = assign_[ai];
        Word pre = leg_word(a, {});
        Word left(pre.begin(), pre.begin() + n()), right(pre.begin() + n(), pre.end());
        for (size_t i = 0; i < f.src.size(); ++i)
            for (size_t j = 0; j < f.tgt.size(); ++j) {
                Morphism part = e.restrict(f, static_cast<int>(i), static_cast<int>(j));
                if (part.is_zero()) continue;
                e.add_into(out, e.place(left, part, right), static_cast<int>(ai * f.src.size() + i),
                           static_cast<int>(ai * f.tgt.size() + j));
            }
    }
    return out;
}

Morphism Center::unit_inclusion(const Object &x) const {
    const Engine &e = *eng_;
    Morphism out = e.zero(x, induced_carrier(x));
    // all-unit legs: unit strands do not change the tree basis size, so the
    // inclusion is the identity in the tree bases
    for (size_t i = 0; i < x.size(); ++i) {
        Word w = leg_word(assign_[0], x[i]);
        Morphism m = e.zero({x[i]}, {w});
        for (int c = 0; c < e.rank(); ++c) {
            if (m.blocks[c].rows() != m.blocks[c].cols()) throw InternalInconsistency("unit legs change the basis");
            m.blocks[c] = ExactMatrix::identity(m.blocks[c].rows());
        }
        e.add_into(out, m, static_cast<int>(i), static_cast<int>(i));
    }
    return out;
}

Morphism Center::unit_projection(const Object &x) const {
    const Engine &e = *eng_;
    Morphism inc = unit_inclusion(x);
    Morphism out = e.zero(inc.tgt, inc.src);
    for (int c = 0; c < e.rank(); ++c) out.blocks[c] = inc.blocks[c].transpose();
    return out;
}

Object object_of(const FormalObject &x) {
    Object o;
    for (size_t a = 0; a < x.mult.size(); ++a)
        for (int m = 0; m < x.mult[a]; ++m) o.push_back({static_cast<int>(a)});
    return o;
}

FormalObject induce_object(const Center &c, const FormalObject &x) {
    const Engine &e = c.engine();
    if (static_cast<int>(x.mult.size()) != e.rank()) throw InvalidArgument("formal object has the wrong rank");
    Object ind = c.induced_carrier(object_of(x));
    FormalObject out{std::vector<int>(e.rank(), 0)};
    for (int b = 0; b < e.rank(); ++b) out.mult[b] = e.basis_size(ind, b);
    return out;
}

}  // namespace genus::center
