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

#include "genus/diagram/engine.hpp"

namespace genus::diagram {

namespace {

Object tensor_obj(const Object &a, const Object &b) {
    Object out;
    for (const auto &x : a)
        for (const auto &y : b) {
            Word w = x;
            w.insert(w.end(), y.begin(), y.end());
            out.push_back(std::move(w));
        }
    return out;
}

Tree concat(const Tree &a, const Tree &b) {
    Tree t = a;
    t.insert(t.end(), b.begin(), b.end());
    return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Morphism arithmetic

bool Morphism::is_zero() const {
    for (const auto &b : blocks)
        if (!b.is_zero()) return false;
    return true;
}

bool operator==(const Morphism &a, const Morphism &b) {
    return a.src == b.src && a.tgt == b.tgt && a.blocks == b.blocks;
}

Morphism &Morphism::operator+=(const Morphism &b) {
    if (src != b.src || tgt != b.tgt) throw DimensionMismatch("sum of morphisms with different source or target");
    for (size_t c = 0; c < blocks.size(); ++c) blocks[c] += b.blocks[c];
    return *this;
}

Morphism operator+(const Morphism &a, const Morphism &b) {
    Morphism r = a;
    r += b;
    return r;
}

Morphism operator*(const Cyclotomic &s, const Morphism &a) {
    Morphism r = a;
    for (auto &b : r.blocks) b = s * b;
    return r;
}

Morphism operator-(const Morphism &a, const Morphism &b) { return a + Cyclotomic(-1) * b; }

// ---------------------------------------------------------------------------
// bases

Engine::Engine(CategoryPtr cat) : cat_(std::move(cat)) {}

std::vector<Tree> Engine::paths(int p, const Word &w, int d) const {
    // breadth over prefixes
    std::vector<std::pair<Tree, int>> cur{{Tree{}, p}};
    for (int x : w) {
        std::vector<std::pair<Tree, int>> next;
        for (const auto &[t, e] : cur)
            for (int f : cat_->channels(e, x))
                for (int mu = 0; mu < cat_->N(e, x, f); ++mu) {
                    Tree u = t;
                    u.push_back(f);
                    u.push_back(mu);
                    next.emplace_back(std::move(u), f);
                }
        cur = std::move(next);
    }
    std::vector<Tree> out;
    for (auto &[t, e] : cur)
        if (e == d) out.push_back(std::move(t));
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Tree> &Engine::trees(const Word &w, int c) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = trees_.find(w);
    if (it == trees_.end()) {
        std::vector<std::vector<Tree>> all(rank());
        std::vector<std::map<Tree, int>> idx(rank());
        for (int d = 0; d < rank(); ++d) {
            all[d] = paths(unit(), w, d);
            for (size_t i = 0; i < all[d].size(); ++i) idx[d][all[d][i]] = static_cast<int>(i);
        }
        tree_idx_[w] = std::move(idx);
        it = trees_.emplace(w, std::move(all)).first;
    }
    return it->second[c];
}

int Engine::tree_index(const Word &w, int c, const Tree &t) const {
    trees(w, c);
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const auto &m = tree_idx_.at(w)[c];
    auto it = m.find(t);
    if (it == m.end()) throw InternalInconsistency("tree not in basis of " + word_string(w));
    return it->second;
}

int Engine::basis_size(const Object &o, int c) const {
    int n = 0;
    for (const auto &w : o) n += static_cast<int>(trees(w, c).size());
    return n;
}

int Engine::summand_offset(const Object &o, int k, int c) const {
    int n = 0;
    for (int i = 0; i < k; ++i) n += static_cast<int>(trees(o[i], c).size());
    return n;
}

int Engine::hom_dim(const Object &src, const Object &tgt) const {
    int n = 0;
    for (int c = 0; c < rank(); ++c) n += basis_size(src, c) * basis_size(tgt, c);
    return n;
}

std::string Engine::word_string(const Word &w) const {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + cat_->name(w[i]);
    return s + ")";
}

// ---------------------------------------------------------------------------
// structural operations

Morphism Engine::zero(const Object &src, const Object &tgt) const {
    Morphism m{src, tgt, {}};
    for (int c = 0; c < rank(); ++c) m.blocks.emplace_back(basis_size(tgt, c), basis_size(src, c));
    return m;
}

Morphism Engine::identity(const Object &o) const {
    Morphism m{o, o, {}};
    for (int c = 0; c < rank(); ++c) m.blocks.push_back(ExactMatrix::identity(basis_size(o, c)));
    return m;
}

Morphism Engine::compose(const Morphism &g, const Morphism &f) const {
    if (g.src != f.tgt) throw DimensionMismatch("composition: target of first morphism differs from source of second");
    Morphism m{f.src, g.tgt, {}};
    for (int c = 0; c < rank(); ++c) m.blocks.push_back(g.blocks[c] * f.blocks[c]);
    return m;
}

const Engine::KPair &Engine::kmat(int p, const Word &B, int d) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto key = std::make_tuple(p, B, d);
    auto it = kcache_.find(key);
    if (it != kcache_.end()) return *it->second;
    auto kp = std::make_unique<KPair>();
    if (B.empty()) {
        if (p == d) {
            kp->left = {Tree{}};
            kp->prod = {{Tree{}, 0}};
            kp->K = ExactMatrix::identity(1);
            kp->Kinv = ExactMatrix::identity(1);
        }
        return *kcache_.emplace(key, std::move(kp)).first->second;
    }
    Word B0(B.begin(), B.end() - 1);
    int x = B.back();
    kp->left = paths(p, B, d);
    for (int b = 0; b < rank(); ++b)
        for (const auto &t : trees(B, b))
            for (int nu = 0; nu < cat_->N(p, b, d); ++nu) kp->prod.emplace_back(t, nu);
    std::map<Tree, int> lidx;
    for (size_t i = 0; i < kp->left.size(); ++i) lidx[kp->left[i]] = static_cast<int>(i);
    std::map<std::pair<Tree, int>, int> pidx;
    for (size_t i = 0; i < kp->prod.size(); ++i) pidx[kp->prod[i]] = static_cast<int>(i);
    int nl = static_cast<int>(kp->left.size()), np = static_cast<int>(kp->prod.size());
    if (nl != np) throw InternalInconsistency("left and product bases differ in size");
    kp->K = ExactMatrix(nl, np);
    kp->Kinv = ExactMatrix(np, nl);
    for (int e = 0; e < rank(); ++e) {
        int nb = cat_->N(e, x, d);
        if (nb == 0) continue;
        const KPair &sub = kmat(p, B0, e);
        for (size_t i0 = 0; i0 < sub.left.size(); ++i0)
            for (size_t j0 = 0; j0 < sub.prod.size(); ++j0) {
                const Cyclotomic &kv = sub.K(static_cast<int>(i0), static_cast<int>(j0));
                const Cyclotomic &kiv = sub.Kinv(static_cast<int>(j0), static_cast<int>(i0));
                if (kv.is_zero() && kiv.is_zero()) continue;
                const Tree &tB0 = sub.prod[j0].first;
                int alpha = sub.prod[j0].second;
                int b0 = tB0.empty() ? unit() : tB0[tB0.size() - 2];
                const fusion::FBlock &F = cat_->F(p, b0, x, d);
                for (int beta = 0; beta < nb; ++beta) {
                    int row = F.row_index(e, alpha, beta);
                    Tree L = sub.left[i0];
                    L.push_back(d);
                    L.push_back(beta);
                    auto lit = lidx.find(L);
                    if (lit == lidx.end()) throw InternalInconsistency("kmat: left path missing");
                    int il = lit->second;
                    for (size_t col = 0; col < F.cols.size(); ++col) {
                        const auto &ch = F.cols[col];
                        Tree tB = tB0;
                        tB.push_back(ch.label);
                        tB.push_back(ch.m1);
                        auto pit = pidx.find({tB, ch.m2});
                        if (pit == pidx.end()) throw InternalInconsistency("kmat: product tree missing");
                        int jp = pit->second;
                        const Cyclotomic &fv = F.m(row, static_cast<int>(col));
                        const Cyclotomic &fi = F.inv(static_cast<int>(col), row);
                        if (!kiv.is_zero() && !fv.is_zero()) kp->Kinv(jp, il) += kiv * fv;
                        if (!kv.is_zero() && !fi.is_zero()) kp->K(il, jp) += kv * fi;
                    }
                }
            }
    }
    return *kcache_.emplace(key, std::move(kp)).first->second;
}

Morphism Engine::whisker_left(const Object &P, const Morphism &g) const {
    Morphism out{tensor_obj(P, g.src), tensor_obj(P, g.tgt), {}};
    const Object &S = g.src, &T = g.tgt;
    for (int d = 0; d < rank(); ++d) {
        ExactMatrix M(basis_size(out.tgt, d), basis_size(out.src, d));
        for (size_t s = 0; s < S.size(); ++s)
            for (size_t t = 0; t < T.size(); ++t) {
                // is the (t,s) part of g zero?
                bool nz = false;
                for (int b = 0; b < rank() && !nz; ++b) {
                    int os = summand_offset(S, static_cast<int>(s), b), ot = summand_offset(T, static_cast<int>(t), b);
                    int ns = static_cast<int>(trees(S[s], b).size()), nt = static_cast<int>(trees(T[t], b).size());
                    for (int i = 0; i < nt && !nz; ++i)
                        for (int j = 0; j < ns; ++j)
                            if (!g.blocks[b](ot + i, os + j).is_zero()) {
                                nz = true;
                                break;
                            }
                }
                if (!nz) continue;
                for (int p = 0; p < rank(); ++p) {
                    const KPair &ks = kmat(p, S[s], d);
                    const KPair &kt = kmat(p, T[t], d);
                    if (ks.left.empty() || kt.left.empty()) continue;
                    ExactMatrix G(static_cast<int>(kt.prod.size()), static_cast<int>(ks.prod.size()));
                    for (size_t i = 0; i < kt.prod.size(); ++i)
                        for (size_t j = 0; j < ks.prod.size(); ++j) {
                            if (kt.prod[i].second != ks.prod[j].second) continue;
                            const Tree &ti = kt.prod[i].first, &tj = ks.prod[j].first;
                            int bi = ti.empty() ? unit() : ti[ti.size() - 2];
                            int bj = tj.empty() ? unit() : tj[tj.size() - 2];
                            if (bi != bj) continue;
                            int r = summand_offset(T, static_cast<int>(t), bi) + tree_index(T[t], bi, ti);
                            int c = summand_offset(S, static_cast<int>(s), bi) + tree_index(S[s], bi, tj);
                            G(static_cast<int>(i), static_cast<int>(j)) = g.blocks[bi](r, c);
                        }
                    if (G.is_zero()) continue;
                    ExactMatrix Mts = kt.K * G * ks.Kinv;
                    for (size_t i = 0; i < P.size(); ++i) {
                        const Word &pw = P[i];
                        Word ws = pw, wt = pw;
                        ws.insert(ws.end(), S[s].begin(), S[s].end());
                        wt.insert(wt.end(), T[t].begin(), T[t].end());
                        int ksum = static_cast<int>(i * S.size() + s), tsum = static_cast<int>(i * T.size() + t);
                        int roff = summand_offset(out.tgt, tsum, d), coff = summand_offset(out.src, ksum, d);
                        for (const auto &tp : trees(pw, p))
                            for (int a = 0; a < Mts.rows(); ++a) {
                                int r = roff + tree_index(wt, d, concat(tp, kt.left[a]));
                                for (int b = 0; b < Mts.cols(); ++b) {
                                    if (Mts(a, b).is_zero()) continue;
                                    int c = coff + tree_index(ws, d, concat(tp, ks.left[b]));
                                    M(r, c) = Mts(a, b);
                                }
                            }
                    }
                }
            }
        out.blocks.push_back(std::move(M));
    }
    return out;
}

Morphism Engine::whisker_right(const Morphism &f, const Object &Q) const {
    Morphism out{tensor_obj(f.src, Q), tensor_obj(f.tgt, Q), {}};
    const Object &S = f.src, &T = f.tgt;
    for (int d = 0; d < rank(); ++d) {
        ExactMatrix M(basis_size(out.tgt, d), basis_size(out.src, d));
        for (size_t s = 0; s < S.size(); ++s)
            for (size_t t = 0; t < T.size(); ++t)
                for (size_t j = 0; j < Q.size(); ++j) {
                    Word ws = S[s], wt = T[t];
                    ws.insert(ws.end(), Q[j].begin(), Q[j].end());
                    wt.insert(wt.end(), Q[j].begin(), Q[j].end());
                    int roff = summand_offset(out.tgt, static_cast<int>(t * Q.size() + j), d);
                    int coff = summand_offset(out.src, static_cast<int>(s * Q.size() + j), d);
                    for (int c = 0; c < rank(); ++c) {
                        auto ps = paths(c, Q[j], d);
                        if (ps.empty()) continue;
                        const auto &ts = trees(S[s], c);
                        const auto &tt = trees(T[t], c);
                        int os = summand_offset(S, static_cast<int>(s), c), ot = summand_offset(T, static_cast<int>(t), c);
                        for (size_t a = 0; a < tt.size(); ++a)
                            for (size_t b = 0; b < ts.size(); ++b) {
                                const Cyclotomic &v = f.blocks[c](ot + static_cast<int>(a), os + static_cast<int>(b));
                                if (v.is_zero()) continue;
                                for (const auto &path : ps) {
                                    int r = roff + tree_index(wt, d, concat(tt[a], path));
                                    int cc = coff + tree_index(ws, d, concat(ts[b], path));
                                    M(r, cc) = v;
                                }
                            }
                    }
                }
        out.blocks.push_back(std::move(M));
    }
    return out;
}

Morphism Engine::tensor(const Morphism &f, const Morphism &g) const {
    return compose(whisker_right(f, g.tgt), whisker_left(f.src, g));
}

Morphism Engine::place(const Word &p, const Morphism &g, const Word &q) const {
    Morphism m = p.empty() ? g : whisker_left(Object{p}, g);
    return q.empty() ? m : whisker_right(m, Object{q});
}

// ---------------------------------------------------------------------------
// generators

Morphism Engine::braid(int x, int y) const {
    Morphism m = zero({{x, y}}, {{y, x}});
    for (int d : cat_->channels(x, y)) {
        const ExactMatrix &R = cat_->R(x, y, d);
        // rows: trees of (y,x) at d, indexed by multiplicity
        for (int mu = 0; mu < R.rows(); ++mu)
            for (int nu = 0; nu < R.cols(); ++nu)
                m.blocks[d](tree_index({y, x}, d, {y, 0, d, nu}), tree_index({x, y}, d, {x, 0, d, mu})) = R(mu, nu);
    }
    return m;
}

Morphism Engine::braid_inv(int x, int y) const {
    Morphism m = zero({{y, x}}, {{x, y}});
    for (int d : cat_->channels(x, y)) {
        const ExactMatrix &Ri = cat_->Rinv(x, y, d);
        // inverse of the transpose is the transpose of the inverse
        for (int mu = 0; mu < Ri.rows(); ++mu)
            for (int nu = 0; nu < Ri.cols(); ++nu)
                m.blocks[d](tree_index({x, y}, d, {x, 0, d, mu}), tree_index({y, x}, d, {y, 0, d, nu})) = Ri(nu, mu);
    }
    return m;
}

Morphism Engine::braid_words(const Word &x, const Word &y, bool inv) const {
    if (inv) return inverse(braid_words(x, y, false));
    // c_{x1..xm, Y}: move x_m across Y first, then x_{m-1}, and so on.
    Word cur = x;
    cur.insert(cur.end(), y.begin(), y.end());
    Morphism out = identity({cur});
    const int m = static_cast<int>(x.size()), l = static_cast<int>(y.size());
    for (int i = m - 1; i >= 0; --i)
        for (int j = 0; j < l; ++j) {
            int pos = i + j;  // x_i sits at pos, y_j at pos + 1
            Word pre(cur.begin(), cur.begin() + pos), post(cur.begin() + pos + 2, cur.end());
            out = compose(place(pre, braid(cur[pos], cur[pos + 1]), post), out);
            std::swap(cur[pos], cur[pos + 1]);
        }
    return out;
}

Morphism Engine::braid_objects(const Object &x, const Object &y, bool inv) const {
    Object xy, yx;
    for (const auto &a : x)
        for (const auto &b : y) {
            Word w = a;
            w.insert(w.end(), b.begin(), b.end());
            xy.push_back(w);
        }
    for (const auto &b : y)
        for (const auto &a : x) {
            Word w = b;
            w.insert(w.end(), a.begin(), a.end());
            yx.push_back(w);
        }
    Morphism out = inv ? zero(yx, xy) : zero(xy, yx);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) {
            int kxy = static_cast<int>(i * y.size() + j), kyx = static_cast<int>(j * x.size() + i);
            Morphism b = braid_words(x[i], y[j], inv);
            if (inv) add_into(out, b, kyx, kxy);
            else add_into(out, b, kxy, kyx);
        }
    return out;
}

Morphism Engine::inverse(const Morphism &f) const {
    Morphism m{f.tgt, f.src, {}};
    for (const auto &b : f.blocks) m.blocks.push_back(exact::inverse(b));
    return m;
}

void Engine::add_into(Morphism &big, const Morphism &part, int ks, int kt) const {
    if (part.src.size() != 1 || part.tgt.size() != 1 || part.src[0] != big.src.at(ks) || part.tgt[0] != big.tgt.at(kt))
        throw DimensionMismatch("add_into: summand words do not match");
    for (int c = 0; c < rank(); ++c) {
        const ExactMatrix &p = part.blocks[c];
        if (p.empty()) continue;
        int r0 = summand_offset(big.tgt, kt, c), c0 = summand_offset(big.src, ks, c);
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j)
                if (!p(i, j).is_zero()) big.blocks[c](r0 + i, c0 + j) += p(i, j);
    }
}

Morphism Engine::restrict(const Morphism &f, int ks, int kt) const {
    Morphism m = zero({f.src.at(ks)}, {f.tgt.at(kt)});
    for (int c = 0; c < rank(); ++c) {
        ExactMatrix &p = m.blocks[c];
        int r0 = summand_offset(f.tgt, kt, c), c0 = summand_offset(f.src, ks, c);
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j) p(i, j) = f.blocks[c](r0 + i, c0 + j);
    }
    return m;
}

Morphism Engine::split(int a, int b, int c, int mu) const {
    if (mu < 0 || mu >= cat_->N(a, b, c))
        throw InvalidArgument("no vertex " + cat_->name(c) + " -> " + cat_->name(a) + " " + cat_->name(b) + " #" +
                              std::to_string(mu));
    Morphism m = zero({{c}}, {{a, b}});
    m.blocks[c](tree_index({a, b}, c, {a, 0, c, mu}), 0) = 1;
    return m;
}

Morphism Engine::merge(int a, int b, int c, int mu) const {
    if (mu < 0 || mu >= cat_->N(a, b, c))
        throw InvalidArgument("no vertex " + cat_->name(a) + " " + cat_->name(b) + " -> " + cat_->name(c) + " #" +
                              std::to_string(mu));
    Morphism m = zero({{a, b}}, {{c}});
    m.blocks[c](0, tree_index({a, b}, c, {a, 0, c, mu})) = 1;
    return m;
}

// Cups and caps live on the empty word; its basis matches that of the word (1).
Morphism Engine::coev(int a) const {
    Morphism m = split(a, dual(a), unit());
    m.src = {Word{}};
    return m;
}

Morphism Engine::ev(int a) const {
    Morphism m = cat_->ev_scale(a) * merge(dual(a), a, unit());
    m.tgt = {Word{}};
    return m;
}

Morphism Engine::coev_r(int a) const { return cat_->pivotal(a).inverse() * coev(dual(a)); }

Morphism Engine::ev_r(int a) const { return cat_->pivotal(a) * ev(dual(a)); }

Cyclotomic Engine::twist_scalar(int a) const {
    {
        std::lock_guard<std::recursive_mutex> lock(mu_);
        auto it = twist_.find(a);
        if (it != twist_.end()) return it->second;
    }
    int ad = dual(a);
    Morphism step1 = place({a}, coev(a), {});          // a -> a a a*
    Morphism step2 = place({}, braid(a, a), {ad});      // a a a* -> a a a*
    Morphism step3 = place({a}, ev_r(a), {});           // a a a* -> a
    Morphism t = compose(step3, compose(step2, step1));
    Cyclotomic v = t.blocks[a](0, 0);
    std::lock_guard<std::recursive_mutex> lock(mu_);
    twist_[a] = v;
    return v;
}

Morphism Engine::twist(int a, bool inverse) const {
    Cyclotomic t = twist_scalar(a);
    return (inverse ? t.inverse() : t) * identity({{a}});
}

Cyclotomic Engine::loop(int a) const { return scalar(compose(ev_r(a), coev(a))); }

Cyclotomic Engine::trace(const Morphism &f) const {
    if (f.src != f.tgt) throw DimensionMismatch("trace of a non-endomorphism");
    Cyclotomic s;
    for (int c = 0; c < rank(); ++c) {
        if (f.blocks[c].rows() == 0) continue;
        Cyclotomic t = f.blocks[c].trace();
        if (!t.is_zero()) s += cat_->dim(c) * t;
    }
    return s;
}

Cyclotomic Engine::scalar(const Morphism &f) const {
    for (int c = 0; c < rank(); ++c)
        if (c != unit() && (f.blocks[c].rows() || f.blocks[c].cols()))
            throw DimensionMismatch("morphism is not a scalar");
    const ExactMatrix &m = f.blocks[unit()];
    if (m.rows() != 1 || m.cols() != 1) throw DimensionMismatch("morphism is not a scalar");
    return m(0, 0);
}

std::vector<Cyclotomic> Engine::to_vector(const Morphism &f) const {
    std::vector<Cyclotomic> v;
    for (int c = 0; c < rank(); ++c)
        for (int i = 0; i < f.blocks[c].rows(); ++i)
            for (int j = 0; j < f.blocks[c].cols(); ++j) v.push_back(f.blocks[c](i, j));
    return v;
}

Morphism Engine::from_vector(const Object &src, const Object &tgt, const std::vector<Cyclotomic> &v) const {
    Morphism m = zero(src, tgt);
    size_t k = 0;
    for (int c = 0; c < rank(); ++c)
        for (int i = 0; i < m.blocks[c].rows(); ++i)
            for (int j = 0; j < m.blocks[c].cols(); ++j) {
                if (k >= v.size()) throw DimensionMismatch("coordinate vector too short");
                m.blocks[c](i, j) = v[k++];
            }
    if (k != v.size()) throw DimensionMismatch("coordinate vector too long");
    return m;
}

Morphism Engine::basis_element(const Object &src, const Object &tgt, int k) const {
    Morphism m = zero(src, tgt);
    for (int c = 0; c < rank(); ++c) {
        int n = m.blocks[c].rows() * m.blocks[c].cols();
        if (k < n) {
            m.blocks[c](k / m.blocks[c].cols(), k % m.blocks[c].cols()) = 1;
            return m;
        }
        k -= n;
    }
    throw DimensionMismatch("basis index out of range");
}

}  // namespace genus::diagram
