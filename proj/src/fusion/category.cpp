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

#include "genus/fusion/category.hpp"

namespace genus::fusion {

int CategorySpec::find(const std::string &label) const {
    for (int i = 0; i < rank(); ++i)
        if (labels[i] == label) return i;
    return -1;
}

int CategorySpec::label(const std::string &n) const {
    int i = find(n);
    if (i < 0) {
        std::string known;
        for (const auto &l : labels) known += (known.empty() ? "" : ", ") + l;
        throw KeyNotFound("unknown label '" + n + "' in " + name + " (labels: " + known + ")");
    }
    return i;
}

int CategorySpec::N(int a, int b, int c) const {
    if (a < 0 || b < 0 || c < 0 || a >= rank() || b >= rank() || c >= rank()) return 0;
    return fusion[a][b][c];
}

bool operator==(const CategorySpec &x, const CategorySpec &y) {
    return x.name == y.name && x.labels == y.labels && x.unit == y.unit && x.dual == y.dual && x.fusion == y.fusion &&
           x.F == y.F && x.R == y.R && x.pivotal == y.pivotal && x.provenance == y.provenance;
}

int FBlock::row_index(int e, int alpha, int beta) const {
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i] == Channel{e, alpha, beta}) return static_cast<int>(i);
    return -1;
}

int FBlock::col_index(int f, int mu, int nu) const {
    for (size_t i = 0; i < cols.size(); ++i)
        if (cols[i] == Channel{f, mu, nu}) return static_cast<int>(i);
    return -1;
}

Category::Category(CategorySpec spec) : spec_(std::move(spec)) {
    int r = spec_.rank();
    if (r == 0) throw InvalidArgument("category has no labels");
    if (static_cast<int>(spec_.fusion.size()) != r) throw InvalidArgument("fusion table has wrong shape");
    for (const auto &row : spec_.fusion) {
        if (static_cast<int>(row.size()) != r) throw InvalidArgument("fusion table has wrong shape");
        for (const auto &col : row)
            if (static_cast<int>(col.size()) != r) throw InvalidArgument("fusion table has wrong shape");
    }
    if (static_cast<int>(spec_.dual.size()) != r) throw InvalidArgument("dual table has wrong length");
    for (int d : spec_.dual)
        if (d < 0 || d >= r) throw InvalidArgument("dual table references an unknown label");
    if (spec_.unit < 0 || spec_.unit >= r) throw InvalidArgument("unit is not a label");
    if (static_cast<int>(spec_.pivotal.size()) != r) throw InvalidArgument("pivotal table has wrong length");
    chan_.assign(r, std::vector<std::vector<int>>(r));
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                if (spec_.fusion[a][b][c] > 0) chan_[a][b].push_back(c);
    evscale_.assign(r, std::nullopt);
}

namespace {

std::string fkey_string(const CategorySpec &s, const FKey &k) {
    auto n = [&](int i) { return (i >= 0 && i < s.rank()) ? s.labels[i] : std::to_string(i); };
    return "F^{" + n(k.a) + "," + n(k.b) + "," + n(k.c) + "}_" + n(k.d) + "[(" + n(k.e) + "," + std::to_string(k.alpha) +
           "," + std::to_string(k.beta) + "),(" + n(k.f) + "," + std::to_string(k.mu) + "," + std::to_string(k.nu) +
           ")]";
}

}  // namespace

const FBlock &Category::F(int a, int b, int c, int d) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    std::array<int, 4> key{a, b, c, d};
    auto it = fcache_.find(key);
    if (it != fcache_.end()) return *it->second;
    auto blk = std::make_unique<FBlock>();
    for (int e = 0; e < rank(); ++e)
        for (int al = 0; al < N(a, b, e); ++al)
            for (int be = 0; be < N(e, c, d); ++be) blk->rows.push_back({e, al, be});
    for (int f = 0; f < rank(); ++f)
        for (int m = 0; m < N(b, c, f); ++m)
            for (int n = 0; n < N(a, f, d); ++n) blk->cols.push_back({f, m, n});
    if (blk->rows.size() != blk->cols.size())
        throw InvalidArgument("fusion rules are not associative at (" + name(a) + "," + name(b) + "," + name(c) + "; " +
                              name(d) + ")");
    int n = static_cast<int>(blk->rows.size());
    blk->m = ExactMatrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto &r = blk->rows[i];
            const auto &q = blk->cols[j];
            FKey k{a, b, c, d, r.label, q.label, r.m1, r.m2, q.m1, q.m2};
            auto f = spec_.F.find(k);
            if (f == spec_.F.end()) throw IncompleteData("missing F entry " + fkey_string(spec_, k));
            blk->m(i, j) = f->second;
        }
    if (n > 0) {
        try {
            blk->inv = exact::inverse(blk->m);
        } catch (const SingularMatrix &) {
            throw SingularMatrix("F-block F^{" + name(a) + "," + name(b) + "," + name(c) + "}_" + name(d) +
                                 " is singular");
        }
    }
    return *fcache_.emplace(key, std::move(blk)).first->second;
}

Cyclotomic Category::F(const FKey &k) const {
    const FBlock &b = F(k.a, k.b, k.c, k.d);
    int i = b.row_index(k.e, k.alpha, k.beta);
    int j = b.col_index(k.f, k.mu, k.nu);
    if (i < 0 || j < 0) return Cyclotomic();
    return b.m(i, j);
}

const ExactMatrix &Category::R(int a, int b, int c) const {
    if (!braided()) throw PremodularRequired("category " + spec_.name + " has no braiding");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    std::array<int, 3> key{a, b, c};
    auto it = rcache_.find(key);
    if (it != rcache_.end()) return *it->second;
    int n = N(a, b, c);
    auto m = std::make_unique<ExactMatrix>(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto f = spec_.R->find(RKey{a, b, c, i, j});
            if (f == spec_.R->end())
                throw IncompleteData("missing R entry R^{" + name(a) + "," + name(b) + "}_" + name(c) + "[" +
                                     std::to_string(i) + "," + std::to_string(j) + "]");
            (*m)(i, j) = f->second;
        }
    return *rcache_.emplace(key, std::move(m)).first->second;
}

const ExactMatrix &Category::Rinv(int a, int b, int c) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    std::array<int, 3> key{a, b, c};
    auto it = rinvcache_.find(key);
    if (it != rinvcache_.end()) return *it->second;
    const ExactMatrix &r = R(a, b, c);
    auto m = std::make_unique<ExactMatrix>(r.rows() ? exact::inverse(r) : r);
    return *rinvcache_.emplace(key, std::move(m)).first->second;
}

const Cyclotomic &Category::ev_scale(int a) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (!evscale_[a]) {
        int ad = dual(a);
        const FBlock &b = F(a, ad, a, a);
        int i = b.row_index(unit(), 0, 0);
        int j = b.col_index(unit(), 0, 0);
        if (i < 0 || j < 0) throw InternalInconsistency("no unit channel in a (x) dual(a) for " + name(a));
        if (b.m(i, j).is_zero()) throw InternalInconsistency("rigidity entry F^{a a* a}_a[1,1] vanishes for " + name(a));
        evscale_[a] = b.m(i, j).inverse();
    }
    return *evscale_[a];
}

Cyclotomic Category::dim(int a) const { return pivotal(a) * ev_scale(dual(a)); }

}  // namespace genus::fusion
