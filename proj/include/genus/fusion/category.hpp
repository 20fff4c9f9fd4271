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

#ifndef GENUS_FUSION_CATEGORY_HPP
#define GENUS_FUSION_CATEGORY_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "genus/exact/matrix.hpp"

namespace genus::fusion {

using exact::Cyclotomic;
using exact::ExactMatrix;

/// F^{abc}_d[(e,alpha,beta),(f,mu,nu)]: the splitting tree
/// (V^{ab}_{e,alpha} (x) id) V^{ec}_{d,beta} expands as the sum over f of
/// F * (id (x) V^{bc}_{f,mu}) V^{af}_{d,nu}.
struct FKey {
    int a, b, c, d, e, f;
    int alpha = 0, beta = 0, mu = 0, nu = 0;
    auto tie() const { return std::array<int, 10>{a, b, c, d, e, f, alpha, beta, mu, nu}; }
    bool operator<(const FKey &o) const { return tie() < o.tie(); }
    bool operator==(const FKey &o) const { return tie() == o.tie(); }
};

/// R^{ab}_c[mu,nu]: c_{a,b} V^{ab}_{c,mu} = sum_nu R[mu,nu] V^{ba}_{c,nu}.
struct RKey {
    int a, b, c;
    int mu = 0, nu = 0;
    auto tie() const { return std::array<int, 5>{a, b, c, mu, nu}; }
    bool operator<(const RKey &o) const { return tie() < o.tie(); }
    bool operator==(const RKey &o) const { return tie() == o.tie(); }
};

/// Raw skeletal premodular data. Label references are indices into `labels`;
/// out-of-range indices are representable so that the structural validator can
/// report them.
struct CategorySpec {
    std::string name;
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    /// N[a][b][c]
    std::vector<std::vector<std::vector<int>>> fusion;
    std::map<FKey, Cyclotomic> F;
    /// Absent for a spherical fusion category without braiding.
    std::optional<std::map<RKey, Cyclotomic>> R;
    std::vector<Cyclotomic> pivotal;
    std::string provenance;

    int rank() const { return static_cast<int>(labels.size()); }
    /// Index of a label name, -1 when unknown.
    int find(const std::string &label) const;
    /// Index of a label name; throws KeyNotFound.
    int label(const std::string &name) const;
    int N(int a, int b, int c) const;
    bool braided() const { return R.has_value(); }

    friend bool operator==(const CategorySpec &x, const CategorySpec &y);
};

/// One row or column index of an F-block.
struct Channel {
    int label;  // e (rows) or f (columns)
    int m1, m2; // (alpha, beta) or (mu, nu)
    bool operator==(const Channel &o) const { return label == o.label && m1 == o.m1 && m2 == o.m2; }
};

struct FBlock {
    std::vector<Channel> rows, cols;
    ExactMatrix m;
    ExactMatrix inv;
    int row_index(int e, int alpha, int beta) const;
    int col_index(int f, int mu, int nu) const;
};

/// Compiled, indexed view of a CategorySpec. F- and R-blocks are assembled
/// lazily and cached; missing entries raise IncompleteData.
class Category {
public:
    explicit Category(CategorySpec spec);

    const CategorySpec &spec() const { return spec_; }
    int rank() const { return spec_.rank(); }
    int unit() const { return spec_.unit; }
    int dual(int a) const { return spec_.dual[a]; }
    int N(int a, int b, int c) const { return spec_.N(a, b, c); }
    const std::string &name(int a) const { return spec_.labels[a]; }
    const Cyclotomic &pivotal(int a) const { return spec_.pivotal[a]; }
    bool braided() const { return spec_.braided(); }

    /// Labels c with N_{ab}^c > 0.
    const std::vector<int> &channels(int a, int b) const { return chan_[a][b]; }

    const FBlock &F(int a, int b, int c, int d) const;
    /// Single entry; zero when the index is not admissible.
    Cyclotomic F(const FKey &k) const;
    /// N_{ab}^c x N_{ab}^c matrix R^{ab}_c; throws PremodularRequired when unbraided.
    const ExactMatrix &R(int a, int b, int c) const;
    const ExactMatrix &Rinv(int a, int b, int c) const;

    /// Zigzag normalization beta_a = 1 / F^{a a* a}_a[1,1] of the evaluation map.
    const Cyclotomic &ev_scale(int a) const;
    /// Engine-computed dim_a(a) = pivotal(a) * ev_scale(dual a).
    Cyclotomic dim(int a) const;

private:
    CategorySpec spec_;
    std::vector<std::vector<std::vector<int>>> chan_;
    mutable std::recursive_mutex mu_;
    mutable std::map<std::array<int, 4>, std::unique_ptr<FBlock>> fcache_;
    mutable std::map<std::array<int, 3>, std::unique_ptr<ExactMatrix>> rcache_, rinvcache_;
    mutable std::vector<std::optional<Cyclotomic>> evscale_;
};

using CategoryPtr = std::shared_ptr<const Category>;

}  // namespace genus::fusion

#endif
