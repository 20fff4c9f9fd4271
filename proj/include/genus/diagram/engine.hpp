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

#ifndef GENUS_DIAGRAM_ENGINE_HPP
#define GENUS_DIAGRAM_ENGINE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "genus/fusion/category.hpp"

namespace genus::diagram {

using exact::Cyclotomic;
using exact::ExactMatrix;
using fusion::Category;
using fusion::CategoryPtr;

/// Tensor word of simple labels, all oriented +.
using Word = std::vector<int>;
/// Formal direct sum of tensor words.
using Object = std::vector<Word>;

/// Left-nested splitting tree c -> x_1 (x) ... (x) x_n, stored as the vertex
/// sequence (e_1, mu_1, ..., e_n, mu_n) with e_1 = x_1, mu_1 = 0 and e_n = c.
/// The empty word has the single empty tree of total charge 1.
using Tree = std::vector<int>;

/// Morphism between formal sums of words. For every total charge c the block
/// blocks[c] maps coefficient vectors over the splitting-tree basis of the
/// source at c to those of the target at c: f = sum_c sum_{s,t} M^c[s,t]
/// split_s o fuse_t where fuse_t is the dual (merge) basis.
struct Morphism {
    Object src, tgt;
    std::vector<ExactMatrix> blocks;

    bool is_zero() const;
    friend bool operator==(const Morphism &a, const Morphism &b);
    friend bool operator!=(const Morphism &a, const Morphism &b) { return !(a == b); }
    friend Morphism operator+(const Morphism &a, const Morphism &b);
    friend Morphism operator-(const Morphism &a, const Morphism &b);
    friend Morphism operator*(const Cyclotomic &s, const Morphism &a);
    Morphism &operator+=(const Morphism &b);
};

class Engine {
public:
    explicit Engine(CategoryPtr cat);

    const Category &cat() const { return *cat_; }
    CategoryPtr category() const { return cat_; }
    int rank() const { return cat_->rank(); }
    int unit() const { return cat_->unit(); }
    int dual(int a) const { return cat_->dual(a); }

    const std::vector<Tree> &trees(const Word &w, int c) const;
    int tree_index(const Word &w, int c, const Tree &t) const;
    /// Total basis size of a formal sum at charge c.
    int basis_size(const Object &o, int c) const;
    /// Offset of summand k inside the basis of o at charge c.
    int summand_offset(const Object &o, int k, int c) const;
    int hom_dim(const Object &src, const Object &tgt) const;
    /// Multiplicity of the simple c in the object.
    int multiplicity(const Object &o, int c) const { return basis_size(o, c); }

    Morphism zero(const Object &src, const Object &tgt) const;
    Morphism identity(const Object &o) const;
    Morphism compose(const Morphism &g, const Morphism &f) const;  // g o f
    Morphism whisker_left(const Object &p, const Morphism &g) const;
    Morphism whisker_right(const Morphism &f, const Object &q) const;
    Morphism tensor(const Morphism &f, const Morphism &g) const;
    /// id_P (x) g (x) id_Q for words P, Q.
    Morphism place(const Word &p, const Morphism &g, const Word &q) const;

    /// c_{x,y}: x y -> y x.
    Morphism braid(int x, int y) const;
    /// c_{x,y}^{-1}: y x -> x y.
    Morphism braid_inv(int x, int y) const;
    /// V^{ab}_{c,mu}: c -> a b.
    Morphism split(int a, int b, int c, int mu = 0) const;
    /// Dual basis vertex a b -> c with merge o split = id.
    Morphism merge(int a, int b, int c, int mu = 0) const;
    /// coev_a: 1 -> a a*.
    Morphism coev(int a) const;
    /// ev_a: a* a -> 1.
    Morphism ev(int a) const;
    /// coev'_a: 1 -> a* a.
    Morphism coev_r(int a) const;
    /// ev'_a: a a* -> 1.
    Morphism ev_r(int a) const;
    /// c_{X,Y}: X Y -> Y X for words, built strand by strand. With inverse set,
    /// returns c_{X,Y}^{-1}: Y X -> X Y instead.
    Morphism braid_words(const Word &x, const Word &y, bool inverse = false) const;
    /// Same for formal sums. Source summands of X (x) Y are ordered (i, j) with i
    /// the summand of X; the target Y (x) X uses (j, i).
    Morphism braid_objects(const Object &x, const Object &y, bool inverse = false) const;
    /// Blockwise inverse of an isomorphism.
    Morphism inverse(const Morphism &f) const;
    /// Adds `part` (a map from summand ks of big.src to summand kt of big.tgt,
    /// both given as one-word objects) into big.
    void add_into(Morphism &big, const Morphism &part, int ks, int kt) const;
    /// Restriction of f to source summand ks and target summand kt.
    Morphism restrict(const Morphism &f, int ks, int kt) const;

    /// theta_a^{+1} or theta_a^{-1} on the strand a.
    Morphism twist(int a, bool inverse = false) const;
    /// theta_a as a scalar, from (id (x) ev'_a)(c_{a,a} (x) id)(id (x) coev_a).
    Cyclotomic twist_scalar(int a) const;
    /// dim(a) = ev'_a o coev_a.
    Cyclotomic loop(int a) const;

    /// Right-duality trace: sum_c dim(c) tr(M^c).
    Cyclotomic trace(const Morphism &f) const;
    /// Value of an endomorphism of the empty word (or of a unit-only object) as a scalar.
    Cyclotomic scalar(const Morphism &f) const;

    /// Flattened coordinates in the basis (c, target tree, source tree), lexicographic.
    std::vector<Cyclotomic> to_vector(const Morphism &f) const;
    Morphism from_vector(const Object &src, const Object &tgt, const std::vector<Cyclotomic> &v) const;
    /// Elementary morphism: 1 at position k of the flattened basis.
    Morphism basis_element(const Object &src, const Object &tgt, int k) const;

    std::string word_string(const Word &w) const;

private:
    struct KPair {
        ExactMatrix K;     // left paths x product basis
        ExactMatrix Kinv;  // product basis x left paths
        std::vector<Tree> left;                   // paths from p through B to d
        std::vector<std::pair<Tree, int>> prod;   // (tree of B at b, nu)
    };
    const KPair &kmat(int p, const Word &b, int d) const;
    /// Paths (e_1, mu_1, ...) from charge p through the word to charge d.
    std::vector<Tree> paths(int p, const Word &w, int d) const;

    CategoryPtr cat_;
    mutable std::recursive_mutex mu_;
    mutable std::map<Word, std::vector<std::vector<Tree>>> trees_;
    mutable std::map<Word, std::vector<std::map<Tree, int>>> tree_idx_;
    mutable std::map<std::tuple<int, Word, int>, std::unique_ptr<KPair>> kcache_;
    mutable std::map<int, Cyclotomic> twist_;
};

using EnginePtr = std::shared_ptr<const Engine>;

}  // namespace genus::diagram

#endif
