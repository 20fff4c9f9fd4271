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

#ifndef GENUS_CENTER_CENTER_HPP
#define GENUS_CENTER_CENTER_HPP

#include <map>
#include <memory>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "genus/diagram/engine.hpp"
#include "genus/fusion/checks.hpp"
#include "genus/gluing/gluing.hpp"

namespace genus::center {

using diagram::Engine;
using diagram::EnginePtr;
using diagram::Morphism;
using diagram::Object;
using diagram::Word;
using exact::Cyclotomic;
using exact::ExactMatrix;
using gluing::Gluing;

/// Multiplicity of every simple label, indexed by label.
struct FormalObject {
    std::vector<int> mult;
    bool operator==(const FormalObject &o) const { return mult == o.mult; }
};

/// One half-braiding Z (x) X -> X (x) Z per simple Z.
struct HalfBraiding {
    std::vector<Morphism> blocks;
};

/// An object of the twisted center: a carrier with one half-braiding per orbit,
/// orbits ordered by their low element.
struct SigmaPair {
    Object carrier;
    std::vector<HalfBraiding> braidings;
    /// Memoized averaging factors, keyed (side, orbit, label). Cleared by hand
    /// if braidings are edited after use.
    mutable std::map<std::tuple<int, int, int>, Morphism> cache;
};

/// Crossing sense used when Z passes a leg outside its own orbit.
struct Routing {
    bool before_over = false;  // legs to the left of the orbit's first leg
    bool after_over = false;   // legs to the right of its second leg
};

/// Everything that depends on a category and a gluing.
class Center {
public:
    Center(EnginePtr eng, Gluing sigma, Routing routing = {});

    const Engine &engine() const { return *eng_; }
    EnginePtr engine_ptr() const { return eng_; }
    const Gluing &sigma() const { return sigma_; }
    int n() const { return sigma_.n(); }
    const std::vector<gluing::OrbitInfo> &orbits() const { return orbits_; }
    const Routing &routing() const { return routing_; }
    Cyclotomic dim(int a) const { return dims_.at(a); }
    Cyclotomic dim_omega() const { return dim_omega_; }

    /// Orbit label assignments a_1..a_n, lexicographic. Index 0 is all-unit.
    const std::vector<std::vector<int>> &assignments() const { return assign_; }
    int assignment_index(const std::vector<int> &a) const;
    /// The word x_1 .. x_n w x_{n+1} .. x_2n for one assignment; the low leg of
    /// an orbit carries its label, the high leg the dual.
    Word leg_word(const std::vector<int> &a, const Word &w) const;
    /// X_sigma: summand (assignment k, word j of X) sits at k * |X| + j.
    Object induced_carrier(const Object &x) const;
    SigmaPair induce(const Object &x) const;
    /// The induced half-braiding of orbit k for the simple Z.
    Morphism induced_braiding(const Object &x, int k, int z) const;
    /// id (x) f (x) id summand by summand: X_sigma -> Y_sigma.
    Morphism induced_arrow(const Morphism &f) const;
    /// X -> X_sigma onto the all-unit summand, and its left inverse.
    Morphism unit_inclusion(const Object &x) const;
    Morphism unit_projection(const Object &x) const;

    /// Averaging over orbit k: sum_a dim(a)/dim(Omega) times the a-loop threaded
    /// through gamma_{k,a}^{-1} on the source and beta_{k,a} on the target.
    Morphism project_orbit(int k, const SigmaPair &px, const SigmaPair &py, const Morphism &f) const;
    /// Composite over all orbits; `order` lists orbit indices, applied last
    /// element first. Empty means 0, 1, .., n-1.
    Morphism project(const SigmaPair &px, const SigmaPair &py, const Morphism &f, std::vector<int> order = {}) const;
    bool is_sigma_morphism(const SigmaPair &px, const SigmaPair &py, const Morphism &f) const;

    /// Left adjoint data for a plain object X and an object (Y, beta):
    /// F(phi) = dim(Omega)^n pi(phi o eta'), G(psi) = psi o eta.
    Morphism adjoint_F(const Object &x, const SigmaPair &py, const SigmaPair &ix, const Morphism &phi) const;
    Morphism adjoint_G(const Object &x, const Morphism &psi) const;

private:
    const Morphism &right_side(const SigmaPair &p, int k, int a) const;
    const Morphism &left_side(const SigmaPair &p, int k, int a) const;

    EnginePtr eng_;
    Gluing sigma_;
    Routing routing_;
    std::vector<gluing::OrbitInfo> orbits_;
    std::vector<std::vector<int>> assign_;
    std::vector<Cyclotomic> dims_;
    Cyclotomic dim_omega_;
};

FormalObject induce_object(const Center &c, const FormalObject &x);
Object object_of(const FormalObject &x);

/// Invertibility, gamma_1 = id, compatibility with fusion and the three
/// commutation families.
fusion::Report verify_sigma_pair(const Center &c, const SigmaPair &p);
/// Only the commutation families; useful when probing routings.
fusion::Report check_commutation(const Center &c, const SigmaPair &p);

/// Rank of the averaging map on the standard basis of Hom(X, Y).
int hom_Z_dim(const Center &c, const SigmaPair &px, const SigmaPair &py);

struct AdjunctionReport {
    fusion::Report gf, fg;
};
/// G o F = id on the basis of Hom(i, j_sigma), for all simples i, j. F o G = id
/// on a spanning set of the sigma-morphisms I(i) -> I(j): averages of seeded
/// random morphisms, drawn until three in a row leave the exact rank unchanged.
AdjunctionReport check_adjunction(const Center &c);

/// Composition compatibility of the averaging map on random composable
/// triples of induced objects, taken literally for arbitrary morphisms.
fusion::Report check_projection_functoriality(const Center &c, int samples, std::mt19937_64 &rng);
/// pi o pi = pi, and every output is a sigma-morphism.
fusion::Report check_projection_idempotent(const Center &c, int samples, std::mt19937_64 &rng);
/// Averaging the identity over one orbit gives the identity, on every I(x).
fusion::Report check_unity_trace(const Center &c);
/// The orbit order inside pi is irrelevant: forward and reverse agree.
fusion::Report check_projection_order(const Center &c, int samples, std::mt19937_64 &rng);
/// pi(psi o f o chi) = psi o pi(f) o chi for sigma-morphisms psi, chi.
fusion::Report check_projection_bimodule(const Center &c, int samples, std::mt19937_64 &rng);

/// The algebra of sigma-endomorphisms of the sum of I(j), presented on
/// Hom(i, j_sigma). Basis element (i, j, t) is tree t of j_sigma at charge i.
class TubeAlgebra {
public:
    explicit TubeAlgebra(const Center &c);

    int rank() const { return r_; }
    /// Order of the cyclotomic field of the input data.
    int field_order() const { return field_; }
    /// Size of Hom(i, j_sigma).
    int block(int i, int j) const { return size_[i][j]; }
    int dimension() const;
    /// Flattened index of (i, j, t) and its inverse.
    int index(int i, int j, int t) const { return offset_[i][j] + t; }
    /// Product x * y where x in (i, j) and y in (j, k): F(y) o x.
    exact::Vector multiply(int i, int j, int k, const exact::Vector &x, const exact::Vector &y) const;
    /// Full product on flattened vectors.
    exact::Vector multiply(const exact::Vector &x, const exact::Vector &y) const;
    exact::Vector unit() const;
    /// F(basis element t of (j, k)): I(j) -> I(k).
    const Morphism &lifted(int j, int k, int t) const { return lift_[j][k][t]; }
    /// Block of F(t) at charge i, giving the action on (i, j).
    const ExactMatrix &action(int i, int j, int k, int t) const { return lift_[j][k][t].blocks[i]; }

private:
    int r_ = 0;
    int field_ = 1;
    std::vector<std::vector<int>> size_, offset_;
    std::vector<std::vector<std::vector<Morphism>>> lift_;  // [j][k][t]
};

/// Associativity on every basis triple and the two unit laws.
fusion::Report check_tube_algebra(const TubeAlgebra &a);

struct RankResult {
    int rank = 0;
    std::vector<int> block_dims;  // sorted ascending
    int total_dim = 0;
    bool split = true;
    /// N of the field Q(zeta_N) holding the idempotents.
    int field_order = 1;
    std::string diagnostic;
};
/// Exact center of the algebra, then primitive central idempotents.
/// Throws NonSplit when the blocks do not account for the whole dimension.
RankResult center_rank(const TubeAlgebra &a);

/// Classical annular algebra on Hom(a i, j a) built straight from the fusion
/// data, no induced objects involved. Returns dim of its center.
int annular_center_dim(const Engine &eng);
/// Number of simple modules read off the left-regular representation:
/// dim A - dim [A, A].
int regular_rep_rank(const TubeAlgebra &a);

}  // namespace genus::center

#endif
