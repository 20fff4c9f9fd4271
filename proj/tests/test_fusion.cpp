// Category data: structural validation, pentagon, hexagon, dimensions,
// twists, sphericality and the S-matrix.
#include <doctest.h>

#include <complex>

#include "genus/catalog/catalog.hpp"
#include "genus/error.hpp"
#include "genus/fusion/checks.hpp"
#include "genus/fusion/derived.hpp"

using namespace genus;
using namespace genus::fusion;
using exact::Cyclotomic;

namespace {

std::vector<std::string> all_keys() {
    auto k = catalog::builtin_keys();
    k.push_back("rep_a4");
    return k;
}

Cyclotomic z(int n, int e) { return Cyclotomic::zeta(n, e); }

Cyclotomic golden() { return Cyclotomic(0) - z(5, 2) - z(5, 3); }

}  // namespace

TEST_CASE("bundled catalogs satisfy every axiom exactly") {
    for (const auto &key : all_keys()) {
        CAPTURE(key);
        CategorySpec spec = catalog::resolve(key);
        CHECK(validate_structure(spec).ok());
        Category cat(spec);
        Report p = check_pentagon(cat);
        CHECK(p.ok());
        CHECK(p.instances > 0);
        if (spec.braided()) CHECK(check_hexagon(cat).ok());
        CHECK(check_spherical_ribbon(cat).ok());
        auto q = quantum_dims(cat);
        CHECK(q.omega.weights[cat.unit()] == Cyclotomic(1));
        Cyclotomic sum;
        for (const auto &w : q.omega.weights) sum += w * w;
        CHECK(q.omega.total == sum);
        for (int a = 0; a < cat.rank(); ++a) CHECK(q.omega.weights[a] == cat.dim(a));
        if (spec.braided()) {
            CHECK(q.twists[cat.unit()] == Cyclotomic(1));
            auto s = s_matrix_and_transparency(cat);
            REQUIRE(!s.transparent.empty());
            CHECK(s.transparent.front() == cat.unit());
            if (s.modular) CHECK(s.transparent.size() == 1);
        }
    }
}

TEST_CASE("structural validator") {
    CHECK(validate_structure(catalog::builtin("fibonacci")).ok());
    CHECK(validate_structure(catalog::builtin("vec_z3_q")).ok());

    CategorySpec bad = catalog::builtin("fibonacci");
    bad.dual = {0, 0};
    Report r = validate_structure(bad);
    CHECK_FALSE(r.ok());

    CategorySpec unknown = catalog::builtin("vec_z2");
    FKey k{0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    k.a = -1;
    unknown.F[k] = Cyclotomic(1);
    CHECK_FALSE(validate_structure(unknown).ok());
}

TEST_CASE("pentagon detects a negated F entry") {
    CategorySpec vec = catalog::builtin("vec_z2");
    CHECK(check_pentagon(Category(vec)).ok());

    CategorySpec fib = catalog::builtin("fibonacci");
    FKey k{1, 1, 1, 1, 1, 1, 0, 0, 0, 0};
    REQUIRE(fib.F.count(k));
    fib.F[k] = Cyclotomic(0) - fib.F[k];
    CHECK_FALSE(check_pentagon(Category(fib)).ok());

    CategorySpec missing = catalog::builtin("fibonacci");
    missing.F.erase(k);
    CHECK_THROWS_AS(check_pentagon(Category(missing)), IncompleteData);
}

TEST_CASE("hexagon on the Fibonacci braiding") {
    CategorySpec fib = catalog::builtin("fibonacci");
    RKey one{1, 1, 0, 0, 0}, tau{1, 1, 1, 0, 0};
    CHECK(fib.R->at(one) == z(5, 3));  // zeta_5^{-2}
    CHECK(check_hexagon(Category(fib)).ok());

    // R^{tt}_t = zeta_5 together with R^{tt}_1 = zeta_5^{-2} is not a braiding.
    CategorySpec lit = fib;
    (*lit.R)[tau] = z(5, 1);
    CHECK_FALSE(check_hexagon(Category(lit)).ok());

    CategorySpec triv = fib;
    (*triv.R)[tau] = Cyclotomic(1);
    CHECK_FALSE(check_hexagon(Category(triv)).ok());

    CategorySpec rep = catalog::builtin("rep_z2");
    for (auto &[key, v] : *rep.R) CHECK(v == Cyclotomic(1));
    CHECK(check_hexagon(Category(rep)).ok());

    CategorySpec noR = fib;
    noR.R->erase(tau);
    CHECK_THROWS_AS(check_hexagon(Category(noR)), IncompleteData);
}

TEST_CASE("quantum dimensions and dim(Omega)") {
    auto vec = quantum_dims(Category(catalog::builtin("vec_z2")));
    CHECK(vec.omega.weights == std::vector<Cyclotomic>{1, 1});
    CHECK(vec.omega.total == Cyclotomic(2));

    Cyclotomic phi = golden();
    CHECK(std::abs(phi.to_complex() - std::complex<double>((1 + std::sqrt(5.0)) / 2, 0)) < 1e-12);
    auto fib = quantum_dims(Category(catalog::builtin("fibonacci")));
    CHECK(fib.omega.weights[1] == phi);
    CHECK(fib.omega.total == phi + Cyclotomic(2));
    CHECK(fib.twists[1] == z(5, 2));

    auto ising = quantum_dims(Category(catalog::builtin("ising")));
    Cyclotomic sqrt2 = z(8, 1) + z(8, 7);
    CHECK(ising.omega.weights == std::vector<Cyclotomic>{1, sqrt2, 1});
    CHECK(ising.omega.total == Cyclotomic(4));
    CHECK(ising.twists == std::vector<Cyclotomic>{1, z(16, 1), -1});

    auto s3 = quantum_dims(Category(catalog::builtin("rep_s3")));
    CHECK(s3.omega.weights == std::vector<Cyclotomic>{1, 1, 2});
    CHECK(s3.omega.total == Cyclotomic(6));
}

TEST_CASE("spherical structure checks") {
    CHECK(check_spherical_ribbon(Category(catalog::builtin("fibonacci"))).ok());
    CategorySpec z3 = catalog::builtin("vec_z3_q");
    CHECK(check_spherical_ribbon(Category(z3)).ok());
    z3.pivotal[1] = z(3, 1);
    z3.pivotal[2] = Cyclotomic(1);
    Report r = check_spherical_ribbon(Category(z3));
    CHECK_FALSE(r.ok());
}

TEST_CASE("S-matrix and transparent labels") {
    auto rep = s_matrix_and_transparency(Category(catalog::builtin("rep_z2")));
    CHECK(rep.transparent == std::vector<int>{0, 1});
    CHECK_FALSE(rep.modular);

    auto fib = s_matrix_and_transparency(Category(catalog::builtin("fibonacci")));
    CHECK(fib.transparent == std::vector<int>{0});
    CHECK(fib.modular);
    // S_{tt} = -1 in the normalization where S_{11} = 1
    CHECK(fib.S(1, 1) == Cyclotomic(-1));

    auto ising = s_matrix_and_transparency(Category(catalog::builtin("ising")));
    CHECK(ising.modular);
    CHECK(exact::rank(ising.S) == 3);

    auto s3 = s_matrix_and_transparency(Category(catalog::builtin("rep_s3")));
    CHECK(s3.transparent.size() == 3);
    CHECK_FALSE(s3.modular);

    CategorySpec plain = catalog::builtin("vec_z2");
    plain.R.reset();
    CHECK_THROWS_AS(s_matrix_and_transparency(Category(plain)), PremodularRequired);
}
