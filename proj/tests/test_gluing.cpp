// Admissible gluings, orbit bookkeeping and surface classification.
#include <doctest.h>

#include <set>

#include "genus/error.hpp"
#include "genus/gluing/gluing.hpp"

using namespace genus;
using namespace genus::gluing;

TEST_CASE("enumeration counts and invariants") {
    CHECK(enumerate_adm(0).size() == 1);
    auto one = enumerate_adm(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].to_string() == "(1 2)");
    long dfact = 1;
    for (int n = 1; n <= 5; ++n) {
        dfact *= 2 * n - 1;
        auto all = enumerate_adm(n);
        CHECK(static_cast<long>(all.size()) == dfact);
        std::set<std::string> uniq;
        for (const auto &g : all) {
            uniq.insert(g.to_string());
            for (int i = 1; i <= 2 * n; ++i) {
                CHECK(g(i) != i);
                CHECK(g(g(i)) == i);
            }
        }
        CHECK(uniq.size() == all.size());
    }
    CHECK(enumerate_adm(3).size() == 15);
}

TEST_CASE("cycle notation and JSON") {
    Gluing g = parse_gluing("(1 3)(2 4)");
    CHECK(g == parse_gluing("  (13) (24) "));
    CHECK(g == parse_gluing("(2,4)(3 1)"));
    CHECK(g.to_string() == "(1 3)(2 4)");
    CHECK(g.to_json().dump() == R"({"n":2,"pairs":[[1,3],[2,4]]})");
    CHECK(gluing_from_json(g.to_json()) == g);
    CHECK(parse_gluing("()").n() == 0);
    CHECK_THROWS_AS(parse_gluing("(1 2 3)"), ParseError);
    CHECK_THROWS_AS(parse_gluing("(1 2)(2 3)"), ParseError);
    CHECK_THROWS_AS(parse_gluing("(1 3)"), ParseError);
    CHECK_THROWS_AS(parse_gluing("(1)(2 3)"), ParseError);
    CHECK_THROWS_AS(parse_gluing("1 2"), ParseError);
    CHECK_THROWS_AS(gluing_from_json(nlohmann::json{{"n", 1}, {"pairs", {{1, 1}}}}), ParseError);
}

TEST_CASE("orbits") {
    Gluing g = parse_gluing("(1 3)(2 4)");
    CHECK(orbit_info(g, 1) == OrbitInfo{1, 3});
    CHECK(orbit_info(g, 4) == OrbitInfo{2, 4});
    CHECK(orbit_info(g, 4).low == 2);
    CHECK(orbit_info(parse_gluing("(1 2)"), 2) == OrbitInfo{1, 2});
    CHECK_THROWS_AS(orbit_info(g, 5), InvalidArgument);
    CHECK_THROWS_AS(orbit_info(g, 0), InvalidArgument);
    for (int n = 0; n <= 4; ++n)
        for (const auto &s : enumerate_adm(n)) CHECK(static_cast<int>(orbits(s).size()) == n);
}

TEST_CASE("comm cases") {
    Gluing a = parse_gluing("(1 2)(3 4)"), b = parse_gluing("(1 3)(2 4)"), c = parse_gluing("(1 4)(2 3)");
    CHECK(comm_case(a, {1, 2}, {3, 4}) == 1);
    CHECK(comm_case(b, {1, 3}, {2, 4}) == 2);
    CHECK(comm_case(c, {1, 4}, {2, 3}) == 3);
    CHECK(comm_case(c, {2, 3}, {1, 4}) == 3);
    CHECK_THROWS_AS(comm_case(a, {1, 2}, {1, 2}), InvalidArgument);
    CHECK_THROWS_AS(comm_case(a, {1, 3}, {2, 4}), InvalidArgument);
    for (int n = 2; n <= 4; ++n)
        for (const auto &s : enumerate_adm(n)) {
            auto os = orbits(s);
            for (size_t i = 0; i < os.size(); ++i)
                for (size_t j = 0; j < os.size(); ++j) {
                    if (i == j) continue;
                    int k = comm_case(s, os[i], os[j]);
                    CHECK(k >= 1);
                    CHECK(k <= 3);
                    CHECK(k == comm_case(s, os[j], os[i]));
                    // exactly one of the three orderings holds
                    OrbitInfo p = os[std::min(i, j)], q = os[std::max(i, j)];
                    int hits = (p.high < q.low) + (q.low < p.high && p.high < q.high) + (q.high < p.high);
                    CHECK(hits == 1);
                }
        }
}

TEST_CASE("standard presentations") {
    CHECK(sigma_gk(1, 1).to_string() == "(1 3)(2 4)");
    CHECK(sigma_gk(2, 1).to_string() == "(1 3)(2 4)(5 7)(6 8)");
    CHECK(sigma_gk(0, 3).to_string() == "(1 2)(3 4)");
    CHECK(sigma_gk(0, 1).n() == 0);
    CHECK(sigma_gk(1, 2).to_string() == "(1 3)(2 4)(5 6)");
    CHECK_THROWS_AS(sigma_gk(0, 0), InvalidArgument);
    for (int g = 0; g <= 3; ++g)
        for (int k = 1; k <= 3; ++k) {
            SurfaceType t = surface_type(sigma_gk(g, k));
            CHECK(t.genus == g);
            CHECK(t.punctures == k);
        }
}

TEST_CASE("surface classification") {
    CHECK(surface_type(parse_gluing("(1 2)")) == SurfaceType{0, 2, 0});
    CHECK(surface_type(parse_gluing("(1 2)(3 4)")) == SurfaceType{0, 3, -1});
    CHECK(surface_type(parse_gluing("(1 3)(2 4)")) == SurfaceType{1, 1, -1});
    CHECK(surface_type(parse_gluing("(1 4)(2 3)")) == SurfaceType{0, 3, -1});
    CHECK(surface_type(Gluing::from_pairs(0, {})) == SurfaceType{0, 1, 1});
    for (int n = 0; n <= 4; ++n)
        for (const auto &s : enumerate_adm(n)) {
            SurfaceType a = surface_type(s), b = surface_type_by_permutation(s);
            CHECK(a == b);
            CHECK(a.euler == 2 - 2 * a.genus - a.punctures);
            CHECK(a.euler == 1 - n);
            CHECK(a.punctures >= 1);
            CHECK(a.genus >= 0);
        }
}
