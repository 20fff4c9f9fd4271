// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is nonzero when a criterion fails that is not listed in
// kExpectedFailures. Listed criteria still print FAIL with their numbers.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "genus/catalog/catalog.hpp"
#include "genus/center/center.hpp"
#include "genus/diagram/checks.hpp"
#include "genus/fusion/derived.hpp"
#include "genus/gluing/gluing.hpp"

using namespace genus;

namespace {

// Wall-clock budgets in seconds.
constexpr double kBudgetCatalogs = 10;
constexpr double kBudgetSurfaces = 1;
constexpr double kBudgetDrinfeld = 60;
constexpr double kBudgetModular = 600;
constexpr double kBudgetGraphical = 30;
// Randomized composable triples per catalog for the averaging checks.
constexpr int kTriples = 100;

// Averaging is an idempotent onto a proper subalgebra of a full matrix algebra
// (e.g. End(I(0)) for Vec Z/2 at (1 2)), so it cannot be multiplicative on
// arbitrary morphisms. The check is kept as stated and fails.
const std::set<int> kExpectedFailures{6};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Line {
    bool ok = true;
    std::ostringstream note;
    void fail(const std::string &why) {
        if (ok) note << " first failure: " << why << ";";
        ok = false;
    }
};

struct Built {
    diagram::EnginePtr eng;
    std::map<std::string, std::unique_ptr<center::Center>> centers;
    std::map<std::string, std::unique_ptr<center::TubeAlgebra>> algebras;
    std::map<std::string, center::RankResult> ranks;
};

std::map<std::string, Built> cache;

Built &built(const std::string &key) {
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto cat = std::make_shared<const fusion::Category>(catalog::resolve(key));
    Built b;
    b.eng = std::make_shared<const diagram::Engine>(cat);
    return cache.emplace(key, std::move(b)).first->second;
}

const center::Center &center_of(const std::string &key, const gluing::Gluing &g) {
    Built &b = built(key);
    auto &slot = b.centers[g.to_string()];
    if (!slot) slot = std::make_unique<center::Center>(b.eng, g);
    return *slot;
}

const center::TubeAlgebra &algebra_of(const std::string &key, const gluing::Gluing &g) {
    Built &b = built(key);
    auto &slot = b.algebras[g.to_string()];
    if (!slot) slot = std::make_unique<center::TubeAlgebra>(center_of(key, g));
    return *slot;
}

const center::RankResult &rank_of(const std::string &key, const gluing::Gluing &g) {
    Built &b = built(key);
    auto it = b.ranks.find(g.to_string());
    if (it != b.ranks.end()) return it->second;
    return b.ranks.emplace(g.to_string(), center::center_rank(algebra_of(key, g))).first->second;
}

std::vector<gluing::Gluing> adm24() {
    auto out = gluing::enumerate_adm(1);
    for (const auto &g : gluing::enumerate_adm(2)) out.push_back(g);
    return out;
}

void criterion_catalogs(Line &l) {
    for (const char *key : {"fibonacci", "ising", "semion", "rep_z2", "rep_s3", "vec_z3_q"}) {
        const auto &cat = built(key).eng->cat();
        for (const auto &r : {fusion::validate_structure(cat.spec()), fusion::check_pentagon(cat), fusion::check_hexagon(cat),
                              fusion::check_spherical_ribbon(cat)})
            if (!r.ok()) l.fail(std::string(key) + " " + r.check);
    }
    l.note << " 6 catalogs, pentagon/hexagon/spherical/ribbon;";
}

void criterion_surfaces(Line &l) {
    const std::pair<const char *, gluing::SurfaceType> ex[] = {
        {"(1 2)", {0, 2, 0}}, {"(1 2)(3 4)", {0, 3, -1}}, {"(1 3)(2 4)", {1, 1, -1}}};
    for (const auto &[s, want] : ex) {
        auto t = gluing::surface_type(gluing::parse_gluing(s));
        if (t.genus != want.genus || t.punctures != want.punctures) l.fail(s);
    }
    int count = 0;
    for (int g = 0; g <= 3; ++g)
        for (int k = 1; k <= 3; ++k) {
            auto s = gluing::sigma_gk(g, k);
            auto t = gluing::surface_type(s);
            ++count;
            if (t.genus != g || t.punctures != k || !(t == gluing::surface_type_by_permutation(s)))
                l.fail("sigma_gk(" + std::to_string(g) + "," + std::to_string(k) + ")");
        }
    l.note << " 3 examples, " << count << " round trips;";
}

void criterion_drinfeld(Line &l) {
    const std::pair<const char *, int> want[] = {{"rep_z2", 4}, {"rep_s3", 8}, {"fibonacci", 4}, {"ising", 9}};
    auto g = gluing::parse_gluing("(1 2)");
    for (const auto &[key, r] : want) {
        int got = rank_of(key, g).rank;
        int oracle = center::annular_center_dim(*built(key).eng);
        l.note << " " << key << "=" << got << "/" << oracle;
        if (got != r || oracle != r) l.fail(key);
    }
    l.note << " (rank/oracle);";
}

void criterion_modular(Line &l) {
    for (const char *key : {"fibonacci", "ising"}) {
        int r = built(key).eng->rank();
        for (const auto &g : adm24()) {
            int k = gluing::surface_type(g).punctures;
            int want = 1;
            for (int i = 0; i < k; ++i) want *= r;
            int got = rank_of(key, g).rank;
            l.note << " " << key << g.to_string() << "=" << got;
            if (got != want) l.fail(std::string(key) + " " + g.to_string());
        }
    }
    if (rank_of("fibonacci", gluing::parse_gluing("(1 3)(2 4)")).rank != 2) l.fail("fibonacci torus");
    l.note << ";";
}

void criterion_muger(Line &l) {
    for (const char *key : {"fibonacci", "ising", "semion", "vec_z3_q"}) {
        auto s = fusion::s_matrix_and_transparency(built(key).eng->cat());
        if (!s.modular || s.transparent != std::vector<int>{built(key).eng->cat().spec().unit}) l.fail(key);
    }
    for (const char *key : {"rep_z2", "rep_s3", "vec_z2"}) {
        auto s = fusion::s_matrix_and_transparency(built(key).eng->cat());
        if (static_cast<int>(s.transparent.size()) != built(key).eng->rank()) l.fail(key);
    }
    l.note << " 4 modular, 3 symmetric;";
}

void criterion_adjunction(Line &l) {
    long gf = 0, fg = 0, idem = 0, func = 0, func_bad = 0;
    std::mt19937_64 rng(20261018);
    for (const auto &key : catalog::builtin_keys()) {
        for (const auto &g : adm24()) {
            const auto &c = center_of(key, g);
            auto adj = center::check_adjunction(c);
            gf += adj.gf.instances;
            fg += adj.fg.instances;
            if (!adj.gf.ok()) l.fail(key + " " + g.to_string() + " G o F");
            if (!adj.fg.ok()) l.fail(key + " " + g.to_string() + " F o G");
            // 40 at n = 1, 20 per gluing at n = 2
            int samples = g.n() == 1 ? 40 : 20;
            auto id = center::check_projection_idempotent(c, samples, rng);
            idem += id.instances;
            if (!id.ok()) l.fail(key + " " + g.to_string() + " idempotence");
            auto fn = center::check_projection_functoriality(c, samples, rng);
            func += fn.instances;
            func_bad += static_cast<long>(fn.violations.size());
            if (!fn.ok()) l.fail(key + " " + g.to_string() + " composition, " + fn.violations.front());
        }
    }
    static_assert(40 + 3 * 20 >= kTriples);
    l.note << " G o F " << gf << ", F o G " << fg << ", idempotent " << idem << ", composition " << func - func_bad << "/"
           << func << " hold;";
}

void criterion_graphical(Line &l) {
    auto keys = catalog::builtin_keys();
    keys.push_back("rep_a4");
    long n = 0;
    for (const auto &key : keys)
        for (const auto &r : diagram::graphical_suite(*built(key).eng)) {
            n += r.instances;
            if (!r.ok()) l.fail(key + " " + r.check);
        }
    l.note << " " << n << " instances over " << keys.size() << " catalogs;";
}

void criterion_kleisli(Line &l) {
    long n = 0;
    int algebras = 0;
    for (const auto &key : catalog::builtin_keys())
        for (const auto &g : adm24()) {
            const auto &a = algebra_of(key, g);
            auto r = center::check_tube_algebra(a);
            n += r.instances;
            ++algebras;
            if (!r.ok()) l.fail(key + " " + g.to_string() + " " + r.violations.front());
            const auto &res = rank_of(key, g);
            int sq = 0;
            for (int d : res.block_dims) sq += d * d;
            if (sq != a.dimension()) l.fail(key + " " + g.to_string() + " split");
        }
    l.note << " " << algebras << " algebras, " << n << " law instances;";
}

void criterion_elliptic(Line &l) {
    auto g = gluing::parse_gluing("(1 3)(2 4)");
    int r = rank_of("rep_z2", g).rank;
    int oracle = center::regular_rep_rank(algebra_of("rep_z2", g));
    l.note << " rank " << r << ", regular representation " << oracle << ";";
    if (r != oracle) l.fail("mismatch");
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        std::function<void(Line &)> run;
        double budget;
    };
    const std::vector<Criterion> all{
        {1, "catalog validation", criterion_catalogs, kBudgetCatalogs},
        {2, "surface classification", criterion_surfaces, kBudgetSurfaces},
        {3, "Drinfeld center ranks", criterion_drinfeld, kBudgetDrinfeld},
        {4, "modular trivialization", criterion_modular, kBudgetModular},
        {5, "Muger transparency", criterion_muger, 0},
        {6, "adjunction suite", criterion_adjunction, 0},
        {7, "graphical calculus", criterion_graphical, kBudgetGraphical},
        {8, "Kleisli algebra laws", criterion_kleisli, 0},
        {9, "elliptic center datum", criterion_elliptic, 0},
    };
    bool unexpected = false;
    for (const auto &c : all) {
        Line l;
        auto t0 = Clock::now();
        try {
            c.run(l);
        } catch (const std::exception &e) {
            l.fail(std::string("exception: ") + e.what());
        }
        double t = since(t0);
        if (c.budget > 0 && t > c.budget) {
            std::ostringstream b;
            b << "runtime " << t << " s over budget " << c.budget << " s";
            l.fail(b.str());
        }
        bool expected = kExpectedFailures.count(c.id) > 0;
        std::cout << (l.ok ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << ":" << l.note.str() << " "
                  << std::fixed;
        std::cout.precision(2);
        std::cout << t << " s" << (!l.ok && expected ? " (expected failure)" : "") << std::endl;
        if (!l.ok && !expected) unexpected = true;
    }
    return unexpected ? 1 : 0;
}
