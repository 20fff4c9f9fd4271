// Text diagrams: parsing, isotopy moves, Omega colouring, Hom bases and the
// trace pairing.
#include <doctest.h>

#include <random>
#include <sstream>

#include "genus/catalog/catalog.hpp"
#include "genus/diagram/checks.hpp"
#include "genus/diagram/diagram.hpp"
#include "genus/error.hpp"
#include "genus/fusion/derived.hpp"

using namespace genus;
using namespace genus::diagram;
using exact::Cyclotomic;

namespace {

EnginePtr engine_for(const std::string &key) {
    auto cat = std::make_shared<const Category>(catalog::resolve(key));
    return std::make_shared<const Engine>(cat);
}

Morphism ev(const Engine &e, const std::string &text, const Coupons &c = {}) {
    return eval_diagram(e, parse_diagram(text), c);
}

Cyclotomic golden() { return Cyclotomic(0) - Cyclotomic::zeta(5, 2) - Cyclotomic::zeta(5, 3); }

std::vector<std::string> braided_keys() {
    std::vector<std::string> out;
    for (const auto &k : catalog::builtin_keys())
        if (catalog::builtin(k).braided()) out.push_back(k);
    out.push_back("rep_a4");
    return out;
}

Morphism random_morphism(const Engine &e, const Object &src, const Object &tgt, std::mt19937 &rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Cyclotomic> v(e.hom_dim(src, tgt));
    for (auto &x : v) x = Cyclotomic(coef(rng)) + Cyclotomic(coef(rng)) * Cyclotomic::zeta(3, 1);
    return e.from_vector(src, tgt, v);
}

// One random slice over the boundary w; updates w.
std::string random_slice(const Engine &e, Word &w, std::mt19937 &rng) {
    const auto &cat = e.cat();
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    std::ostringstream s;
    Word out;
    size_t i = 0;
    bool any = false;
    while (i < w.size() || (!any && w.empty())) {
        int choice = pick(8);
        int a = i < w.size() ? w[i] : -1;
        int b = i + 1 < w.size() ? w[i + 1] : -1;
        if (w.size() < 4 && choice == 0) {
            int x = pick(e.rank());
            s << "cup:" << cat.name(x) << (pick(2) ? "-" : "") << " ";
            std::string last = s.str();
            bool dual = last[last.size() - 2] == '-';
            if (dual) {
                out.push_back(e.dual(x));
                out.push_back(x);
            } else {
                out.push_back(x);
                out.push_back(e.dual(x));
            }
            any = true;
            continue;
        }
        if (a < 0) break;
        if (b >= 0 && choice == 1 && b == e.dual(a)) {
            s << "cap:" << cat.name(a) << " ";
            i += 2;
        } else if (b >= 0 && choice == 2 && cat.spec().braided()) {
            s << (pick(2) ? "x:over " : "x:under ");
            out.push_back(b);
            out.push_back(a);
            i += 2;
        } else if (b >= 0 && choice == 3) {
            const auto &ch = cat.channels(a, b);
            int c = ch[pick(static_cast<int>(ch.size()))];
            s << "merge:" << cat.name(a) << "," << cat.name(b) << ">" << cat.name(c) << "#" << pick(cat.N(a, b, c)) << " ";
            out.push_back(c);
            i += 2;
        } else if (choice == 4 && w.size() < 4) {
            std::vector<std::pair<int, int>> opts;
            for (int x = 0; x < e.rank(); ++x)
                for (int y = 0; y < e.rank(); ++y)
                    if (cat.N(x, y, a) > 0) opts.emplace_back(x, y);
            auto [x, y] = opts[pick(static_cast<int>(opts.size()))];
            s << "split:" << cat.name(x) << "," << cat.name(y) << ">" << cat.name(a) << "#" << pick(cat.N(x, y, a)) << " ";
            out.push_back(x);
            out.push_back(y);
            i += 1;
        } else if (choice == 5 && cat.spec().braided()) {
            s << (pick(2) ? "twist:" : "twistinv:") << cat.name(a) << " ";
            out.push_back(a);
            i += 1;
        } else {
            s << "id:" << cat.name(a) << " ";
            out.push_back(a);
            i += 1;
        }
        any = true;
    }
    w = out;
    return s.str();
}

}  // namespace

TEST_CASE("parser and error reporting") {
    auto fib = engine_for("fibonacci");
    Diagram d = parse_diagram("# comment\nsource: tau tau\nx:over\n\nx:under\n");
    CHECK(d.source.size() == 2);
    CHECK(d.slices.size() == 2);
    CHECK_THROWS_AS(parse_diagram("source: tau\nfrobnicate:tau\n"), IllFormedDiagram);

    try {
        ev(*fib, "source: tau\nid:tau\ncap:tau\n");
        FAIL("expected an ill-formed diagram");
    } catch (const IllFormedDiagram &err) {
        CHECK(err.slice_index == 1);
    }
    try {
        ev(*fib, "source: tau tau\nid:tau id:tau id:tau\n");
        FAIL("expected an ill-formed diagram");
    } catch (const IllFormedDiagram &err) {
        CHECK(err.slice_index == 0);
    }
    CHECK_THROWS_AS(ev(*fib, "source: tau\nid:1\n"), IllFormedDiagram);
    CHECK_THROWS_AS(ev(*fib, "source: tau tau\nid\n"), IllFormedDiagram);
}

TEST_CASE("crossing followed by its inverse is the identity") {
    auto fib = engine_for("fibonacci");
    Morphism m = ev(*fib, "source: tau tau\nx:over\nx:under\n");
    CHECK(m == fib->identity({{1, 1}}));
    for (const auto &key : braided_keys()) {
        auto eng = engine_for(key);
        const auto &labels = eng->cat().spec().labels;
        for (const auto &a : labels)
            for (const auto &b : labels) {
                std::string src = "source: " + a + " " + b + "\n";
                Word w = {eng->cat().spec().label(a), eng->cat().spec().label(b)};
                CHECK(ev(*eng, src + "x:under\nx:over\n") == eng->identity({w}));
                CHECK(ev(*eng, src + "x:over\nx:under\n") == eng->identity({w}));
            }
    }
}

TEST_CASE("zig-zags through the text format") {
    for (const auto &key : catalog::builtin_keys()) {
        auto eng = engine_for(key);
        for (const auto &a : eng->cat().spec().labels) {
            CAPTURE(key);
            CAPTURE(a);
            int ai = eng->cat().spec().label(a);
            Morphism id = eng->identity({{ai}});
            CHECK(ev(*eng, "source: " + a + "\ncup:" + a + " id\nid cap:" + a + "-\n") == id);
            CHECK(ev(*eng, "source: " + a + "\nid cup:" + a + "-\ncap:" + a + " id\n") == id);
            Morphism idd = eng->identity({{eng->dual(ai)}});
            CHECK(ev(*eng, "source: " + a + "-\nid cup:" + a + "\ncap:" + a + "- id\n") == idd);
            CHECK(ev(*eng, "source: " + a + "-\ncup:" + a + "- id\nid cap:" + a + "\n") == idd);
        }
    }
}

TEST_CASE("closed twist loop matches the twist scalar") {
    auto fib = engine_for("fibonacci");
    auto q = fusion::quantum_dims(fib->cat());
    Morphism loop = ev(*fib, "source:\ncup:tau\ntwist:tau id\ncap:tau\n");
    Cyclotomic value = fib->scalar(loop);
    CHECK(value == q.twists[1] * golden());
    CHECK(value / q.omega.weights[1] == Cyclotomic::zeta(5, 2));
    Morphism inv = ev(*fib, "source:\ncup:tau\ntwistinv:tau id\ncap:tau\n");
    CHECK(fib->scalar(inv) == q.twists[1].inverse() * golden());
}

TEST_CASE("twist of a tensor product on every channel") {
    for (const auto &key : braided_keys()) {
        auto eng = engine_for(key);
        const Engine &e = *eng;
        for (int a = 0; a < e.rank(); ++a)
            for (int b = 0; b < e.rank(); ++b)
                for (int c : e.cat().channels(a, b))
                    for (int m = 0; m < e.cat().N(a, b, c); ++m) {
                        Morphism tw = e.compose(e.place({}, e.twist(a), {b}), e.place({a}, e.twist(b), {}));
                        Morphism dbl = e.compose(e.braid(b, a), e.braid(a, b));
                        Morphism lhs = e.compose(e.merge(a, b, c, m), e.compose(tw, e.compose(dbl, e.split(a, b, c, m))));
                        CHECK(lhs == e.twist(c));
                    }
    }
}

TEST_CASE("left and right traces agree on random coupons") {
    std::mt19937 rng(7);
    for (const auto &key : std::vector<std::string>{"fibonacci", "ising", "rep_s3", "vec_z3_q", "rep_a4"}) {
        auto eng = engine_for(key);
        const Engine &e = *eng;
        const auto &L = e.cat().spec().labels;
        for (int trial = 0; trial < 4; ++trial) {
            int a = std::uniform_int_distribution<int>(0, e.rank() - 1)(rng);
            int b = std::uniform_int_distribution<int>(0, e.rank() - 1)(rng);
            Morphism f = random_morphism(e, {{a, b}}, {{a, b}}, rng);
            Coupons cs{{"f", f}};
            std::string A = L[a], B = L[b];
            Morphism right = ev(e, "source:\ncup:" + A + "\nid cup:" + B + " id\nbox:f id id\nid cap:" + B + " id\ncap:" + A + "\n", cs);
            Morphism left = ev(e, "source:\ncup:" + B + "-\nid cup:" + A + "- id\nid id box:f\nid cap:" + A + "- id\ncap:" + B + "-\n", cs);
            CHECK(e.scalar(right) == e.scalar(left));
            CHECK(e.scalar(right) == e.trace(f));
        }
    }
}

TEST_CASE("Omega loops") {
    for (const auto &key : braided_keys()) {
        auto eng = engine_for(key);
        auto q = fusion::quantum_dims(eng->cat());
        Morphism loop = omega_expand(*eng, parse_diagram("source:\ncup:@1\ncap:@1\n"));
        CHECK(eng->scalar(loop) == q.omega.total);
    }
    // An Omega loop around a transparent strand only contributes dim(Omega).
    auto rep = engine_for("rep_z2");
    std::string encircle = "source: sgn\nid cup:@1\nx:over id\nid x:under\ncap:@1 id\n";
    Morphism with = omega_expand(*rep, parse_diagram(encircle));
    CHECK(with == Cyclotomic(2) * rep->identity({{1}}));
    // Around a non-transparent simple the loop kills the strand.
    auto fib = engine_for("fibonacci");
    std::string around_tau = "source: tau\nid cup:@1\nx:over id\nid x:under\ncap:@1 id\n";
    CHECK(omega_expand(*fib, parse_diagram(around_tau)).is_zero());
    // Boundary variables give a formal sum.
    Morphism strands = omega_expand(*fib, parse_diagram("source: @1\ntwist:@1\n"));
    CHECK(strands.src == Object{{0}, {1}});
    CHECK(strands.blocks[1](0, 0) == golden() * Cyclotomic::zeta(5, 2));
}

TEST_CASE("sliding: an Omega-encircled strand is transparent") {
    for (const auto &key : braided_keys()) {
        auto eng = engine_for(key);
        const auto &L = eng->cat().spec().labels;
        for (const auto &x : L)
            for (const auto &y : L) {
                CAPTURE(key);
                CAPTURE(x);
                CAPTURE(y);
                std::string head = "source: " + x + " " + y + "\nid id cup:@1\nid x:over id\nid id x:under\nid cap:@1 id\n";
                Morphism over = omega_expand(*eng, parse_diagram(head + "x:over\n"));
                Morphism under = omega_expand(*eng, parse_diagram(head + "x:under\n"));
                CHECK(over == under);
            }
    }
}

TEST_CASE("Omega completeness") {
    for (const auto &key : std::vector<std::string>{"fibonacci", "ising", "rep_s3", "vec_z3_q", "rep_a4"}) {
        auto eng = engine_for(key);
        const Engine &e = *eng;
        std::vector<Word> words;
        for (int a = 0; a < e.rank(); ++a) words.push_back({a});
        words.push_back({e.rank() - 1, e.rank() - 1});
        words.push_back({1, e.rank() - 1, 1});
        for (const auto &w : words) {
            Morphism sum = e.zero({w}, {w});
            for (int i = 0; i < e.rank(); ++i) {
                DualBasis db = dual_basis(e, {w}, {{i}});
                for (size_t l = 0; l < db.basis.size(); ++l)
                    sum += e.loop(i) * e.compose(db.dual[l], db.basis[l]);
            }
            CHECK(sum == e.identity({w}));
        }
    }
}

TEST_CASE("stacking is composition") {
    std::mt19937 rng(11);
    for (const auto &key : std::vector<std::string>{"fibonacci", "ising", "rep_s3", "vec_z3_q", "semion"}) {
        auto eng = engine_for(key);
        const Engine &e = *eng;
        for (int trial = 0; trial < 12; ++trial) {
            Word w{std::uniform_int_distribution<int>(0, e.rank() - 1)(rng), std::uniform_int_distribution<int>(0, e.rank() - 1)(rng)};
            std::string src = "source:";
            for (int x : w) src += " " + e.cat().name(x);
            Word cur = w;
            std::string s1 = random_slice(e, cur, rng);
            std::string s2 = random_slice(e, cur, rng);
            std::string d1 = src + "\n" + s1 + "\n" + s2 + "\n";
            std::string d2 = "source:";
            for (int x : cur) d2 += " " + e.cat().name(x);
            d2 += "\n" + random_slice(e, cur, rng) + "\n";
            Diagram p1 = parse_diagram(d1), p2 = parse_diagram(d2);
            CHECK(eval_diagram(e, stack(p1, p2)) == e.compose(eval_diagram(e, p2), eval_diagram(e, p1)));
        }
    }
}

TEST_CASE("Hom bases, pairing and dual bases") {
    auto fib = engine_for("fibonacci");
    CHECK(hom_basis(*fib, {{}}, {{1, 1}}).size() == 1);
    CHECK(hom_basis(*fib, {{1}}, {{1, 1, 1}}).size() == 2);
    for (const auto &key : catalog::builtin_keys()) {
        auto e = engine_for(key);
        CHECK(hom_basis(*e, {{}}, {{}}).size() == 1);
        CHECK(hom_pairing(*e, e->identity({{}}), e->identity({{}})) == Cyclotomic(1));
    }
    CHECK(hom_pairing(*fib, fib->identity({{1}}), fib->identity({{1}})) == golden());

    DualBasis db = dual_basis(*fib, {{1, 1}}, {{1, 1}});
    REQUIRE(db.basis.size() == 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            CHECK(hom_pairing(*fib, db.basis[i], db.dual[j]) == Cyclotomic(i == j ? 1 : 0));

    std::mt19937 rng(3);
    auto ising = engine_for("ising");
    Object x{{1, 1}}, y{{1, 1}};
    DualBasis di = dual_basis(*ising, x, y);
    for (size_t i = 0; i < di.basis.size(); ++i)
        for (size_t j = 0; j < di.basis.size(); ++j)
            CHECK(hom_pairing(*ising, di.basis[i], di.dual[j]) == Cyclotomic(i == j ? 1 : 0));
}

TEST_CASE("graphical suite on every catalog") {
    auto keys = catalog::builtin_keys();
    keys.push_back("rep_a4");
    for (const auto &key : keys) {
        auto eng = engine_for(key);
        for (const auto &r : graphical_suite(*eng)) {
            CHECK_MESSAGE(r.ok(), key << " " << r.check << ": " << (r.ok() ? "" : r.violations[0]));
            CHECK(r.instances > 0);
        }
    }
}
