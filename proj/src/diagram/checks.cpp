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

#include "genus/diagram/checks.hpp"

namespace genus::diagram {

namespace {

using fusion::Report;

Morphism run(const Engine &e, const std::string &text) { return eval_diagram(e, parse_diagram(text)); }

std::string pair_tag(const Engine &e, int a, int b) { return e.cat().name(a) + " " + e.cat().name(b); }

}  // namespace

Report check_reidemeister2(const Engine &e) {
    Report rep{"Reidemeister II", {}, 0};
    for (int a = 0; a < e.rank(); ++a)
        for (int b = 0; b < e.rank(); ++b) {
            std::string src = "source: " + pair_tag(e, a, b) + "\n";
            Morphism id = e.identity({{a, b}});
            for (const char *moves : {"x:over\nx:under\n", "x:under\nx:over\n"}) {
                ++rep.instances;
                if (run(e, src + moves) != id) rep.violations.push_back(pair_tag(e, a, b));
            }
        }
    return rep;
}

Report check_zigzag(const Engine &e) {
    Report rep{"zig-zag", {}, 0};
    for (int i = 0; i < e.rank(); ++i) {
        const std::string a = e.cat().name(i);
        Morphism id = e.identity({{i}}), idd = e.identity({{e.dual(i)}});
        const std::pair<std::string, const Morphism *> cases[] = {
            {"source: " + a + "\ncup:" + a + " id\nid cap:" + a + "-\n", &id},
            {"source: " + a + "\nid cup:" + a + "-\ncap:" + a + " id\n", &id},
            {"source: " + a + "-\nid cup:" + a + "\ncap:" + a + "- id\n", &idd},
            {"source: " + a + "-\ncup:" + a + "- id\nid cap:" + a + "\n", &idd},
        };
        for (const auto &[text, want] : cases) {
            ++rep.instances;
            if (run(e, text) != *want) rep.violations.push_back(a);
        }
    }
    return rep;
}

Report check_twist_multiplicativity(const Engine &e) {
    Report rep{"twist multiplicativity", {}, 0};
    for (int a = 0; a < e.rank(); ++a)
        for (int b = 0; b < e.rank(); ++b) {
            std::string src = "source: " + pair_tag(e, a, b) + "\n";
            Morphism lhs = run(e, src + "x:over\nx:over\ntwist:" + e.cat().name(a) + " twist:" + e.cat().name(b) + "\n");
            // theta on a (x) b, assembled channel by channel
            Morphism rhs = e.zero({{a, b}}, {{a, b}});
            for (int c : e.cat().channels(a, b))
                for (int m = 0; m < e.cat().N(a, b, c); ++m)
                    rhs += e.compose(e.split(a, b, c, m), e.compose(e.twist(c), e.merge(a, b, c, m)));
            ++rep.instances;
            if (lhs != rhs) rep.violations.push_back(pair_tag(e, a, b));
        }
    return rep;
}

Report check_sphericality(const Engine &e) {
    Report rep{"sphericality", {}, 0};
    for (int a = 0; a < e.rank(); ++a)
        for (int b = 0; b < e.rank(); ++b) {
            const Object x{{a, b}};
            const std::string A = e.cat().name(a), B = e.cat().name(b);
            for (int k = 0; k < e.hom_dim(x, x); ++k) {
                Coupons cs{{"f", e.basis_element(x, x, k)}};
                auto right = e.scalar(eval_diagram(
                    e, parse_diagram("source:\ncup:" + A + "\nid cup:" + B + " id\nbox:f id id\nid cap:" + B + " id\ncap:" + A + "\n"),
                    cs));
                auto left = e.scalar(eval_diagram(
                    e, parse_diagram("source:\ncup:" + B + "-\nid cup:" + A + "- id\nid id box:f\nid cap:" + A + "- id\ncap:" + B + "-\n"),
                    cs));
                ++rep.instances;
                if (left != right) rep.violations.push_back(pair_tag(e, a, b) + " basis " + std::to_string(k));
            }
        }
    return rep;
}

Report check_omega_completeness(const Engine &e) {
    Report rep{"Omega completeness", {}, 0};
    std::vector<Word> words;
    for (int a = 0; a < e.rank(); ++a) words.push_back({a});
    for (int a = 0; a < e.rank(); ++a)
        for (int b = 0; b < e.rank(); ++b) words.push_back({a, b});
    const int t = e.rank() - 1;
    words.push_back({t, t, t});
    for (const auto &w : words) {
        Morphism sum = e.zero({w}, {w});
        for (int i = 0; i < e.rank(); ++i) {
            DualBasis db = dual_basis(e, {w}, {{i}});
            for (size_t l = 0; l < db.basis.size(); ++l) sum += e.loop(i) * e.compose(db.dual[l], db.basis[l]);
        }
        ++rep.instances;
        if (sum != e.identity({w})) {
            std::string tag;
            for (int x : w) tag += (tag.empty() ? "" : " ") + e.cat().name(x);
            rep.violations.push_back(tag);
        }
    }
    return rep;
}

Report check_sliding(const Engine &e) {
    Report rep{"sliding", {}, 0};
    for (int a = 0; a < e.rank(); ++a)
        for (int b = 0; b < e.rank(); ++b) {
            std::string head = "source: " + pair_tag(e, a, b) + "\nid id cup:@1\nid x:over id\nid id x:under\nid cap:@1 id\n";
            ++rep.instances;
            if (omega_expand(e, parse_diagram(head + "x:over\n")) != omega_expand(e, parse_diagram(head + "x:under\n")))
                rep.violations.push_back(pair_tag(e, a, b));
        }
    return rep;
}

std::vector<Report> graphical_suite(const Engine &e) {
    std::vector<Report> out{check_zigzag(e), check_sphericality(e), check_omega_completeness(e)};
    if (e.cat().braided()) {
        out.push_back(check_reidemeister2(e));
        out.push_back(check_twist_multiplicativity(e));
        out.push_back(check_sliding(e));
    }
    return out;
}

}  // namespace genus::diagram
