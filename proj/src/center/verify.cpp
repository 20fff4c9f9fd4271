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

#include "genus/center/center.hpp"

#include "genus/error.hpp"

namespace genus::center {

namespace {

Object single(int a) { return Object{Word{a}}; }

std::string orbit_name(const gluing::OrbitInfo &o) { return "[" + std::to_string(o.low) + "]"; }

}  // namespace

fusion::Report check_commutation(const Center &c, const SigmaPair &p) {
    const Engine &e = c.engine();
    fusion::Report rep{"commutation of orbit half-braidings", {}, 0};
    const Object &X = p.carrier;
    const int r = e.rank();
    for (int i = 0; i < c.n(); ++i)
        for (int j = i + 1; j < c.n(); ++j) {
            const int cs = gluing::comm_case(c.sigma(), c.orbits()[i], c.orbits()[j]);
            for (int z1 = 0; z1 < r; ++z1)
                for (int z2 = 0; z2 < r; ++z2) {
                    Morphism gi = p.braidings[i].blocks[z1];
                    if (cs == 1)
                        gi = e.compose(e.braid_objects(single(z1), X),
                                       e.compose(e.braid_objects(X, single(z1)), gi));
                    const Morphism &gj = p.braidings[j].blocks[z2];
                    Morphism lhs = e.compose(e.whisker_right(gj, single(z1)), e.whisker_left(single(z2), gi));
                    Morphism rhs = e.whisker_right(e.braid_inv(z1, z2), X);
                    rhs = e.compose(e.whisker_left(single(z1), gj), rhs);
                    rhs = e.compose(e.whisker_right(gi, single(z2)), rhs);
                    rhs = e.compose(e.whisker_left(X, cs == 2 ? e.braid_inv(z2, z1) : e.braid(z1, z2)), rhs);
                    ++rep.instances;
                    if (lhs != rhs)
                        rep.violations.push_back("case " + std::to_string(cs) + " " + orbit_name(c.orbits()[i]) + "," +
                                                 orbit_name(c.orbits()[j]) + " Z1=" + e.cat().name(z1) +
                                                 " Z2=" + e.cat().name(z2));
                }
        }
    return rep;
}

fusion::Report verify_sigma_pair(const Center &c, const SigmaPair &p) {
    const Engine &e = c.engine();
    fusion::Report rep{"sigma pair", {}, 0};
    const Object &X = p.carrier;
    const int r = e.rank();
    if (static_cast<int>(p.braidings.size()) != c.n()) {
        rep.violations.push_back("expected one half-braiding per orbit");
        return rep;
    }
    for (int k = 0; k < c.n(); ++k) {
        const std::string on = orbit_name(c.orbits()[k]);
        const auto &g = p.braidings[k].blocks;
        if (static_cast<int>(g.size()) != r) {
            rep.violations.push_back(on + ": expected one block per simple");
            continue;
        }
        ++rep.instances;
        for (int b = 0; b < r; ++b)
            if (!g[e.unit()].blocks[b].is_identity()) {
                rep.violations.push_back(on + ": unit component is not the identity");
                break;
            }
        for (int z = 0; z < r; ++z) {
            ++rep.instances;
            try {
                (void)e.inverse(g[z]);
            } catch (const Error &) {
                rep.violations.push_back(on + ": component " + e.cat().name(z) + " is not invertible");
            }
        }
        for (int z1 = 0; z1 < r; ++z1)
            for (int z2 = 0; z2 < r; ++z2)
                for (int w : e.cat().channels(z1, z2))
                    for (int mu = 0; mu < e.cat().N(z1, z2, w); ++mu) {
                        Morphism v = e.split(z1, z2, w, mu);
                        Morphism lhs = e.whisker_right(v, X);
                        lhs = e.compose(e.whisker_left(single(z1), g[z2]), lhs);
                        lhs = e.compose(e.whisker_right(g[z1], single(z2)), lhs);
                        Morphism rhs = e.compose(e.whisker_left(X, v), g[w]);
                        ++rep.instances;
                        if (lhs != rhs)
                            rep.violations.push_back(on + ": fusion compatibility fails for " + e.cat().name(z1) + " " +
                                                     e.cat().name(z2) + " -> " + e.cat().name(w));
                    }
    }
    auto cm = check_commutation(c, p);
    rep.instances += cm.instances;
    rep.violations.insert(rep.violations.end(), cm.violations.begin(), cm.violations.end());
    return rep;
}

}  // namespace genus::center
