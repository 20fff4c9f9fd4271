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

#ifndef GENUS_DIAGRAM_DIAGRAM_HPP
#define GENUS_DIAGRAM_DIAGRAM_HPP

#include <map>
#include <string>
#include <vector>

#include "genus/diagram/engine.hpp"

namespace genus::diagram {

/// Boundary point: a label name (or an omega variable "@k") with orientation.
struct Strand {
    std::string name;
    bool dual = false;  // orientation -
    bool operator==(const Strand &o) const { return name == o.name && dual == o.dual; }
};

using BoundaryWord = std::vector<Strand>;

struct Generator {
    enum Kind { Id, Over, Under, Cup, Cap, Split, Merge, Twist, TwistInv, Box };
    Kind kind = Id;
    Strand s;                      // id / cup / cap / twist strand (empty name for a bare id)
    std::string a, b, c;           // split / merge labels
    int mu = 0;                    // split / merge multiplicity index
    std::string box;               // coupon name
};

/// Horizontal slices read top to bottom; each slice covers the full boundary.
/// Grammar: see docs/diagram-format.md.
struct Diagram {
    BoundaryWord source;
    std::vector<std::vector<Generator>> slices;
};

Diagram parse_diagram(const std::string &text);
/// Vertical concatenation: d1 first, then d2.
Diagram stack(const Diagram &d1, const Diagram &d2);

using Coupons = std::map<std::string, Morphism>;

/// Exact value of a diagram without omega variables. Throws IllFormedDiagram
/// (with the slice index) when a slice does not match the current boundary.
Morphism eval_diagram(const Engine &eng, const Diagram &d, const Coupons &coupons = {});
/// Sum over simple labels for every omega variable, weighted by the product of
/// their dimensions. Variables on the outer boundary produce a formal sum over
/// their values, ordered lexicographically by variable name.
Morphism omega_expand(const Engine &eng, const Diagram &d, const Coupons &coupons = {});

/// Boundary word of a diagram as simple labels (no omega variables).
Word resolve_word(const Engine &eng, const BoundaryWord &w, const std::map<std::string, int> &vars = {});

/// Basis element of Hom(source, target): total charge c, target tree, source tree.
struct HomElement {
    int c, tgt, src;
};

struct HomBasis {
    Object source, target;
    std::vector<HomElement> elements;
    int size() const { return static_cast<int>(elements.size()); }
};

HomBasis hom_basis(const Engine &eng, const Object &source, const Object &target);

/// Tr(g o f) for f: X -> Y, g: Y -> X.
Cyclotomic hom_pairing(const Engine &eng, const Morphism &f, const Morphism &g);

struct DualBasis {
    std::vector<Morphism> basis;  // phi_i in Hom(X, Y)
    std::vector<Morphism> dual;   // phi^i in Hom(Y, X), pairing(phi_i, phi^j) = delta_ij
};

/// Throws InternalInconsistency when the Gram matrix is degenerate.
DualBasis dual_basis(const Engine &eng, const Object &x, const Object &y);

}  // namespace genus::diagram

#endif
