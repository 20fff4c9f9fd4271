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

#include "genus/diagram/diagram.hpp"

#include <set>
#include <sstream>

namespace genus::diagram {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Strand parse_strand(const std::string &tok, int line) {
    if (tok.empty()) throw IllFormedDiagram("empty strand reference", line);
    Strand s;
    char last = tok.back();
    if (last == '+' || last == '-') {
        s.name = tok.substr(0, tok.size() - 1);
        s.dual = last == '-';
    } else {
        s.name = tok;
    }
    if (s.name.empty()) throw IllFormedDiagram("empty strand name in '" + tok + "'", line);
    return s;
}

Generator parse_vertex(Generator::Kind kind, const std::string &arg, int line) {
    // A,B>C#k
    Generator g;
    g.kind = kind;
    std::string body = arg;
    size_t hash = body.find('#');
    if (hash != std::string::npos) {
        try {
            g.mu = std::stoi(body.substr(hash + 1));
        } catch (...) {
            throw IllFormedDiagram("bad multiplicity index in '" + arg + "'", line);
        }
        body = body.substr(0, hash);
    }
    size_t comma = body.find(','), gt = body.find('>');
    if (comma == std::string::npos || gt == std::string::npos || gt < comma)
        throw IllFormedDiagram("vertex must look like a,b>c: '" + arg + "'", line);
    g.a = body.substr(0, comma);
    g.b = body.substr(comma + 1, gt - comma - 1);
    g.c = body.substr(gt + 1);
    if (g.a.empty() || g.b.empty() || g.c.empty()) throw IllFormedDiagram("empty label in '" + arg + "'", line);
    return g;
}

Generator parse_token(const std::string &tok, int line) {
    size_t colon = tok.find(':');
    std::string head = tok.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : tok.substr(colon + 1);
    Generator g;
    if (head == "id") {
        g.kind = Generator::Id;
        if (!arg.empty()) g.s = parse_strand(arg, line);
    } else if (head == "x") {
        if (arg == "over")
            g.kind = Generator::Over;
        else if (arg == "under")
            g.kind = Generator::Under;
        else
            throw IllFormedDiagram("crossing must be x:over or x:under, got '" + tok + "'", line);
    } else if (head == "cup" || head == "cap" || head == "twist" || head == "twistinv") {
        g.kind = head == "cup" ? Generator::Cup : head == "cap" ? Generator::Cap
                 : head == "twist" ? Generator::Twist : Generator::TwistInv;
        g.s = parse_strand(arg, line);
    } else if (head == "split") {
        g = parse_vertex(Generator::Split, arg, line);
    } else if (head == "merge") {
        g = parse_vertex(Generator::Merge, arg, line);
    } else if (head == "box") {
        g.kind = Generator::Box;
        g.box = arg;
        if (arg.empty()) throw IllFormedDiagram("box needs a name", line);
    } else {
        throw IllFormedDiagram("unknown generator '" + tok + "'", line);
    }
    return g;
}

int resolve_name(const Engine &eng, const std::string &n, const std::map<std::string, int> &vars) {
    if (!n.empty() && n[0] == '@') {
        auto it = vars.find(n);
        if (it == vars.end()) throw IllFormedDiagram("unassigned omega variable " + n, -1);
        return it->second;
    }
    return eng.cat().spec().label(n);
}

int resolve(const Engine &eng, const Strand &s, const std::map<std::string, int> &vars) {
    int a = resolve_name(eng, s.name, vars);
    return s.dual ? eng.dual(a) : a;
}

Strand flip(Strand s) {
    s.dual = !s.dual;
    return s;
}

void collect_vars(const Diagram &d, std::set<std::string> &all) {
    auto add = [&](const std::string &n) {
        if (!n.empty() && n[0] == '@') all.insert(n);
    };
    for (const auto &s : d.source) add(s.name);
    for (const auto &sl : d.slices)
        for (const auto &g : sl) {
            add(g.s.name);
            add(g.a);
            add(g.b);
            add(g.c);
        }
}

// Symbolic boundary after all slices (for locating boundary variables).
BoundaryWord symbolic_target(const Diagram &d, const Coupons &coupons) {
    BoundaryWord cur = d.source;
    for (size_t si = 0; si < d.slices.size(); ++si) {
        BoundaryWord out;
        size_t pos = 0;
        auto take = [&](size_t k) {
            if (pos + k > cur.size())
                throw IllFormedDiagram("slice " + std::to_string(si) + " consumes more strands than the boundary has",
                                       static_cast<int>(si));
            BoundaryWord w(cur.begin() + static_cast<long>(pos), cur.begin() + static_cast<long>(pos + k));
            pos += k;
            return w;
        };
        for (const auto &g : d.slices[si]) {
            switch (g.kind) {
            case Generator::Id:
            case Generator::Twist:
            case Generator::TwistInv:
                out.push_back(take(1)[0]);
                break;
            case Generator::Over:
            case Generator::Under: {
                auto w = take(2);
                out.push_back(w[1]);
                out.push_back(w[0]);
                break;
            }
            case Generator::Cup:
                out.push_back(g.s);
                out.push_back(flip(g.s));
                break;
            case Generator::Cap:
                take(2);
                break;
            case Generator::Split:
                take(1);
                out.push_back({g.a, false});
                out.push_back({g.b, false});
                break;
            case Generator::Merge:
                take(2);
                out.push_back({g.c, false});
                break;
            case Generator::Box: {
                auto it = coupons.find(g.box);
                if (it == coupons.end())
                    throw IllFormedDiagram("unknown coupon '" + g.box + "' in slice " + std::to_string(si),
                                           static_cast<int>(si));
                take(it->second.src.at(0).size());
                // coupon targets are concrete labels
                out.resize(out.size() + it->second.tgt.at(0).size(), Strand{"", false});
                break;
            }
            }
        }
        if (pos != cur.size())
            throw IllFormedDiagram("slice " + std::to_string(si) + " does not cover the boundary", static_cast<int>(si));
        cur = std::move(out);
    }
    return cur;
}

Morphism embed(const Engine &eng, const Morphism &m, const Object &src, const Object &tgt, int ks, int kt) {
    Morphism out = eng.zero(src, tgt);
    for (int c = 0; c < eng.rank(); ++c) {
        int ro = eng.summand_offset(tgt, kt, c), co = eng.summand_offset(src, ks, c);
        for (int i = 0; i < m.blocks[c].rows(); ++i)
            for (int j = 0; j < m.blocks[c].cols(); ++j) out.blocks[c](ro + i, co + j) = m.blocks[c](i, j);
    }
    return out;
}

Morphism eval_with(const Engine &eng, const Diagram &d, const Coupons &coupons, const std::map<std::string, int> &vars) {
    Word cur = resolve_word(eng, d.source, vars);
    Morphism acc = eng.identity({cur});
    for (size_t si = 0; si < d.slices.size(); ++si) {
        int sidx = static_cast<int>(si);
        auto fail = [&](const std::string &msg) {
            throw IllFormedDiagram("slice " + std::to_string(si) + ": " + msg, sidx);
        };
        Word done;
        size_t pos = 0;
        auto take = [&](size_t k) {
            if (pos + k > cur.size()) fail("consumes more strands than the boundary has");
            Word w(cur.begin() + static_cast<long>(pos), cur.begin() + static_cast<long>(pos + k));
            pos += k;
            return w;
        };
        auto rest = [&]() { return Word(cur.begin() + static_cast<long>(pos), cur.end()); };
        auto apply = [&](const Morphism &g, const Word &produced) {
            Morphism placed = eng.place(done, g, rest());
            acc = eng.compose(placed, acc);
            done.insert(done.end(), produced.begin(), produced.end());
        };
        auto expect = [&](int have, int want, const std::string &what) {
            if (have != want)
                fail(what + " expects " + eng.cat().name(want) + " but the boundary has " + eng.cat().name(have));
        };
        for (const auto &g : d.slices[si]) {
            switch (g.kind) {
            case Generator::Id: {
                Word w = take(1);
                if (!g.s.name.empty()) expect(w[0], resolve(eng, g.s, vars), "id");
                done.push_back(w[0]);
                break;
            }
            case Generator::Over: {
                Word w = take(2);
                apply(eng.braid(w[0], w[1]), {w[1], w[0]});
                break;
            }
            case Generator::Under: {
                Word w = take(2);
                apply(eng.braid_inv(w[1], w[0]), {w[1], w[0]});
                break;
            }
            case Generator::Cup: {
                int a = resolve_name(eng, g.s.name, vars);
                if (g.s.dual)
                    apply(eng.coev_r(a), {eng.dual(a), a});
                else
                    apply(eng.coev(a), {a, eng.dual(a)});
                break;
            }
            case Generator::Cap: {
                int a = resolve_name(eng, g.s.name, vars);
                Word w = take(2);
                if (g.s.dual) {
                    expect(w[0], eng.dual(a), "cap");
                    expect(w[1], a, "cap");
                    apply(eng.ev(a), {});
                } else {
                    expect(w[0], a, "cap");
                    expect(w[1], eng.dual(a), "cap");
                    apply(eng.ev_r(a), {});
                }
                break;
            }
            case Generator::Twist:
            case Generator::TwistInv: {
                Word w = take(1);
                expect(w[0], resolve(eng, g.s, vars), "twist");
                pos -= 1;
                Word r = Word(cur.begin() + static_cast<long>(pos + 1), cur.end());
                Morphism placed = eng.place(done, eng.twist(w[0], g.kind == Generator::TwistInv), r);
                acc = eng.compose(placed, acc);
                pos += 1;
                done.push_back(w[0]);
                break;
            }
            case Generator::Split: {
                int a = resolve_name(eng, g.a, vars), b = resolve_name(eng, g.b, vars), c = resolve_name(eng, g.c, vars);
                Word w = take(1);
                expect(w[0], c, "split");
                if (g.mu < 0 || g.mu >= eng.cat().N(a, b, c)) fail("no such vertex " + g.a + "," + g.b + ">" + g.c);
                apply(eng.split(a, b, c, g.mu), {a, b});
                break;
            }
            case Generator::Merge: {
                int a = resolve_name(eng, g.a, vars), b = resolve_name(eng, g.b, vars), c = resolve_name(eng, g.c, vars);
                Word w = take(2);
                expect(w[0], a, "merge");
                expect(w[1], b, "merge");
                if (g.mu < 0 || g.mu >= eng.cat().N(a, b, c)) fail("no such vertex " + g.a + "," + g.b + ">" + g.c);
                pos -= 2;
                Word r = Word(cur.begin() + static_cast<long>(pos + 2), cur.end());
                Morphism placed = eng.place(done, eng.merge(a, b, c, g.mu), r);
                acc = eng.compose(placed, acc);
                pos += 2;
                done.push_back(c);
                break;
            }
            case Generator::Box: {
                auto it = coupons.find(g.box);
                if (it == coupons.end()) fail("unknown coupon '" + g.box + "'");
                const Morphism &m = it->second;
                if (m.src.size() != 1 || m.tgt.size() != 1) fail("coupon '" + g.box + "' must map one word to one word");
                Word w = take(m.src[0].size());
                if (w != m.src[0]) fail("coupon '" + g.box + "' source " + eng.word_string(m.src[0]) + " does not match boundary " + eng.word_string(w));
                pos -= w.size();
                Word r = Word(cur.begin() + static_cast<long>(pos + w.size()), cur.end());
                Morphism placed = eng.place(done, m, r);
                acc = eng.compose(placed, acc);
                pos += w.size();
                done.insert(done.end(), m.tgt[0].begin(), m.tgt[0].end());
                break;
            }
            }
        }
        if (pos != cur.size()) fail("does not cover the boundary");
        cur = done;
    }
    return acc;
}

}  // namespace

Diagram parse_diagram(const std::string &text) {
    Diagram d;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    int slice = 0;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (first && t.rfind("source:", 0) == 0) {
            std::istringstream ss(t.substr(7));
            std::string tok;
            while (ss >> tok) d.source.push_back(parse_strand(tok, -1));
            first = false;
            continue;
        }
        first = false;
        std::istringstream ss(t);
        std::string tok;
        std::vector<Generator> gens;
        while (ss >> tok) gens.push_back(parse_token(tok, slice));
        d.slices.push_back(std::move(gens));
        ++slice;
    }
    return d;
}

Diagram stack(const Diagram &d1, const Diagram &d2) {
    Diagram d = d1;
    d.slices.insert(d.slices.end(), d2.slices.begin(), d2.slices.end());
    return d;
}

Word resolve_word(const Engine &eng, const BoundaryWord &w, const std::map<std::string, int> &vars) {
    Word out;
    for (const auto &s : w) out.push_back(resolve(eng, s, vars));
    return out;
}

Morphism eval_diagram(const Engine &eng, const Diagram &d, const Coupons &coupons) {
    return eval_with(eng, d, coupons, {});
}

Morphism omega_expand(const Engine &eng, const Diagram &d, const Coupons &coupons) {
    std::set<std::string> vars;
    collect_vars(d, vars);
    if (vars.empty()) throw InvalidArgument("omega_expand: diagram has no omega variable");
    std::set<std::string> bvars;
    for (const auto &s : d.source)
        if (s.name[0] == '@') bvars.insert(s.name);
    for (const auto &s : symbolic_target(d, coupons))
        if (!s.name.empty() && s.name[0] == '@') bvars.insert(s.name);
    std::vector<std::string> vlist(vars.begin(), vars.end());
    std::vector<std::string> blist(bvars.begin(), bvars.end());
    int r = eng.rank();
    std::vector<Cyclotomic> dims(r);
    for (int a = 0; a < r; ++a) dims[a] = eng.loop(a);
    // boundary assignments in lexicographic order
    std::vector<std::map<std::string, int>> bassign{{}};
    for (const auto &v : blist) {
        std::vector<std::map<std::string, int>> next;
        for (const auto &m : bassign)
            for (int a = 0; a < r; ++a) {
                auto n = m;
                n[v] = a;
                next.push_back(n);
            }
        bassign = std::move(next);
    }
    Object src, tgt;
    std::vector<Morphism> parts(bassign.size());
    std::vector<bool> have(bassign.size(), false);
    std::vector<std::map<std::string, int>> all{{}};
    for (const auto &v : vlist) {
        std::vector<std::map<std::string, int>> next;
        for (const auto &m : all)
            for (int a = 0; a < r; ++a) {
                auto n = m;
                n[v] = a;
                next.push_back(n);
            }
        all = std::move(next);
    }
    for (const auto &asg : all) {
        Cyclotomic w(1);
        for (const auto &[v, a] : asg) w *= dims[a];
        std::map<std::string, int> b;
        for (const auto &v : blist) b[v] = asg.at(v);
        size_t k = 0;
        while (bassign[k] != b) ++k;
        Morphism m = w * eval_with(eng, d, coupons, asg);
        if (!have[k]) {
            parts[k] = m;
            have[k] = true;
        } else {
            parts[k] += m;
        }
    }
    for (size_t k = 0; k < parts.size(); ++k) {
        src.push_back(parts[k].src.at(0));
        tgt.push_back(parts[k].tgt.at(0));
    }
    if (parts.size() == 1) return parts[0];
    Morphism out = eng.zero(src, tgt);
    for (size_t k = 0; k < parts.size(); ++k) out += embed(eng, parts[k], src, tgt, static_cast<int>(k), static_cast<int>(k));
    return out;
}

HomBasis hom_basis(const Engine &eng, const Object &source, const Object &target) {
    HomBasis hb{source, target, {}};
    for (int c = 0; c < eng.rank(); ++c) {
        int nt = eng.basis_size(target, c), ns = eng.basis_size(source, c);
        for (int i = 0; i < nt; ++i)
            for (int j = 0; j < ns; ++j) hb.elements.push_back({c, i, j});
    }
    return hb;
}

Cyclotomic hom_pairing(const Engine &eng, const Morphism &f, const Morphism &g) {
    if (f.tgt != g.src || g.tgt != f.src) throw DimensionMismatch("hom_pairing: incompatible morphisms");
    return eng.trace(eng.compose(g, f));
}

DualBasis dual_basis(const Engine &eng, const Object &x, const Object &y) {
    DualBasis db;
    int n = eng.hom_dim(x, y);
    for (int k = 0; k < n; ++k) db.basis.push_back(eng.basis_element(x, y, k));
    std::vector<Morphism> other;
    for (int k = 0; k < n; ++k) other.push_back(eng.basis_element(y, x, k));
    ExactMatrix G(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) = hom_pairing(eng, db.basis[i], other[j]);
    ExactMatrix C;
    try {
        C = exact::inverse(G.transpose());
    } catch (const SingularMatrix &) {
        throw InternalInconsistency("degenerate Gram matrix for Hom pairing; category data is inconsistent");
    }
    for (int i = 0; i < n; ++i) {
        Morphism m = eng.zero(y, x);
        for (int j = 0; j < n; ++j)
            if (!C(i, j).is_zero()) m += C(i, j) * other[j];
        db.dual.push_back(std::move(m));
    }
    return db;
}

}  // namespace genus::diagram
