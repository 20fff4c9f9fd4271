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

#include "genus/gluing/gluing.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "genus/error.hpp"

namespace genus::gluing {

Gluing Gluing::from_pairs(int n, const std::vector<std::pair<int, int>> &pairs) {
    if (n < 0) throw InvalidArgument("gluing rank must be nonnegative");
    if (static_cast<int>(pairs.size()) != n)
        throw InvalidArgument("gluing of rank " + std::to_string(n) + " needs " + std::to_string(n) + " pairs");
    Gluing g;
    g.image_.assign(2 * n, 0);
    for (auto [a, b] : pairs) {
        if (a < 1 || b < 1 || a > 2 * n || b > 2 * n)
            throw InvalidArgument("point " + std::to_string(a < 1 || a > 2 * n ? a : b) + " outside 1.." + std::to_string(2 * n));
        if (a == b) throw InvalidArgument("fixed point " + std::to_string(a));
        if (g.image_[a - 1] || g.image_[b - 1])
            throw InvalidArgument("point " + std::to_string(g.image_[a - 1] ? a : b) + " appears twice");
        g.image_[a - 1] = b;
        g.image_[b - 1] = a;
    }
    return g;
}

int Gluing::operator()(int i) const {
    if (i < 1 || i > static_cast<int>(image_.size()))
        throw InvalidArgument("index " + std::to_string(i) + " outside 1.." + std::to_string(image_.size()));
    return image_[i - 1];
}

std::vector<std::pair<int, int>> Gluing::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= static_cast<int>(image_.size()); ++i)
        if (i < image_[i - 1]) out.emplace_back(i, image_[i - 1]);
    return out;
}

std::string Gluing::to_string() const {
    if (image_.empty()) return "()";
    std::string s;
    for (auto [a, b] : pairs()) s += "(" + std::to_string(a) + " " + std::to_string(b) + ")";
    return s;
}

nlohmann::json Gluing::to_json() const {
    nlohmann::json p = nlohmann::json::array();
    for (auto [a, b] : pairs()) p.push_back({a, b});
    return {{"n", n()}, {"pairs", p}};
}

Gluing parse_gluing(const std::string &text) {
    std::vector<std::pair<int, int>> pairs;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '(' at position " + std::to_string(i) + " in \"" + text + "\"");
        size_t close = text.find(')', i);
        if (close == std::string::npos) throw ParseError("unclosed cycle in \"" + text + "\"");
        std::string body = text.substr(i + 1, close - i - 1);
        std::vector<std::string> toks;
        std::string cur;
        for (char c : body) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
                if (!cur.empty()) toks.push_back(cur);
                cur.clear();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                cur += c;
            } else {
                throw ParseError(std::string("unexpected character '") + c + "' in \"" + text + "\"");
            }
        }
        if (!cur.empty()) toks.push_back(cur);
        if (toks.size() == 1 && toks[0].size() == 2) toks = {toks[0].substr(0, 1), toks[0].substr(1)};
        if (toks.empty() && body.find_first_not_of(" \t") == std::string::npos && text.find_first_not_of(" \t()") == std::string::npos)
            return Gluing::from_pairs(0, {});
        if (toks.size() == 1) throw ParseError("fixed point " + toks[0] + " in \"" + text + "\": gluings have no fixed points");
        if (toks.size() != 2)
            throw ParseError("cycle (" + body + ") has length " + std::to_string(toks.size()) + ": a gluing is an involution");
        pairs.emplace_back(std::stoi(toks[0]), std::stoi(toks[1]));
        i = close + 1;
        skip();
    }
    int n = static_cast<int>(pairs.size());
    std::set<int> seen;
    for (auto [a, b] : pairs) {
        seen.insert(a);
        seen.insert(b);
    }
    if (static_cast<int>(seen.size()) != 2 * n || (n && (*seen.begin() != 1 || *seen.rbegin() != 2 * n)))
        throw ParseError("cycles of \"" + text + "\" do not partition 1.." + std::to_string(2 * n) +
                         " (missing points would be fixed points, repeated points break the involution)");
    return Gluing::from_pairs(n, pairs);
}

Gluing gluing_from_json(const nlohmann::json &j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> pairs;
        for (const auto &p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        return Gluing::from_pairs(n, pairs);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("gluing JSON: ") + e.what());
    } catch (const InvalidArgument &e) {
        throw ParseError(std::string("gluing JSON: ") + e.what());
    }
}

namespace {

void enumerate_rec(std::vector<int> &img, std::vector<Gluing> &out, int n) {
    auto it = std::find(img.begin(), img.end(), 0);
    if (it == img.end()) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= 2 * n; ++i)
            if (i < img[i - 1]) pairs.emplace_back(i, img[i - 1]);
        out.push_back(Gluing::from_pairs(n, pairs));
        return;
    }
    int a = static_cast<int>(it - img.begin()) + 1;
    for (int b = a + 1; b <= 2 * n; ++b) {
        if (img[b - 1]) continue;
        img[a - 1] = b;
        img[b - 1] = a;
        enumerate_rec(img, out, n);
        img[a - 1] = img[b - 1] = 0;
    }
}

}  // namespace

std::vector<Gluing> enumerate_adm(int n) {
    if (n < 0) throw InvalidArgument("gluing rank must be nonnegative");
    std::vector<int> img(2 * n, 0);
    std::vector<Gluing> out;
    enumerate_rec(img, out, n);
    std::sort(out.begin(), out.end());
    return out;
}

OrbitInfo orbit_info(const Gluing &s, int i) {
    int j = s(i);
    return {std::min(i, j), std::max(i, j)};
}

std::vector<OrbitInfo> orbits(const Gluing &s) {
    std::vector<OrbitInfo> out;
    for (auto [a, b] : s.pairs()) out.push_back({a, b});
    return out;
}

int comm_case(const Gluing &s, const OrbitInfo &a, const OrbitInfo &b) {
    for (const auto &o : {a, b})
        if (orbit_info(s, o.low) != o) throw InvalidArgument("not an orbit of " + s.to_string());
    if (a == b) throw InvalidArgument("comm_case needs two distinct orbits");
    OrbitInfo i = a, j = b;
    if (j.low < i.low) std::swap(i, j);
    if (i.high < j.low) return 1;
    if (j.high < i.high) return 3;
    return 2;
}

Gluing sigma_gk(int g, int k) {
    if (g < 0 || k < 1) throw InvalidArgument("sigma_gk needs g >= 0 and k >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int h = 0; h < g; ++h) {
        int b = 4 * h;
        pairs.emplace_back(b + 1, b + 3);
        pairs.emplace_back(b + 2, b + 4);
    }
    for (int p = 0; p < k - 1; ++p) pairs.emplace_back(4 * g + 2 * p + 1, 4 * g + 2 * p + 2);
    return Gluing::from_pairs(static_cast<int>(pairs.size()), pairs);
}

namespace {

// Union-find over polygon corners.
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

SurfaceType from_chi(int chi, int k) {
    SurfaceType t;
    t.euler = chi;
    t.punctures = k;
    t.genus = (2 - chi - k) / 2;
    return t;
}

}  // namespace

SurfaceType surface_type(const Gluing &s) {
    int n = s.n();
    if (n == 0) return {0, 1, 1};
    int m = 2 * n;
    // Leg i runs from corner start(i) = 2(i-1) to end(i) = 2(i-1)+1, gap i
    // from end(i) to start(i+1).
    auto start = [&](int i) { return 2 * (i - 1); };
    auto end = [&](int i) { return 2 * (i - 1) + 1; };
    Dsu d(2 * m);
    for (int i = 1; i <= m; ++i) {
        d.unite(start(i), end(s(i)));
        d.unite(end(i), start(s(i)));
    }
    std::set<int> verts;
    for (int c = 0; c < 2 * m; ++c) verts.insert(d.find(c));
    int V = static_cast<int>(verts.size());
    int E = n + m;  // glued legs plus gaps
    int chi = V - E + 1;
    // Gap sides form a graph on the vertices; each component is a boundary circle.
    Dsu b(2 * m);
    for (int i = 1; i <= m; ++i) b.unite(d.find(end(i)), d.find(start(i % m + 1)));
    std::set<int> circles;
    for (int v : verts) circles.insert(b.find(v));
    return from_chi(chi, static_cast<int>(circles.size()));
}

SurfaceType surface_type_by_permutation(const Gluing &s) {
    int n = s.n();
    if (n == 0) return {0, 1, 1};
    int m = 2 * n;
    std::vector<bool> seen(m + 1, false);
    int k = 0;
    for (int i = 1; i <= m; ++i) {
        if (seen[i]) continue;
        ++k;
        for (int j = i; !seen[j]; j = s(j % m + 1)) seen[j] = true;
    }
    return from_chi(1 - n, k);
}

}  // namespace genus::gluing
