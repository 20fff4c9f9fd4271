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

#include "genus/catalog/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace genus::catalog {

using nlohmann::json;
namespace fs = std::filesystem;

const std::vector<std::string> &builtin_keys() {
    static const std::vector<std::string> keys{"vec_z2", "vec_z3_q", "rep_z2", "rep_s3", "fibonacci", "ising", "semion"};
    return keys;
}

std::vector<std::string> search_path() {
    std::vector<std::string> out;
    if (const char *env = std::getenv("GENUSCENTER_CATALOG_DIR")) {
        std::stringstream ss(env);
        std::string item;
        while (std::getline(ss, item, ':'))
            if (!item.empty()) out.push_back(item);
    }
    out.push_back(GENUS_CATALOG_DIR);
    return out;
}

CategorySpec builtin(const std::string &key) {
    for (const auto &k : builtin_keys())
        if (k == key) return load_spec(std::string(GENUS_CATALOG_DIR) + "/" + key + ".json");
    std::string avail;
    for (const auto &k : builtin_keys()) avail += (avail.empty() ? "" : ", ") + k;
    throw KeyNotFound("unknown catalog key '" + key + "'; available: " + avail);
}

CategorySpec resolve(const std::string &key) {
    for (const auto &dir : search_path()) {
        fs::path p = fs::path(dir) / (key + ".json");
        if (fs::exists(p)) return load_spec(p.string());
    }
    if (fs::exists(key) && fs::is_regular_file(key)) return load_spec(key);
    return builtin(key);
}

namespace {

mpz_class to_mpz(const json &j, const std::string &where) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError(where + ": not an integer string");
        return z;
    }
    throw ParseError(where + ": expected an integer");
}

json from_mpz(const mpz_class &z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

const json &field(const json &j, const std::string &key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing mandatory field '" + key + "'");
    return j.at(key);
}

int label_index(const CategorySpec &s, const json &j, const std::string &where) {
    if (!j.is_string()) throw ParseError(where + ": expected a label name");
    // unknown labels are kept as -1 for the structural validator
    return s.find(j.get<std::string>());
}

std::vector<int> mult(const json &rec, size_t n, const std::string &where) {
    std::vector<int> m(n, 0);
    if (!rec.contains("mult")) return m;
    const json &a = rec.at("mult");
    if (!a.is_array() || a.size() != n) throw ParseError(where + ".mult: expected " + std::to_string(n) + " integers");
    for (size_t i = 0; i < n; ++i) {
        if (!a[i].is_number_integer()) throw ParseError(where + ".mult: expected integers");
        m[i] = a[i].get<int>();
    }
    return m;
}

}  // namespace

json cyclotomic_to_json(const exact::Cyclotomic &c) {
    json terms = json::array();
    for (const auto &[e, n, d] : c.terms()) terms.push_back(json::array({e, from_mpz(n), from_mpz(d)}));
    return json{{"order", c.order()}, {"terms", terms}};
}

exact::Cyclotomic cyclotomic_from_json(const json &j, const std::string &where) {
    if (j.is_number_integer()) return exact::Cyclotomic(exact::Cyclotomic::from_terms(1, {{0, to_mpz(j, where), 1}}));
    const json &o = field(j, "order", where);
    if (!o.is_number_integer() || o.get<long long>() < 1)
        throw ParseError(where + ".order: must be a positive integer");
    const json &t = field(j, "terms", where);
    if (!t.is_array()) throw ParseError(where + ".terms: expected an array");
    std::vector<exact::RawTerm> raw;
    for (size_t i = 0; i < t.size(); ++i) {
        std::string w = where + ".terms[" + std::to_string(i) + "]";
        if (!t[i].is_array() || t[i].size() != 3) throw ParseError(w + ": expected [exponent, numerator, denominator]");
        if (!t[i][0].is_number_integer()) throw ParseError(w + ": exponent must be an integer");
        exact::RawTerm rt{t[i][0].get<long>(), to_mpz(t[i][1], w), to_mpz(t[i][2], w)};
        if (rt.denominator == 0) throw ParseError(w + ": zero denominator");
        raw.push_back(rt);
    }
    return exact::Cyclotomic::from_terms(o.get<int>(), raw);
}

CategorySpec spec_from_json(const json &j) {
    CategorySpec s;
    const std::string top = "category";
    const json &name = field(j, "name", top);
    if (!name.is_string()) throw ParseError("name: expected a string");
    s.name = name.get<std::string>();
    const json &labels = field(j, "labels", top);
    if (!labels.is_array() || labels.empty()) throw ParseError("labels: expected a non-empty array");
    for (const auto &l : labels) {
        if (!l.is_string()) throw ParseError("labels: expected strings");
        s.labels.push_back(l.get<std::string>());
    }
    int r = s.rank();
    s.unit = label_index(s, field(j, "unit", top), "unit");
    if (s.unit < 0) throw ParseError("unit: unknown label");
    const json &dual = field(j, "dual", top);
    if (!dual.is_object()) throw ParseError("dual: expected an object label -> label");
    s.dual.assign(r, -1);
    for (auto it = dual.begin(); it != dual.end(); ++it) {
        int a = s.find(it.key());
        if (a < 0) throw ParseError("dual: unknown label '" + it.key() + "'");
        s.dual[a] = label_index(s, it.value(), "dual." + it.key());
    }
    for (int a = 0; a < r; ++a)
        if (s.dual[a] < 0) throw ParseError("dual: no entry for label '" + s.labels[a] + "'");
    for (int a = 0; a < r; ++a)
        if (s.dual[s.dual[a]] != a) throw ParseError("dual: table is not an involution at '" + s.labels[a] + "'");
    s.fusion.assign(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
    const json &fus = field(j, "fusion", top);
    if (!fus.is_array()) throw ParseError("fusion: expected an array of [a, b, c, N]");
    for (size_t i = 0; i < fus.size(); ++i) {
        std::string w = "fusion[" + std::to_string(i) + "]";
        const json &e = fus[i];
        if (!e.is_array() || e.size() != 4 || !e[3].is_number_integer())
            throw ParseError(w + ": expected [a, b, c, N]");
        int a = label_index(s, e[0], w), b = label_index(s, e[1], w), c = label_index(s, e[2], w);
        if (a < 0 || b < 0 || c < 0) throw ParseError(w + ": unknown label");
        s.fusion[a][b][c] = e[3].get<int>();
    }
    const json &F = field(j, "F", top);
    if (!F.is_array()) throw ParseError("F: expected an array of records");
    for (size_t i = 0; i < F.size(); ++i) {
        std::string w = "F[" + std::to_string(i) + "]";
        const json &rec = F[i];
        const json &idx = field(rec, "index", w);
        if (!idx.is_array() || idx.size() != 6) throw ParseError(w + ".index: expected [a, b, c, d, e, f]");
        int v[6];
        for (int k = 0; k < 6; ++k) v[k] = label_index(s, idx[k], w + ".index");
        auto m = mult(rec, 4, w);
        fusion::FKey key{v[0], v[1], v[2], v[3], v[4], v[5], m[0], m[1], m[2], m[3]};
        s.F[key] = cyclotomic_from_json(field(rec, "value", w), w + ".value");
    }
    if (j.contains("R") && !j.at("R").is_null()) {
        const json &R = j.at("R");
        if (!R.is_array()) throw ParseError("R: expected an array of records");
        s.R.emplace();
        for (size_t i = 0; i < R.size(); ++i) {
            std::string w = "R[" + std::to_string(i) + "]";
            const json &rec = R[i];
            const json &idx = field(rec, "index", w);
            if (!idx.is_array() || idx.size() != 3) throw ParseError(w + ".index: expected [a, b, c]");
            int v[3];
            for (int k = 0; k < 3; ++k) v[k] = label_index(s, idx[k], w + ".index");
            auto m = mult(rec, 2, w);
            (*s.R)[fusion::RKey{v[0], v[1], v[2], m[0], m[1]}] = cyclotomic_from_json(field(rec, "value", w), w + ".value");
        }
    }
    const json &piv = field(j, "pivotal", top);
    if (!piv.is_object()) throw ParseError("pivotal: expected an object label -> value");
    s.pivotal.assign(r, exact::Cyclotomic());
    std::vector<bool> have(r, false);
    for (auto it = piv.begin(); it != piv.end(); ++it) {
        int a = s.find(it.key());
        if (a < 0) throw ParseError("pivotal: unknown label '" + it.key() + "'");
        s.pivotal[a] = cyclotomic_from_json(it.value(), "pivotal." + it.key());
        have[a] = true;
    }
    for (int a = 0; a < r; ++a)
        if (!have[a]) throw ParseError("pivotal: no entry for label '" + s.labels[a] + "'");
    if (j.contains("provenance") && j.at("provenance").is_string()) s.provenance = j.at("provenance").get<std::string>();
    return s;
}

json spec_to_json(const CategorySpec &s) {
    auto n = [&](int i) -> json { return (i >= 0 && i < s.rank()) ? json(s.labels[i]) : json("?"); };
    json j;
    j["name"] = s.name;
    j["labels"] = s.labels;
    j["unit"] = n(s.unit);
    json dual = json::object();
    for (int a = 0; a < s.rank(); ++a) dual[s.labels[a]] = n(s.dual[a]);
    j["dual"] = dual;
    json fus = json::array();
    for (int a = 0; a < s.rank(); ++a)
        for (int b = 0; b < s.rank(); ++b)
            for (int c = 0; c < s.rank(); ++c)
                if (s.fusion[a][b][c] != 0) fus.push_back(json::array({n(a), n(b), n(c), s.fusion[a][b][c]}));
    j["fusion"] = fus;
    json F = json::array();
    for (const auto &[k, v] : s.F) {
        json rec{{"index", json::array({n(k.a), n(k.b), n(k.c), n(k.d), n(k.e), n(k.f)})}};
        if (k.alpha || k.beta || k.mu || k.nu) rec["mult"] = json::array({k.alpha, k.beta, k.mu, k.nu});
        rec["value"] = cyclotomic_to_json(v);
        F.push_back(rec);
    }
    j["F"] = F;
    if (s.R) {
        json R = json::array();
        for (const auto &[k, v] : *s.R) {
            json rec{{"index", json::array({n(k.a), n(k.b), n(k.c)})}};
            if (k.mu || k.nu) rec["mult"] = json::array({k.mu, k.nu});
            rec["value"] = cyclotomic_to_json(v);
            R.push_back(rec);
        }
        j["R"] = R;
    }
    json piv = json::object();
    for (int a = 0; a < s.rank() && a < static_cast<int>(s.pivotal.size()); ++a)
        piv[s.labels[a]] = cyclotomic_to_json(s.pivotal[a]);
    j["pivotal"] = piv;
    j["provenance"] = s.provenance;
    return j;
}

CategorySpec load_spec(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        size_t pos = std::min<size_t>(e.byte, text.size());
        long line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n');
        throw ParseError(path + ":" + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
    }
    try {
        return spec_from_json(j);
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.what());
    } catch (const Error &e) {
        throw ParseError(path + ": " + e.what());
    } catch (const json::exception &e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_spec(const CategorySpec &spec, const std::string &path) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot write");
    out << spec_to_json(spec).dump(1) << "\n";
}

}  // namespace genus::catalog
