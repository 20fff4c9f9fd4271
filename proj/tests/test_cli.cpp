// The command-line front end against direct library calls.
#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "genus/catalog/catalog.hpp"
#include "genus/center/center.hpp"

using namespace genus;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json call_json(const std::vector<std::string> &args) {
    Result r = call(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

center::Center make(const std::string &key, const std::string &sigma) {
    auto cat = std::make_shared<fusion::Category>(catalog::resolve(key));
    return center::Center(std::make_shared<diagram::Engine>(cat), gluing::parse_gluing(sigma));
}

}  // namespace

TEST_CASE("gluing subcommands") {
    json c = call_json({"gluing", "classify", "--sigma", "(1 3)(2 4)"});
    CHECK(c["surface"]["g"] == 1);
    CHECK(c["surface"]["k"] == 1);
    CHECK(c["comm"] == json::parse("[[0,2],[2,0]]"));
    json e = call_json({"gluing", "enum", "--n", "2"});
    CHECK(e["count"] == 3);
    CHECK(e["gluings"].size() == 3);
    CHECK(call_json({"gluing", "enum", "--n", "3"})["count"] == 15);
}

TEST_CASE("center rank agrees with the library") {
    json r = call_json({"center", "rank", "--cat", "fibonacci", "--sigma", "(1 2)"});
    CHECK(r["rank"] == 4);
    for (const char *s : {"(1 2)", "(1 3)(2 4)"}) {
        json j = call_json({"center", "rank", "--cat", "semion", "--sigma", s});
        center::TubeAlgebra a(make("semion", s));
        auto lib = center::center_rank(a);
        CHECK(j["rank"] == lib.rank);
        CHECK(j["block_dims"].get<std::vector<int>>() == lib.block_dims);
        CHECK(j["total_dim"] == a.dimension());
        CHECK(j["runtime"].is_null());
    }
    json t = call_json({"center", "rank", "--cat", "vec_z2", "--sigma", "(1 2)", "--timing"});
    CHECK(t["runtime"].is_number());
}

TEST_CASE("output is byte-identical across runs") {
    std::vector<std::string> args{"center", "rank", "--cat", "fibonacci", "--sigma", "(1 3)(2 4)"};
    CHECK(call(args).out == call(args).out);
    std::vector<std::string> v{"--float", "8", "validate", "--cat", "ising"};
    CHECK(call(v).out == call(v).out);
}

TEST_CASE("verify-induced and adjoint check mirror the library") {
    json v = call_json({"center", "verify-induced", "--cat", "fibonacci", "--sigma", "(1 3)(2 4)", "--object", "tau"});
    center::Center c = make("fibonacci", "(1 3)(2 4)");
    auto rep = center::verify_sigma_pair(c, c.induce(diagram::Object{diagram::Word{1}}));
    CHECK(v["report"]["instances"] == rep.instances);
    CHECK(v["report"]["pass"] == true);
    json a = call_json({"adjoint", "check", "--cat", "fibonacci", "--sigma", "(1 2)"});
    auto lib = center::check_adjunction(make("fibonacci", "(1 2)"));
    CHECK(a["gf"]["instances"] == lib.gf.instances);
    CHECK(a["fg"]["instances"] == lib.fg.instances);
    CHECK(a["pass"] == true);
    CHECK(a["dimensions"][0]["hom_C"] == 2);
    CHECK(call({"center", "verify-induced", "--cat", "fibonacci", "--sigma", "(1 2)", "--object", "nope"}).code == 2);
}

TEST_CASE("validate and catalog list") {
    json v = call_json({"--float", "4", "validate", "--cat", "fibonacci"});
    CHECK(v["pass"] == true);
    CHECK(v["modular"] == true);
    CHECK(v["dims"]["tau"]["float"] == "1.6180");
    json l = call_json({"catalog", "list"});
    std::vector<std::string> keys;
    for (const auto &row : l["catalogs"]) keys.push_back(row["key"]);
    for (const auto &k : catalog::builtin_keys()) CHECK(std::find(keys.begin(), keys.end(), k) != keys.end());

    // a broken braiding fails the hexagon and exits 1
    auto spec = catalog::builtin("fibonacci");
    for (auto &[k, val] : *spec.R)
        if (k.a == 1 && k.b == 1 && k.c == 1) val = exact::Cyclotomic(1);
    auto path = std::filesystem::temp_directory_path() / "genus_cli_broken.json";
    catalog::save_spec(spec, path.string());
    Result r = call({"validate", "--cat", path.string()});
    CHECK(r.code == 1);
    CHECK(json::parse(r.out)["pass"] == false);
    std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"gluing", "enum"}).code == 2);
    CHECK(call({"gluing", "enum", "--n", "2", "--bogus"}).code == 2);
    CHECK(call({"center", "rank", "--cat", "nope", "--sigma", "(1 2)"}).code == 2);
    CHECK(call({"gluing", "classify", "--sigma", "(1 1)"}).code == 2);
    CHECK(call({"--format", "xml", "catalog", "list"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}
