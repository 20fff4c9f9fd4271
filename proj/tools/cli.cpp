#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "genus/catalog/catalog.hpp"
#include "genus/center/center.hpp"
#include "genus/error.hpp"
#include "genus/fusion/derived.hpp"
#include "genus/gluing/gluing.hpp"

namespace genus::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "json";
    int float_digits = -1;
    bool timing = false;
};

json scalar(const exact::Cyclotomic &c, const Options &o) {
    json j = catalog::cyclotomic_to_json(c);
    if (o.float_digits >= 0) {
        auto z = c.to_complex();
        std::ostringstream s;
        s << std::setprecision(o.float_digits) << std::fixed << z.real();
        if (std::abs(z.imag()) > 1e-12) s << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
        j["float"] = s.str();
    }
    return j;
}

json report_json(const fusion::Report &r) {
    return json{{"check", r.check}, {"instances", r.instances}, {"violations", r.violations}, {"pass", r.ok()}};
}

json surface_json(const gluing::SurfaceType &t) {
    return json{{"g", t.genus}, {"k", t.punctures}, {"euler", t.euler}};
}

struct Loaded {
    std::shared_ptr<const fusion::Category> cat;
    diagram::EnginePtr eng;
};

Loaded load(const std::string &key) {
    auto cat = std::make_shared<const fusion::Category>(catalog::resolve(key));
    return {cat, std::make_shared<const diagram::Engine>(cat)};
}

// Text mode: one "key: value" line per member, rows of arrays on their own lines.
void print_text(const json &j, std::ostream &out, const std::string &indent = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json &v = it.value();
        if (v.is_object()) {
            out << indent << it.key() << ":\n";
            print_text(v, out, indent + "  ");
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << indent << it.key() << ":\n";
            for (const auto &row : v) out << indent << "  " << row.dump() << "\n";
        } else if (v.is_string()) {
            out << indent << it.key() << ": " << v.get<std::string>() << "\n";
        } else {
            out << indent << it.key() << ": " << v.dump() << "\n";
        }
    }
}

void emit(const json &j, const Options &o, std::ostream &out) {
    if (o.format == "text")
        print_text(j, out);
    else
        out << j.dump(2) << "\n";
}

int cmd_validate(const std::string &key, const Options &o, std::ostream &out) {
    Loaded l = load(key);
    const auto &cat = *l.cat;
    std::vector<fusion::Report> reps{fusion::validate_structure(cat.spec()), fusion::check_pentagon(cat)};
    if (cat.braided()) reps.push_back(fusion::check_hexagon(cat));
    reps.push_back(fusion::check_spherical_ribbon(cat));
    json checks = json::array();
    bool ok = true;
    for (const auto &r : reps) {
        checks.push_back(report_json(r));
        ok = ok && r.ok();
    }
    auto q = fusion::quantum_dims(cat);
    json dims = json::object();
    for (int a = 0; a < cat.rank(); ++a) dims[cat.name(a)] = scalar(q.omega.weights[a], o);
    json j{{"catalog", cat.spec().name}, {"labels", cat.spec().labels}, {"checks", checks}, {"dims", dims},
           {"dim_omega", scalar(q.omega.total, o)}};
    if (cat.braided()) {
        auto s = fusion::s_matrix_and_transparency(cat);
        json tr = json::array();
        for (int t : s.transparent) tr.push_back(cat.name(t));
        j["transparent"] = tr;
        j["modular"] = s.modular;
    }
    j["pass"] = ok;
    emit(j, o, out);
    return ok ? 0 : 1;
}

int cmd_gluing_enum(int n, const Options &o, std::ostream &out) {
    if (n < 0) throw InvalidArgument("--n must be nonnegative");
    json rows = json::array();
    for (const auto &g : gluing::enumerate_adm(n))
        rows.push_back(json{{"sigma", g.to_string()}, {"surface", surface_json(gluing::surface_type(g))}});
    emit(json{{"n", n}, {"count", rows.size()}, {"gluings", rows}}, o, out);
    return 0;
}

int cmd_gluing_classify(const std::string &text, const Options &o, std::ostream &out) {
    gluing::Gluing g = gluing::parse_gluing(text);
    auto orb = gluing::orbits(g);
    json orbits = json::array(), comm = json::array();
    for (const auto &a : orb) {
        orbits.push_back(json::array({a.low, a.high}));
        json row = json::array();
        for (const auto &b : orb) row.push_back(a == b ? 0 : gluing::comm_case(g, a, b));
        comm.push_back(row);
    }
    emit(json{{"sigma", g.to_string()}, {"n", g.n()}, {"surface", surface_json(gluing::surface_type(g))}, {"orbits", orbits},
              {"comm", comm}},
         o, out);
    return 0;
}

int cmd_center_rank(const std::string &key, const std::string &text, const Options &o, std::ostream &out) {
    auto t0 = std::chrono::steady_clock::now();
    Loaded l = load(key);
    center::Center c(l.eng, gluing::parse_gluing(text));
    center::TubeAlgebra a(c);
    center::RankResult r = center::center_rank(a);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json j{{"catalog", l.cat->spec().name},
           {"sigma", c.sigma().to_string()},
           {"surface", surface_json(gluing::surface_type(c.sigma()))},
           {"rank", r.rank},
           {"block_dims", r.block_dims},
           {"total_dim", r.total_dim},
           {"field_order", r.field_order},
           {"runtime", o.timing ? json(secs) : json(nullptr)}};
    emit(j, o, out);
    return 0;
}

int cmd_verify_induced(const std::string &key, const std::string &text, const std::string &object, const Options &o,
                       std::ostream &out) {
    Loaded l = load(key);
    center::Center c(l.eng, gluing::parse_gluing(text));
    int x = l.cat->spec().label(object);
    center::SigmaPair p = c.induce(diagram::Object{diagram::Word{x}});
    center::FormalObject fx{std::vector<int>(l.cat->rank(), 0)};
    fx.mult[x] = 1;
    json mult = json::object();
    auto m = center::induce_object(c, fx).mult;
    for (int b = 0; b < l.cat->rank(); ++b) mult[l.cat->name(b)] = m[b];
    auto rep = center::verify_sigma_pair(c, p);
    emit(json{{"catalog", l.cat->spec().name},
              {"sigma", c.sigma().to_string()},
              {"object", object},
              {"carrier", mult},
              {"report", report_json(rep)}},
         o, out);
    return rep.ok() ? 0 : 1;
}

int cmd_adjoint(const std::string &key, const std::string &text, const Options &o, std::ostream &out) {
    Loaded l = load(key);
    center::Center c(l.eng, gluing::parse_gluing(text));
    auto adj = center::check_adjunction(c);
    json table = json::array();
    bool dims_ok = true;
    std::vector<center::SigmaPair> ind;
    for (int a = 0; a < l.eng->rank(); ++a) ind.push_back(c.induce(diagram::Object{diagram::Word{a}}));
    for (int i = 0; i < l.eng->rank(); ++i)
        for (int j = 0; j < l.eng->rank(); ++j) {
            int hc = l.eng->hom_dim(diagram::Object{diagram::Word{i}}, ind[j].carrier);
            int hz = center::hom_Z_dim(c, ind[i], ind[j]);
            dims_ok = dims_ok && hc == hz;
            table.push_back(json{{"i", l.cat->name(i)}, {"j", l.cat->name(j)}, {"hom_C", hc}, {"hom_Z", hz}});
        }
    bool ok = adj.gf.ok() && adj.fg.ok() && dims_ok;
    emit(json{{"catalog", l.cat->spec().name},
              {"sigma", c.sigma().to_string()},
              {"gf", report_json(adj.gf)},
              {"fg", report_json(adj.fg)},
              {"dimensions", table},
              {"pass", ok}},
         o, out);
    return ok ? 0 : 1;
}

int cmd_catalog_list(const Options &o, std::ostream &out) {
    json rows = json::array();
    auto row = [&](const std::string &key, const std::string &source) {
        auto spec = catalog::resolve(source);
        rows.push_back(json{{"key", key}, {"source", source}, {"rank", spec.rank()}, {"braided", spec.braided()}});
    };
    for (const auto &k : catalog::builtin_keys()) row(k, k);
    for (const auto &dir : catalog::search_path()) {
        std::error_code ec;
        std::vector<std::filesystem::path> files;
        for (const auto &ent : std::filesystem::directory_iterator(dir, ec))
            if (ent.path().extension() == ".json") files.push_back(ent.path());
        std::sort(files.begin(), files.end());
        for (const auto &f : files) {
            std::string stem = f.stem().string();
            bool builtin = std::find(catalog::builtin_keys().begin(), catalog::builtin_keys().end(), stem) !=
                           catalog::builtin_keys().end();
            if (!builtin) row(stem, f.string());
        }
    }
    emit(json{{"catalogs", rows}}, o, out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Centers of higher genera for skeletal premodular categories", "genuscenter"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Options o;
    app.add_option("--format", o.format, "Output mode")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--float", o.float_digits, "Add decimal renderings with this many digits")->check(CLI::Range(0, 30));

    std::string cat, sigma, object;
    int n = 0;
    auto *validate = app.add_subcommand("validate", "Axiom checks for one catalog");
    validate->add_option("--cat", cat, "Catalog key or path")->required();

    auto *gl = app.add_subcommand("gluing", "Admissible gluings")->require_subcommand(1);
    auto *gl_enum = gl->add_subcommand("enum", "All gluings of rank n with their surfaces");
    gl_enum->add_option("--n", n)->required();
    auto *gl_cls = gl->add_subcommand("classify", "Surface, orbits and commutation cases");
    gl_cls->add_option("--sigma", sigma, "Cycle notation")->required();

    auto *ctr = app.add_subcommand("center", "Twisted center")->require_subcommand(1);
    auto *rank = ctr->add_subcommand("rank", "Rank and block sizes of the tube algebra");
    rank->add_option("--cat", cat)->required();
    rank->add_option("--sigma", sigma)->required();
    rank->add_flag("--timing", o.timing, "Fill in the runtime field (breaks byte-identical output)");
    auto *vi = ctr->add_subcommand("verify-induced", "Check the induced sigma-pair on one simple");
    vi->add_option("--cat", cat)->required();
    vi->add_option("--sigma", sigma)->required();
    vi->add_option("--object", object, "Simple label")->required();

    auto *adj = app.add_subcommand("adjoint", "Adjunction identities")->require_subcommand(1);
    auto *adj_check = adj->add_subcommand("check", "G o F and F o G identities with the dimension table");
    adj_check->add_option("--cat", cat)->required();
    adj_check->add_option("--sigma", sigma)->required();

    auto *cl = app.add_subcommand("catalog", "Bundled catalogs")->require_subcommand(1);
    auto *cl_list = cl->add_subcommand("list", "Builtin keys and files on the search path");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate) return cmd_validate(cat, o, out);
        if (*gl_enum) return cmd_gluing_enum(n, o, out);
        if (*gl_cls) return cmd_gluing_classify(sigma, o, out);
        if (*rank) return cmd_center_rank(cat, sigma, o, out);
        if (*vi) return cmd_verify_induced(cat, sigma, object, o, out);
        if (*adj_check) return cmd_adjoint(cat, sigma, o, out);
        if (*cl_list) return cmd_catalog_list(o, out);
    } catch (const InvalidArgument &e) {
        err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const KeyNotFound &e) {
        err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const ParseError &e) {
        err << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const NonSplit &e) {
        err << json{{"error", "non-split"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const Error &e) {
        err << json{{"error", "computation"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace genus::cli
