#include "solidus/birational.hpp"
#include "solidus/invariants.hpp"
#include "solidus/netlab.hpp"
#include "solidus/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace solidus;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t seed = 0;
    std::string format = "json";
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

MatrixGroup resolve_group(const std::string& spec)
{
    if (is_file(spec))
        return group_closure(parse_group_descriptor(read_json_file(spec)), 10000, spec);
    if (!catalog_has({Kind::group, spec}))
        throw UsageError("unknown group: " + spec);
    return load_group(spec);
}

const LiftedGroup& resolve_lifted(const std::string& spec, LiftedGroup& storage)
{
    if (is_file(spec)) {
        storage = lift_projective(parse_group_descriptor(read_json_file(spec)), spec);
        return storage;
    }
    static const std::set<std::string> special{"H_hat", "G_hat", "G_96_227_hat", "G_144_184_hat", "trivial"};
    if (!special.count(spec) && !catalog_has({Kind::group, spec}))
        throw UsageError("unknown group: " + spec);
    return lifted_group(spec);
}

std::vector<CycNum> parse_list(const std::string& text, std::size_t n)
{
    std::vector<CycNum> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_scalar(item));
    if (out.size() != n)
        throw UsageError("expected " + std::to_string(n) + " comma-separated values, got '" + text + "'");
    return out;
}

int emit(const json& j, const Options& o, bool ok = true)
{
    if (o.format == "md")
        std::cout << "```json\n" << j.dump(2) << "\n```\n";
    else
        std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int emit_report(const VerificationReport& r, const Options& o, bool timings)
{
    if (o.format == "md")
        std::cout << r.to_markdown(timings);
    else
        std::cout << r.to_json(timings).dump(2) << "\n";
    return r.passed() ? 0 : 1;
}

CatalogKey parse_key(const std::string& text)
{
    auto pos = text.find(':');
    if (pos != std::string::npos) {
        CatalogKey k{parse_kind(text.substr(0, pos)), text.substr(pos + 1)};
        if (!catalog_has(k))
            throw UsageError("unknown catalog key: " + text);
        return k;
    }
    for (const auto& k : catalog_keys())
        if (k.name == text)
            return k;
    throw UsageError("unknown catalog key: " + text);
}

// ---------------------------------------------------------------- subcommands

int cmd_catalog_list(const std::string& kind, const Options& o)
{
    json j = json::array();
    std::optional<Kind> filter;
    if (!kind.empty()) {
        try {
            filter = parse_kind(kind);
        } catch (const std::exception&) {
            throw UsageError("unknown kind: " + kind);
        }
    }
    for (const auto& k : catalog_keys())
        if (!filter || k.kind == *filter)
            j.push_back(k.str());
    return emit(j, o);
}

int cmd_catalog_check(bool corrupt, const Options& o)
{
    SelfCheckOptions opt;
    opt.corrupt_generator = corrupt;
    auto r = catalog_selfcheck(opt);
    return emit(r.to_json(), o, r.failures() == 0);
}

int cmd_group(const std::string& spec, const Options& o)
{
    MatrixGroup g = resolve_group(spec);
    json j{{"group", spec}, {"order", g.order()}, {"fingerprint", fingerprint(g).to_json()}};
    std::vector<ProjPoint> base{ProjPoint::parse("1,0,0,0"), ProjPoint::parse("0,1,0,0"), ProjPoint::parse("0,0,1,0"),
                                ProjPoint::parse("0,0,0,1")};
    try {
        auto act = sigma4_action(g, base);
        j["sigma4_image_order"] = act.image_size;
        j["kernel_order"] = act.kernel.order();
        j["kernel_fingerprint"] = fingerprint(act.kernel).to_json();
    } catch (const math_error&) {
        j["sigma4_image_order"] = nullptr;  // coordinate points not an orbit
    }
    return emit(j, o);
}

int cmd_orbits(const std::string& spec, const std::string& point, bool list_points, const Options& o)
{
    MatrixGroup g = resolve_group(spec);
    auto record = [&](const ProjPoint& p) {
        OrbitRecord r = orbit(g, p);
        json j{{"point", p.str()}, {"length", r.length}, {"stabilizer_order", r.stabilizer_order}};
        if (list_points) {
            j["points"] = json::array();
            for (const auto& q : r.points)
                j["points"].push_back(q.str());
        }
        return j;
    };
    if (!point.empty()) {
        ProjPoint p;
        try {
            p = ProjPoint::parse(point);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad point: ") + e.what());
        }
        if (p.dim() != 4)
            throw UsageError("point needs four coordinates");
        json j = record(p);
        j["group"] = spec;
        return emit(j, o);
    }
    json census = json::array();
    for (const auto& k : catalog_keys())
        if (k.kind == Kind::point) {
            json j = record(load_point(k.name).seed);
            j["name"] = k.name;
            census.push_back(j);
        }
    return emit({{"group", spec}, {"census", census}}, o);
}

int cmd_invariants(const std::string& spec, int degree, bool characters, const Options& o)
{
    if (degree < 0 || degree > 12)
        throw UsageError("degree must lie in 0..12");
    LiftedGroup storage;
    const LiftedGroup& g = resolve_lifted(spec, storage);
    auto basis = invariant_basis(g, degree);
    json j{{"group", spec}, {"lifted_order", g.order()}, {"degree", degree}, {"dimension", basis.size()},
           {"basis", forms_json(basis)}};
    if (characters)
        j["characters"] = semi_invariant_split(g, degree).to_json(g);
    return emit(j, o);
}

int cmd_net(const std::string& abc, bool table1, const Options& o)
{
    json j = json::object();
    bool ok = true;
    if (!abc.empty()) {
        auto v = parse_list(abc, 3);
        NetPoint p = net_point(v[0], v[1], v[2]);
        if (p.coords() == std::vector<CycNum>(3))
            throw UsageError("[a:b:c] must be nonzero");
        json factors = json::array();
        for (const auto& f : net_discriminant_factors(p))
            factors.push_back(f.str());
        auto cands = standard_candidates();
        auto extra = named_orbits({"Sigma16", "Sigma16prime", "Sigma16_sqrt3i", "Sigma16_minus_sqrt3i"});
        cands.insert(cands.end(), extra.begin(), extra.end());
        j["parameter"] = p.str();
        j["member"] = net_member(p).str();
        j["discriminant"] = net_discriminant(p).str();
        j["factors"] = factors;
        j["singular_orbits"] = singular_orbits(net_member(p), cands);
    }
    if (table1) {
        json rows = json::array();
        for (const auto& r : verify_table1()) {
            rows.push_back(r.to_json());
            ok = ok && r.pass;
        }
        j["table1"] = rows;
    }
    if (abc.empty() && !table1)
        throw UsageError("net needs --abc or --table1");
    return emit(j, o, ok);
}

RationalMap read_map(const std::string& path)
{
    json j = read_json_file(path);
    if (!j.contains("components") || !j["components"].is_array() || j["components"].size() != 4)
        throw UsageError(path + ": expected four components");
    std::vector<Form> comps;
    for (const auto& c : j["components"]) {
        if (!c.is_string())
            throw UsageError(path + ": components must be form strings");
        try {
            comps.push_back(Form::parse(c.get<std::string>(), 4));
        } catch (const std::exception& e) {
            throw UsageError(path + ": " + e.what());
        }
    }
    int d = comps.front().degree();
    for (const auto& c : comps)
        if (c.degree() != d && !c.is_zero())
            throw UsageError(path + ": components have different degrees");
    if (j.contains("degree") && j["degree"].get<int>() != d)
        throw UsageError(path + ": declared degree does not match the components");
    return RationalMap(4, comps, path);
}

int cmd_decompose(const std::string& path, const Options& o)
{
    RationalMap m = read_map(path);
    Decomposition d = sarkisov_decompose(m);
    bool round = maps_equal(word_map(d.word), m, 10, o.seed);
    json j = d.to_json();
    j["round_trip"] = round ? "pass" : "fail";
    return emit(j, o, round);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"solidus: exact computations with monomial groups, invariant quartics and Cremona maps"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--seed", opt.seed, "seed for every pseudo-random choice")->capture_default_str();
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "md"}))->capture_default_str();

    std::function<int()> action;

    auto* cat = app.add_subcommand("catalog", "catalog queries");
    cat->require_subcommand(1);
    std::string kind, key;
    auto* cat_list = cat->add_subcommand("list", "list catalog keys");
    cat_list->add_option("--kind", kind, "group, point, surface, curve, system or map");
    cat_list->callback([&] { action = [&] { return cmd_catalog_list(kind, opt); }; });
    auto* cat_dump = cat->add_subcommand("dump", "dump one catalog entry");
    cat_dump->add_option("key", key, "kind:name or name")->required();
    cat_dump->callback([&] { action = [&] { return emit(catalog_dump(parse_key(key)), opt); }; });
    bool corrupt = false;
    auto* cat_check = cat->add_subcommand("check", "self-check of the catalog");
    cat_check->add_flag("--corrupt", corrupt, "replace a generator of G_48_50 (negative control)");
    cat_check->callback([&] { action = [&] { return cmd_catalog_check(corrupt, opt); }; });

    std::string group, point;
    auto* grp = app.add_subcommand("group", "order, fingerprint and permutation action");
    grp->add_option("--group", group, "catalog key or descriptor file")->required();
    grp->callback([&] { action = [&] { return cmd_group(group, opt); }; });

    bool list_points = false;
    auto* orb = app.add_subcommand("orbits", "orbit of a point, or census of the catalog points");
    orb->add_option("--group", group, "catalog key or descriptor file")->required();
    orb->add_option("--point", point, "a,b,c,d");
    orb->add_flag("--list", list_points, "print the orbit points");
    orb->callback([&] { action = [&] { return cmd_orbits(group, point, list_points, opt); }; });

    int degree = 4;
    bool characters = false;
    auto* inv = app.add_subcommand("invariants", "invariant forms of a lifted group");
    inv->add_option("--group", group, "H_hat, G_hat, G_96_227_hat, G_144_184_hat, catalog key or file")->required();
    inv->add_option("--degree", degree, "degree")->required();
    inv->add_flag("--characters", characters, "split into semi-invariant characters");
    inv->callback([&] { action = [&] { return cmd_invariants(group, degree, characters, opt); }; });

    std::string abc;
    bool table1 = false;
    auto* net = app.add_subcommand("net", "members of the invariant quartic net");
    net->add_option("--abc", abc, "a,b,c");
    net->add_flag("--table1", table1, "verify every singular-locus row");
    net->callback([&] { action = [&] { return cmd_net(abc, table1, opt); }; });

    std::string map_path;
    auto* dec = app.add_subcommand("decompose", "factor a map into involutions and a linear tail");
    dec->add_option("--map", map_path, "JSON file {degree, components}")->required();
    dec->callback([&] { action = [&] { return cmd_decompose(map_path, opt); }; });

    std::string suite, target;
    bool all = false, timings = false, list = false;
    int samples = 0;
    auto* ver = app.add_subcommand("verify", "run verification checks");
    ver->add_option("target", target, "diagram63");
    ver->add_option("--suite", suite, "suite name");
    ver->add_flag("--all", all, "every check");
    ver->add_flag("--list", list, "list suites and check ids");
    ver->add_option("--samples", samples, "sample count for sampled checks");
    ver->add_flag("--timings", timings, "include wall-clock seconds");
    ver->callback([&] {
        action = [&]() -> int {
            if (list) {
                json j = json::object();
                for (const auto& c : all_checks())
                    j[c.suite].push_back(c.id);
                return emit(j, opt);
            }
            int chosen = !suite.empty() + all + !target.empty();
            if (chosen != 1)
                throw UsageError("verify needs exactly one of --suite, --all or a target");
            if (samples < 0)
                throw UsageError("--samples must be positive");
            std::string name = all ? "all" : !suite.empty() ? suite : target;
            auto names = suite_names();
            if (name != "all" && std::find(names.begin(), names.end(), name) == names.end())
                throw UsageError("unknown suite: " + name);
            return emit_report(run_suite(name, {opt.seed, samples}), opt, timings);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "solidus: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "solidus: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "solidus: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "solidus: " << e.what() << "\n";
        return 1;
    }
}
