#include "solidus/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <regex>
#include <stdexcept>

namespace solidus {

std::string kind_name(Kind k)
{
    switch (k) {
    case Kind::group: return "group";
    case Kind::point: return "point";
    case Kind::surface: return "surface";
    case Kind::curve: return "curve";
    case Kind::system: return "system";
    case Kind::map: return "map";
    }
    return "?";
}

Kind parse_kind(const std::string& s)
{
    for (Kind k : {Kind::group, Kind::point, Kind::surface, Kind::curve, Kind::system, Kind::map})
        if (kind_name(k) == s)
            return k;
    throw std::invalid_argument("unknown catalog kind: " + s);
}

std::vector<Form> CurveComponent::equations() const { return line ? line->equations() : ideal; }

namespace {

Form F(const std::string& s) { return Form::parse(s); }
CycNum C(const std::string& s) { return parse_scalar(s); }
ProjPoint P(const std::string& s) { return ProjPoint::parse(s); }

Matrix int_matrix(const std::vector<std::vector<long>>& rows)
{
    Matrix m;
    for (const auto& r : rows) {
        std::vector<CycNum> row;
        for (long x : r)
            row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return m;
}

Matrix str_matrix(const std::vector<std::vector<std::string>>& rows)
{
    Matrix m;
    for (const auto& r : rows) {
        std::vector<CycNum> row;
        for (const auto& x : r)
            row.push_back(C(x));
        m.push_back(std::move(row));
    }
    return m;
}

ProjMap diag3(const std::string& a, const std::string& b, const std::string& c)
{
    return ProjMap::diagonal(C(a), C(b), C(c));
}

const std::map<std::string, Matrix>& linear_matrices()
{
    static const std::map<std::string, Matrix> m = [] {
        std::map<std::string, Matrix> out;
        // order 48 section
        out["M"] = int_matrix({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
        out["N"] = int_matrix({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        out["L"] = int_matrix({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        out["A"] = int_matrix({{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
        out["B"] = int_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
        out["Aprime"] = int_matrix({{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
        out["Bprime"] = int_matrix({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        out["R"] = str_matrix({{"1/2", "1/2", "1/2", "1/2"},
                               {"1/2", "1/2", "-1/2", "-1/2"},
                               {"1/2", "-1/2", "1/2", "-1/2"},
                               {"-1/2", "1/2", "1/2", "-1/2"}});
        // order 192 section
        out["M192"] = int_matrix({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        out["N192"] = int_matrix({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        out["L192"] = int_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}});
        out["A192"] = str_matrix({{"0", "0", "0", "i"}, {"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}});
        out["B192"] = str_matrix({{"0", "1", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "i", "0"}, {"0", "0", "0", "1"}});
        return out;
    }();
    return m;
}

std::vector<GroupEntry> build_groups()
{
    auto m = [](const std::string& n) { return ProjMap(linear_matrices().at(n)); };
    auto I = [](const std::vector<std::vector<long>>& r) { return ProjMap(int_matrix(r)); };
    auto S = [](const std::vector<std::vector<std::string>>& r) { return ProjMap(str_matrix(r)); };
    ProjMap cyc3 = I({{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    ProjMap cyc4 = I({{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    ProjMap swap2 = I({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    ProjMap swap1 = I({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    ProjMap d1 = diag3("-1", "1", "-1"), d2 = diag3("1", "-1", "-1");
    ProjMap e1 = diag3("-1", "1", "1"), e2 = diag3("1", "-1", "1"), e3 = diag3("1", "1", "-1");
    ProjMap z1 = diag3("zeta3", "1", "1"), z2 = diag3("1", "zeta3", "1"), z3 = diag3("1", "1", "zeta3");

    std::vector<GroupEntry> g;
    g.push_back({"G_48_50", {d1, d2, cyc3, swap2}, 48});
    g.push_back({"G_48_3", {d1, d2, cyc3, S({{"0", "i", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "0", "-i"}, {"0", "0", "1", "0"}})}, 48});
    g.push_back({"G_96_70", {e1, e2, e3, cyc3, swap2}, 96});
    g.push_back({"G_96_72", {e1, e2, e3, cyc3, S({{"0", "i", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "0", "i"}, {"0", "0", "1", "0"}})}, 96});
    g.push_back({"G_96_227", {d1, d2, cyc4, swap1}, 96});
    g.push_back({"G_96_227prime", {d1, d2, I({{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}), I({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}})}, 96});
    g.push_back({"G_192_955", {e1, e2, e3, cyc4, swap1}, 192});
    g.push_back({"G_192_185", {e1, e2, e3, m("A192"), m("B192")}, 192});
    g.push_back({"G_324_160", {z1, z2, z3, cyc3, swap2}, 324});
    g.push_back({"G_324_160prime", {z1, z2, z3, cyc3, I({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}})}, 324});
    g.push_back({"G_648_704", {z1, z2, z3, cyc4, swap1}, 648});
    g.push_back({"G_648_704prime", {z1, z2, z3, I({{0, 0, 0, 1}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}), I({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}})}, 648});
    // normalizer chain of G_48_50
    g.push_back({"G_144_184", {m("M"), m("N"), m("A"), m("B"), m("R")}, 144});
    g.push_back({"G_288_1025", {m("M"), m("N"), m("Aprime"), m("Bprime"), m("R")}, 288});
    g.push_back({"G_576_8654", {m("L"), m("Aprime"), m("Bprime"), m("R")}, 576});
    g.push_back({"H_16", {m("M"), m("N"), m("B"), m("A") * m("B") * m("A") * m("A")}, 16});
    return g;
}

std::vector<PointEntry> build_points()
{
    std::vector<PointEntry> p;
    auto add = [&](const std::string& n, const std::string& coords, const std::string& grp, std::size_t len) {
        p.push_back({n, P(coords), grp, len});
    };
    add("P1", "1,0,0,0", "", 0);
    add("P2", "0,1,0,0", "", 0);
    add("P3", "0,0,1,0", "", 0);
    add("P4", "0,0,0,1", "", 0);
    add("Sigma4", "1,0,0,0", "G_48_50", 4);
    add("Sigma4prime", "1,1,1,-1", "G_48_50", 4);
    add("Sigma4primeprime", "1,1,1,1", "G_48_50", 4);
    add("Sigma12", "0,0,1,1", "G_48_50", 12);
    add("Sigma12prime", "0,0,i,1", "G_48_50", 12);
    add("Sigma12primeprime", "i,i,1,1", "G_48_50", 12);
    add("Sigma12primeprimeprime", "-i,i,1,1", "G_48_50", 12);
    add("Sigma16", "-1+sqrt3_i,-1-sqrt3_i,2,0", "G_48_50", 16);
    add("Sigma16prime", "-1-sqrt3_i,-1+sqrt3_i,2,0", "G_48_50", 16);
    add("Sigma16_sqrt3i", "1,1,1,sqrt3_i", "G_48_50", 16);
    add("Sigma16_minus_sqrt3i", "1,1,1,-sqrt3_i", "G_48_50", 16);
    add("Sigma4_192", "1,0,0,0", "G_192_185", 4);
    return p;
}

const std::string kSigma2 = "(x0^2*x1^2+x0^2*x2^2+x0^2*x3^2+x1^2*x2^2+x1^2*x3^2+x2^2*x3^2)";
const std::string kSigma4 = "(x0^4+x1^4+x2^4+x3^4)";

std::vector<SurfaceEntry> build_surfaces()
{
    std::vector<SurfaceEntry> s;
    auto add = [&](const std::string& n, const std::string& f) { s.push_back({n, F(f)}); };
    add("Q1", "x0^2+x1^2+x2^2+x3^2");
    add("Q2", "x0^2+x1^2-x2^2-x3^2");
    add("Q3", "x0^2-x1^2-x2^2+x3^2");
    add("Q4", "x0^2-x1^2+x2^2-x3^2");
    add("Q5", "x0*x2+x1*x3");
    add("Q6", "x0*x3+x1*x2");
    add("Q7", "x0*x1+x2*x3");
    add("Q8", "x0*x2-x1*x3");
    add("Q9", "x0*x3-x1*x2");
    add("Q10", "x0*x1-x2*x3");
    add("f1", "x0^2+x1^2+x2^2+x3^2");
    add("f2", "2*" + kSigma2 + "-" + kSigma4 + "+8*sqrt3_i*x0*x1*x2*x3");
    add("f3", "2*" + kSigma2 + "-" + kSigma4 + "-8*sqrt3_i*x0*x1*x2*x3");
    const std::string u = "(x0^2*x2^2-x0^2*x3^2-x1^2*x2^2+x1^2*x3^2)";
    const std::string v = "(x0^2*x1^2-x0^2*x2^2-x1^2*x3^2+x2^2*x3^2)";
    add("f4", "(-1+sqrt3_i)*" + u + "-2*" + v);
    add("f5", "(-1-sqrt3_i)*" + u + "-2*" + v);
    add("T", "x0*x1*x2*x3");
    add("Tprime", "(x0+x1+x2-x3)*(x0+x1-x2+x3)*(x0-x1+x2+x3)*(x0-x1-x2-x3)");
    add("Tprimeprime", "(x0+x1+x2+x3)*(x0-x1-x2+x3)*(x0+x1-x2-x3)*(x0-x1+x2-x3)");
    add("F1", "x0");
    add("F2", "x1");
    add("F3", "x2");
    add("F4", "x3");
    add("sextic_fermat", "x0^6+x1^6+x2^6+x3^6");
    add("fermat_cubic", "x0^3+x1^3+x2^3+x3^3");
    return s;
}

CurveComponent line_component(const std::vector<std::string>& eqs)
{
    CurveComponent c;
    std::vector<Form> f;
    for (const auto& e : eqs)
        f.push_back(F(e));
    c.line = ProjLine::from_equations(f);
    c.degree = 1;
    return c;
}

CurveComponent ideal_component(const std::vector<std::string>& eqs, int degree)
{
    CurveComponent c;
    for (const auto& e : eqs)
        c.ideal.push_back(F(e));
    c.degree = degree;
    return c;
}

std::vector<std::string> plane_strings(const std::string& prod)
{
    // split "(a)*(b)*..." into the factor texts
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : prod) {
        if (ch == '(') {
            if (depth++ == 0) {
                cur.clear();
                continue;
            }
        }
        if (ch == ')') {
            if (--depth == 0) {
                out.push_back(cur);
                continue;
            }
        }
        if (depth > 0)
            cur += ch;
    }
    return out;
}

std::vector<CurveComponent> edges_of(const std::vector<std::string>& planes)
{
    std::vector<CurveComponent> out;
    for (std::size_t a = 0; a < planes.size(); ++a)
        for (std::size_t b = a + 1; b < planes.size(); ++b)
            out.push_back(line_component({planes[a], planes[b]}));
    return out;
}

struct CurveSpec {
    std::string name;
    int degree;
    std::size_t components;
    std::string group;
    std::function<std::vector<CurveComponent>()> build;
};

std::vector<CurveComponent> orbit_of(const std::string& group, const CurveComponent& seed)
{
    return component_orbit(load_group(group), seed);
}

std::vector<CurveSpec> curve_specs()
{
    std::vector<CurveSpec> c;
    auto edges = [](const std::string& prod) { return [prod] { return edges_of(plane_strings(prod)); }; };
    auto orb_line = [](const std::string& grp, std::vector<std::string> eqs) {
        return [grp, eqs] { return orbit_of(grp, line_component(eqs)); };
    };
    auto orb_ideal = [](const std::string& grp, std::vector<std::string> eqs, int deg) {
        return [grp, eqs, deg] { return orbit_of(grp, ideal_component(eqs, deg)); };
    };
    auto listed = [](std::vector<std::vector<std::string>> comps, int deg) {
        return [comps, deg] {
            std::vector<CurveComponent> out;
            for (const auto& e : comps)
                out.push_back(ideal_component(e, deg));
            return out;
        };
    };
    auto moved = [](const std::string& base, const std::string& mat, int power) {
        return [base, mat, power] {
            ProjMap g = named_matrix(mat).pow(power);
            std::vector<CurveComponent> out;
            for (const auto& comp : load_curve(base).components)
                out.push_back(map_component(g, comp));
            return out;
        };
    };
    c.push_back({"L6", 6, 6, "G_48_50", edges("(x0)*(x1)*(x2)*(x3)")});
    c.push_back({"L6prime", 6, 6, "G_48_50", edges("(x0+x1+x2-x3)*(x0+x1-x2+x3)*(x0-x1+x2+x3)*(x0-x1-x2-x3)")});
    c.push_back({"L6primeprime", 6, 6, "G_48_50", edges("(x0+x1+x2+x3)*(x0-x1-x2+x3)*(x0+x1-x2-x3)*(x0-x1+x2-x3)")});
    c.push_back({"L6primeprimeprime", 6, 6, "G_48_50", orb_line("G_48_50", {"x0+i*x2", "x1+i*x3"})});
    c.push_back({"L6primeprimeprimeprime", 6, 6, "G_48_50", orb_line("G_48_50", {"x0+i*x3", "x1+i*x2"})});
    c.push_back({"L4", 4, 4, "G_48_50",
                 orb_line("G_48_50", {"2*x0+(1+sqrt3_i)*x2-(1-sqrt3_i)*x3", "2*x1+(1-sqrt3_i)*x2+(1+sqrt3_i)*x3"})});
    c.push_back({"L4prime", 4, 4, "G_48_50",
                 orb_line("G_48_50", {"2*x0+(1-sqrt3_i)*x2-(1+sqrt3_i)*x3", "2*x1+(1+sqrt3_i)*x2+(1-sqrt3_i)*x3"})});
    c.push_back({"L4primeprime", 4, 4, "G_48_50",
                 orb_line("G_48_50", {"2*x0-(1-sqrt3_i)*x2+(1+sqrt3_i)*x3", "2*x1+(1+sqrt3_i)*x2+(1-sqrt3_i)*x3"})});
    c.push_back({"L4primeprimeprime", 4, 4, "G_48_50",
                 orb_line("G_48_50", {"2*x0-(1+sqrt3_i)*x2+(1-sqrt3_i)*x3", "2*x1+(1-sqrt3_i)*x2+(1+sqrt3_i)*x3"})});
    c.push_back({"C8_1", 8, 4, "G_48_50", orb_ideal("G_48_50", {"x0", "x1^2+x2^2+x3^2"}, 2)});
    c.push_back({"C8_2", 8, 4, "G_48_50", orb_ideal("G_48_50", {"x0", "2*x1^2-(1-sqrt3_i)*x2^2-(1+sqrt3_i)*x3^2"}, 2)});
    c.push_back({"C8_3", 8, 4, "G_48_50", orb_ideal("G_48_50", {"x0", "2*x1^2-(1+sqrt3_i)*x2^2-(1-sqrt3_i)*x3^2"}, 2)});
    c.push_back({"C8_1prime", 8, 4, "G_48_50", moved("C8_1", "R", 1)});
    c.push_back({"C8_1primeprime", 8, 4, "G_48_50", moved("C8_1", "R", 2)});
    // curves of the order 192 group
    c.push_back({"C8", 8, 4, "G_192_185",
                 listed({{"x0", "x1^2-x2^2-x3^2"}, {"x1", "x0^2+x2^2-x3^2"}, {"x2", "x0^2+x1^2+x3^2"}, {"x3", "x0^2-x1^2-x2^2"}}, 2)});
    c.push_back({"SC8", 8, 2, "G_192_185",
                 listed({{"x0^2+(zeta6-1)*x2^2+zeta6*x3^2", "x1^2+zeta6*x2^2+(1-zeta6)*x3^2"},
                         {"x0^2-zeta6*x2^2+(1-zeta6)*x3^2", "x1^2+(1-zeta6)*x2^2+zeta6*x3^2"}},
                        4)});
    // third component completed from the group orbit of the first
    c.push_back({"SC12", 12, 3, "G_192_185", orb_ideal("G_192_185", {"x0^2+sqrt2_i*x1^2-x2^2", "x1^2+sqrt2_i*x2^2-x3^2"}, 4)});
    c.push_back({"SC12prime", 12, 3, "G_192_185", orb_ideal("G_192_185", {"x0^2-sqrt2_i*x1^2-x2^2", "x1^2-sqrt2_i*x2^2-x3^2"}, 4)});
    auto frak = [&](const std::string& a) {
        return listed({{"(" + a + ")*(x1^2*x2^2-x0^2*x1^2-x0^2*x3^2-x2^2*x3^2)+3*(x0^4-x1^4+x2^4-x3^4)",
                        "(" + a + ")*(x2^2*x3^2-x0^2*x1^2-x0^2*x2^2-x1^2*x3^2)-3*(x0^4-x1^4-x2^4+x3^4)",
                        "(" + a + ")*(x1^2*x3^2-x0^2*x2^2+x0^2*x3^2+x1^2*x2^2)+3*(x0^4+x1^4-x2^4-x3^4)"}},
                      12);
    };
    c.push_back({"F12", 12, 1, "G_192_185", frak("2+2*sqrt2_i")});
    c.push_back({"F12prime", 12, 1, "G_192_185", frak("2-2*sqrt2_i")});
    c.push_back({"curve51", 9, 1, "G_324_160prime",
                 listed({{"(1+zeta3)*x1^3+zeta3*x2^3+x3^3", "x0^3+zeta3*x1^3-(1+zeta3)*x2^3"}}, 9)});
    c.push_back({"curve52", 9, 1, "G_324_160prime",
                 listed({{"zeta3*x1^3+(1+zeta3)*x2^3-x3^3", "x0^3-(1+zeta3)*x1^3+zeta3*x2^3"}}, 9)});
    return c;
}

std::vector<SystemEntry> build_systems()
{
    std::vector<SystemEntry> s;
    s.push_back({"O1", 1, {F("x0"), F("x1"), F("x2"), F("x3")}});
    s.push_back({"M4", 4, {F("x0*x1*x2*x3"), F(kSigma2), F(kSigma4)}});
    Form f1 = F("x0^2+x1^2+x2^2+x3^2");
    s.push_back({"M6", 6, {f1.pow(3), f1 * load_surface("f2"), f1 * load_surface("f3"), F("x0^6+x1^6+x2^6+x3^6")}});
    s.push_back({"psi_sextics", 6, load_map("psi").components});
    s.push_back({"pencil51", 3, load_curve("curve51").components[0].ideal});
    s.push_back({"pencil52", 3, load_curve("curve52").components[0].ideal});
    return s;
}

std::vector<MapEntry> build_maps()
{
    std::vector<MapEntry> m;
    auto forms = [](const std::vector<std::string>& t, int nvars = 4, bool weighted = false) {
        std::vector<Form> out;
        for (const auto& s : t)
            out.push_back(Form::parse(s, nvars, weighted));
        return out;
    };
    m.push_back({"iota", 4, 4, forms({"x1*x2*x3", "x0*x2*x3", "x0*x1*x3", "x0*x1*x2"})});
    m.push_back({"iota_prime", 4, 4,
                 forms({"x0^3-(x1^2+x2^2+x3^2)*x0-2*x1*x2*x3", "x1^3-(x0^2+x2^2+x3^2)*x1-2*x0*x3*x2",
                        "x2^3-(x0^2+x1^2+x3^2)*x2-2*x0*x3*x1", "x3^3-(x0^2+x1^2+x2^2)*x3-2*x1*x2*x0"})});
    m.push_back({"iota_double_prime", 4, 4,
                 forms({"x0^3-(x1^2+x2^2+x3^2)*x0+2*x1*x2*x3", "x1^3-(x0^2+x2^2+x3^2)*x1+2*x0*x3*x2",
                        "x2^3-(x0^2+x1^2+x3^2)*x2+2*x0*x3*x1", "x3^3-(x0^2+x1^2+x2^2)*x3+2*x1*x2*x0"})});
    m.push_back({"psi", 4, 14,
                 forms({"x0^2*x1^2*x2^2", "x0^3*x1*x2*x3", "x0^2*x1^2*x2*x3", "x0*x1^3*x2*x3", "x0^2*x1^2*x3^2",
                        "x0^2*x1*x2^2*x3", "x0*x1^2*x2^2*x3", "x0^2*x1*x2*x3^2", "x0*x1^2*x2*x3^2", "x0*x1*x2^3*x3",
                        "x0^2*x2^2*x3^2", "x0*x1*x2^2*x3^2", "x1^2*x2^2*x3^2", "x0*x1*x2*x3^3"})});
    // (u1, v1, u2, v2, u3, v3) = (x0, .., x5)
    m.push_back({"omega", 6, 14,
                 forms({"x0^2*x2^2*x4^2", "x0^2*x2^2*x5^2", "x0^2*x2*x3*x4*x5", "x0^2*x3^2*x4^2", "x0^2*x3^2*x5^2",
                        "x0*x1*x2^2*x4*x5", "x0*x1*x2*x3*x4^2", "x0*x1*x2*x3*x5^2", "x0*x1*x3^2*x4*x5",
                        "x1^2*x2^2*x4^2", "x1^2*x2^2*x5^2", "x1^2*x2*x3*x4*x5", "x1^2*x3^2*x4^2", "x1^2*x3^2*x5^2"},
                       6)});
    m.push_back({"zeta_map", 5, 6, forms({"x0*x1", "w", "x0*x2", "w", "x1*x2", "w"}, 5, true)});
    m.push_back({"xi", 5, 4, forms({"x0", "x1", "x2", "x3"}, 5, true)});
    m.push_back({"eta1_psi", 4, 2, forms({"x0*x1", "x2*x3"})});
    m.push_back({"eta2_psi", 4, 2, forms({"x0*x2", "x1*x3"})});
    m.push_back({"eta3_psi", 4, 2, forms({"x1*x2", "x0*x3"})});
    {
        std::vector<Form> r;
        const Matrix& rm = linear_matrices().at("R");
        for (const auto& row : rm) {
            Form f(4, 1);
            for (int j = 0; j < 4; ++j)
                f += row[j] * Form::variable(4, j);
            r.push_back(f);
        }
        m.push_back({"R", 4, 4, r});
    }
    return m;
}

template <class T>
struct Registry {
    std::once_flag once;
    std::vector<T> items;
    std::map<std::string, std::size_t> index;

    template <class Build>
    const std::vector<T>& get(Build build)
    {
        std::call_once(once, [&] {
            items = build();
            for (std::size_t k = 0; k < items.size(); ++k)
                index[items[k].name] = k;
        });
        return items;
    }
    template <class Build>
    const T& find(const std::string& name, Build build, const char* what)
    {
        get(build);
        auto it = index.find(name);
        if (it == index.end())
            throw std::out_of_range(std::string("unknown ") + what + ": " + name);
        return items[it->second];
    }
};

Registry<GroupEntry>& groups() { static Registry<GroupEntry> r; return r; }
Registry<PointEntry>& points() { static Registry<PointEntry> r; return r; }
Registry<SurfaceEntry>& surfaces() { static Registry<SurfaceEntry> r; return r; }
Registry<SystemEntry>& systems() { static Registry<SystemEntry> r; return r; }
Registry<MapEntry>& maps() { static Registry<MapEntry> r; return r; }

}  // namespace

ProjMap named_matrix(const std::string& name) { return ProjMap(named_linear_matrix(name)); }

Matrix named_linear_matrix(const std::string& name)
{
    auto it = linear_matrices().find(name);
    if (it == linear_matrices().end())
        throw std::out_of_range("unknown matrix: " + name);
    return it->second;
}

const GroupEntry& group_entry(const std::string& name) { return groups().find(name, build_groups, "group"); }

const MatrixGroup& load_group(const std::string& name)
{
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<MatrixGroup>> cache;
    const GroupEntry& e = group_entry(name);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end())
        return *it->second;
    auto g = std::make_unique<MatrixGroup>(group_closure(e.generators, 10000, name));
    return *cache.emplace(name, std::move(g)).first->second;
}

const PointEntry& load_point(const std::string& name) { return points().find(name, build_points, "point"); }
const Form& load_surface(const std::string& name) { return surfaces().find(name, build_surfaces, "surface").form; }
const SystemEntry& load_system(const std::string& name) { return systems().find(name, build_systems, "system"); }
const MapEntry& load_map(const std::string& name) { return maps().find(name, build_maps, "map"); }

const CurveEntry& load_curve(const std::string& name)
{
    static std::recursive_mutex mu;
    static std::map<std::string, std::unique_ptr<CurveEntry>> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end())
        return *it->second;
    for (const auto& s : curve_specs()) {
        if (s.name != name)
            continue;
        auto e = std::make_unique<CurveEntry>();
        e->name = s.name;
        e->degree = s.degree;
        e->expected_components = s.components;
        e->ambient_group = s.group;
        e->components = s.build();
        return *cache.emplace(name, std::move(e)).first->second;
    }
    throw std::out_of_range("unknown curve: " + name);
}

std::vector<CatalogKey> catalog_keys()
{
    std::vector<CatalogKey> keys;
    for (const auto& g : groups().get(build_groups))
        keys.push_back({Kind::group, g.name});
    for (const auto& p : points().get(build_points))
        keys.push_back({Kind::point, p.name});
    for (const auto& s : surfaces().get(build_surfaces))
        keys.push_back({Kind::surface, s.name});
    for (const auto& c : curve_specs())
        keys.push_back({Kind::curve, c.name});
    for (const auto& s : systems().get(build_systems))
        keys.push_back({Kind::system, s.name});
    for (const auto& m : maps().get(build_maps))
        keys.push_back({Kind::map, m.name});
    return keys;
}

bool catalog_has(const CatalogKey& key)
{
    auto keys = catalog_keys();
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

CatalogObject load(const CatalogKey& key)
{
    switch (key.kind) {
    case Kind::group: return group_entry(key.name);
    case Kind::point: return load_point(key.name);
    case Kind::surface: return surfaces().find(key.name, build_surfaces, "surface");
    case Kind::curve: return load_curve(key.name);
    case Kind::system: return load_system(key.name);
    case Kind::map: return load_map(key.name);
    }
    throw std::invalid_argument("bad kind");
}

ProjPoint sigma16_t(const CycNum& t)
{
    return ProjPoint({CycNum(1), CycNum(1), CycNum(1), t});
}

std::vector<Form> twisted_cubic(const CycNum& s)
{
    const CycNum i = cyc_constant("i");
    const CycNum one(1), two(2);
    CycNum s2 = s * s;
    CycNum c1 = s2 + (one + i) * s - i;
    CycNum a = two * i * s2 + (two + two * i) * s - two;   // 2is^2+(2+2i)s-2
    CycNum b = two * i * s2 - (two + two * i) * s - two;   // 2is^2-(2+2i)s-2
    CycNum c = -two * i * s2 + (two + two * i) * s + two;  // -2is^2+(2+2i)s+2
    CycNum e = -two * i * s2 - (two + two * i) * s + two;  // -2is^2-(2+2i)s+2
    auto mono = [](int p, int q) {
        std::vector<int> ex(4, 0);
        ex[p]++;
        ex[q]++;
        return Form::monomial(ex, CycNum(1));
    };
    Form h1 = c1 * mono(0, 0) - a * mono(0, 1) + b * mono(3, 0) - c1 * mono(1, 1) + c * mono(2, 1) + c1 * mono(2, 2) -
              a * mono(3, 2) - c1 * mono(3, 3);
    Form h2 = -c1 * mono(0, 0) + b * mono(0, 1) + e * mono(2, 0) + c1 * mono(1, 1) - a * mono(3, 1) + c1 * mono(2, 2) -
              b * mono(3, 2) - c1 * mono(3, 3);
    Form h3 = c1 * mono(0, 0) + b * mono(0, 2) + a * mono(3, 0) + c1 * mono(1, 1) + a * mono(1, 2) - b * mono(3, 1) -
              c1 * mono(2, 2) - c1 * mono(3, 3);
    return {h1, h2, h3};
}

std::vector<ProjPoint> twisted_cubic_points(const CycNum& s)
{
    const CycNum i = cyc_constant("i");
    const CycNum one(1);
    return {ProjPoint({-i * s, -i, s, one}), ProjPoint({i, s, s * i, one}),  ProjPoint({one, i, i * s, s}),
            ProjPoint({-i * s, -one, i, s}), ProjPoint({-s, s * i, -i, one}), ProjPoint({-i, i * s, -one, s})};
}

// ---------------------------------------------------------------------------

Matrix line_key(const ProjLine& l)
{
    return matrix_rref(Matrix{l.a().coords(), l.b().coords()});
}

Matrix ideal_key(const std::vector<Form>& gens)
{
    if (gens.empty())
        throw std::invalid_argument("ideal_key: no generators");
    int n = gens.front().nvars();
    int d = 0;
    for (const auto& g : gens)
        d = std::max(d, g.degree());
    std::vector<Form> monos = monomials_of_degree(n, d);
    std::map<Mono, std::size_t> col;
    for (std::size_t k = 0; k < monos.size(); ++k)
        col[monos[k].terms().front().mono] = k;
    Matrix rows;
    for (const auto& g : gens) {
        for (const auto& m : monomials_of_degree(n, d - g.degree())) {
            Form h = g * m;
            std::vector<CycNum> row(monos.size());
            for (const auto& t : h.terms())
                row[col.at(t.mono)] = t.coeff;
            rows.push_back(std::move(row));
        }
    }
    Matrix r = matrix_rref(rows);
    while (!r.empty() && std::all_of(r.back().begin(), r.back().end(), [](const CycNum& x) { return x.is_zero(); }))
        r.pop_back();
    return r;
}

ProjLine map_line(const ProjMap& g, const ProjLine& l) { return ProjLine(g.apply(l.a()), g.apply(l.b())); }

std::vector<Form> map_ideal(const ProjMap& g, const std::vector<Form>& gens)
{
    Matrix inv = g.inverse().matrix();
    std::vector<Form> out;
    for (const auto& f : gens)
        out.push_back(form_linear_substitute(f, inv));
    return out;
}

CurveComponent map_component(const ProjMap& g, const CurveComponent& c)
{
    CurveComponent out;
    out.degree = c.degree;
    if (c.line)
        out.line = map_line(g, *c.line);
    else
        out.ideal = map_ideal(g, c.ideal);
    return out;
}

namespace {

Matrix component_key(const CurveComponent& c) { return c.line ? line_key(*c.line) : ideal_key(c.ideal); }

}  // namespace

int find_component(const std::vector<CurveComponent>& list, const CurveComponent& c)
{
    Matrix key = component_key(c);
    for (std::size_t k = 0; k < list.size(); ++k)
        if (static_cast<bool>(list[k].line) == static_cast<bool>(c.line) && component_key(list[k]) == key)
            return static_cast<int>(k);
    return -1;
}

std::vector<CurveComponent> component_orbit(const MatrixGroup& g, const CurveComponent& seed)
{
    std::vector<CurveComponent> out{seed};
    std::vector<Matrix> keys{component_key(seed)};
    for (std::size_t head = 0; head < out.size(); ++head)
        for (const auto& s : g.generators()) {
            CurveComponent img = map_component(s, out[head]);
            Matrix k = component_key(img);
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
                keys.push_back(k);
                out.push_back(std::move(img));
                if (out.size() > g.order())
                    throw math_error("component orbit exceeds group order");
            }
        }
    return out;
}

bool surface_invariant(const Form& f, const ProjMap& g)
{
    Form h = form_linear_substitute(f, g.matrix());
    return !h.is_zero() && h.monic() == f.monic();
}

int surface_image_index(const Form& f, const ProjMap& g, const std::vector<Form>& fs)
{
    Form h = form_linear_substitute(f, g.inverse().matrix()).monic();
    for (std::size_t k = 0; k < fs.size(); ++k)
        if (fs[k].monic() == h)
            return static_cast<int>(k);
    return -1;
}

// ---------------------------------------------------------------------------

std::size_t SelfCheckReport::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

nlohmann::json SelfCheckReport::to_json() const
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : checks)
        rows.push_back({{"id", c.id}, {"key", c.key}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    return {{"checks", rows}, {"failures", failures()}};
}

namespace {

std::size_t order_in_name(const std::string& name)
{
    static const std::regex re("^G_([0-9]+)_");
    std::smatch m;
    if (std::regex_search(name, m, re))
        return std::stoul(m[1]);
    static const std::regex re2("_([0-9]+)$");
    if (std::regex_search(name, m, re2))
        return std::stoul(m[1]);
    return 0;
}

void check(SelfCheckReport& r, const std::string& id, const std::string& key, const std::function<std::string()>& body)
{
    CatalogCheck c{id, key, false, ""};
    try {
        c.detail = body();
        c.pass = c.detail.rfind("ok", 0) == 0;
    } catch (const std::exception& e) {
        c.detail = e.what();
    }
    r.checks.push_back(std::move(c));
}

bool group_preserves_surface(const std::string& group, const Form& f)
{
    for (const auto& g : group_entry(group).generators)
        if (!surface_invariant(f, g))
            return false;
    return true;
}

}  // namespace

SelfCheckReport catalog_selfcheck(const SelfCheckOptions& opt)
{
    SelfCheckReport r;
    auto want = [&](Kind k) { return !opt.kind || *opt.kind == k; };

    if (want(Kind::group)) {
        for (const auto& e : groups().get(build_groups)) {
            check(r, "group.order", "group:" + e.name, [&] {
                std::size_t ord;
                if (opt.corrupt_generator && e.name == "G_48_50") {
                    auto gens = e.generators;
                    gens.back() = ProjMap::identity();
                    ord = group_closure(gens).order();
                } else {
                    ord = load_group(e.name).order();
                }
                std::size_t named = order_in_name(e.name);
                std::string d = "order " + std::to_string(ord);
                return (ord == e.expected_order && (named == 0 || named == ord) ? "ok " : "mismatch ") + d;
            });
        }
    }
    if (want(Kind::point)) {
        for (const auto& p : points().get(build_points)) {
            if (p.group.empty())
                continue;
            check(r, "point.orbit_length", "point:" + p.name, [&] {
                auto o = orbit(load_group(p.group), p.seed);
                return (o.length == p.expected_length ? "ok " : "mismatch ") + std::to_string(o.length);
            });
        }
    }
    if (want(Kind::surface)) {
        for (int k = 1; k <= 10; ++k) {
            std::string q = "Q" + std::to_string(k);
            check(r, "surface.H_invariant", "surface:" + q,
                  [&] { return group_preserves_surface("H_16", load_surface(q)) ? "ok" : "not invariant"; });
        }
        for (const char* s : {"Q1", "T", "Tprime", "Tprimeprime"})
            check(r, "surface.G48_invariant", std::string("surface:") + s,
                  [&] { return group_preserves_surface("G_48_50", load_surface(s)) ? "ok" : "not invariant"; });
        for (const char* s : {"f2", "f3", "f4", "f5"})
            check(r, "surface.G144_invariant", std::string("surface:") + s,
                  [&] { return group_preserves_surface("G_144_184", load_surface(s)) ? "ok" : "not invariant"; });
    }
    if (want(Kind::curve)) {
        for (const auto& spec : curve_specs()) {
            check(r, "curve.components", "curve:" + spec.name, [&] {
                const auto& c = load_curve(spec.name);
                int deg = 0;
                for (const auto& comp : c.components)
                    deg += comp.degree;
                std::string d = std::to_string(c.components.size()) + " components, degree " + std::to_string(deg);
                bool ok = c.components.size() == spec.components && deg == spec.degree;
                return (ok ? "ok " : "mismatch ") + d;
            });
            check(r, "curve.invariant", "curve:" + spec.name, [&] {
                const auto& c = load_curve(spec.name);
                for (const auto& g : group_entry(c.ambient_group).generators)
                    for (const auto& comp : c.components)
                        if (find_component(c.components, map_component(g, comp)) < 0)
                            return std::string("component leaves the set");
                return std::string("ok");
            });
        }
    }
    if (want(Kind::system)) {
        for (const auto& s : systems().get(build_systems))
            check(r, "system.independent", "system:" + s.name, [&] {
                int rk = forms_rank(s.basis);
                return (rk == static_cast<int>(s.basis.size()) ? "ok rank " : "dependent rank ") + std::to_string(rk);
            });
    }
    if (want(Kind::map)) {
        for (const auto& m : maps().get(build_maps))
            check(r, "map.gcd_free", "map:" + m.name, [&] {
                if (m.components.size() != static_cast<std::size_t>(m.target_vars))
                    return std::string("component count");
                int d = m.components.front().degree();
                for (const auto& f : m.components)
                    if (f.degree() != d)
                        return std::string("inhomogeneous");
                if (m.source_vars == 4 && form_gcd(m.components).degree() != 0)
                    return std::string("common factor");
                return std::string("ok");
            });
    }
    return r;
}

nlohmann::json curve_json(const CurveEntry& c)
{
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& comp : c.components) {
        nlohmann::json eq = nlohmann::json::array();
        for (const auto& f : comp.equations())
            eq.push_back(f.str());
        nlohmann::json j{{"degree", comp.degree}, {"equations", eq}};
        if (comp.line)
            j["points"] = {comp.line->a().str(), comp.line->b().str()};
        comps.push_back(j);
    }
    return {{"name", c.name}, {"degree", c.degree}, {"ambient_group", c.ambient_group}, {"components", comps}};
}

nlohmann::json catalog_dump(const CatalogKey& key)
{
    nlohmann::json j{{"kind", kind_name(key.kind)}, {"name", key.name}};
    switch (key.kind) {
    case Kind::group: {
        const auto& e = group_entry(key.name);
        j["descriptor"] = group_descriptor(e.generators);
        j["order"] = load_group(key.name).order();
        j["lambda"] = e.lambda;
        break;
    }
    case Kind::point: {
        const auto& p = load_point(key.name);
        j["point"] = p.seed.str();
        if (!p.group.empty()) {
            j["group"] = p.group;
            j["orbit_length"] = p.expected_length;
        }
        break;
    }
    case Kind::surface: j["form"] = load_surface(key.name).str(); break;
    case Kind::curve: j["curve"] = curve_json(load_curve(key.name)); break;
    case Kind::system: {
        const auto& s = load_system(key.name);
        j["degree"] = s.degree;
        for (const auto& f : s.basis)
            j["basis"].push_back(f.str());
        break;
    }
    case Kind::map: {
        const auto& m = load_map(key.name);
        j["source_vars"] = m.source_vars;
        j["target_vars"] = m.target_vars;
        for (const auto& f : m.components)
            j["components"].push_back(f.str());
        break;
    }
    }
    return j;
}

}  // namespace solidus
