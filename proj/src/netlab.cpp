#include "solidus/netlab.hpp"

#include "solidus/modp.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace solidus {

NetPoint net_point(const CycNum& a, const CycNum& b, const CycNum& c) { return ProjPoint({a, b, c}); }

Form net_member(const NetPoint& p)
{
    if (p.dim() != 3)
        throw std::invalid_argument("net point must have three coordinates");
    const auto& basis = load_system("M4").basis;
    return p[0] * basis[0] + p[1] * basis[1] + p[2] * basis[2];
}

std::vector<CycNum> net_discriminant_factors(const NetPoint& p)
{
    const CycNum &a = p[0], &b = p[1], &c = p[2];
    CycNum k2(2), k4(4), k6(6), k12(12), k16(16);
    return {c,
            b + k2 * c,
            b - k2 * c,
            a + k2 * b - k4 * c,
            a - k2 * b + k4 * c,
            a - k6 * b - k4 * c,
            a + k6 * b + k4 * c,
            a * a * c + k4 * b * b * b - k12 * b * b * c + k16 * c * c * c};
}

CycNum net_discriminant(const NetPoint& p)
{
    CycNum d(1);
    for (const auto& f : net_discriminant_factors(p))
        d *= f;
    return d;
}

std::vector<ProjPoint> singular_points_among(const Form& f, const std::vector<ProjPoint>& candidates)
{
    if (f.is_zero())
        throw std::invalid_argument("singular_points_among: zero form");
    std::vector<Form> partials;
    for (int i = 0; i < f.nvars(); ++i)
        partials.push_back(f.derivative(i));
    std::vector<ProjPoint> out;
    for (const auto& p : candidates)
        if (std::all_of(partials.begin(), partials.end(), [&](const Form& d) { return form_eval(d, p).is_zero(); }))
            out.push_back(p);
    return out;
}

std::vector<NamedOrbit> named_orbits(const std::vector<std::string>& names)
{
    const MatrixGroup& g = load_group("G_48_50");
    std::vector<NamedOrbit> out;
    for (const auto& n : names)
        out.push_back({n, orbit(g, load_point(n).seed).points});
    return out;
}

const std::vector<NamedOrbit>& standard_candidates()
{
    static const std::vector<NamedOrbit> c = named_orbits({"Sigma4", "Sigma4prime", "Sigma4primeprime", "Sigma12",
                                                           "Sigma12prime", "Sigma12primeprime",
                                                           "Sigma12primeprimeprime"});
    return c;
}

std::vector<std::string> singular_orbits(const Form& f, const std::vector<NamedOrbit>& orbits)
{
    std::vector<std::string> out;
    for (const auto& o : orbits) {
        std::size_t n = singular_points_among(f, o.points).size();
        if (n == o.points.size())
            out.push_back(o.name);
        else if (n != 0)
            throw math_error("orbit " + o.name + " is only partly singular");
    }
    return out;
}

const std::vector<Table1Row>& table1_rows()
{
    static const std::vector<Table1Row> rows = [] {
        auto np = [](long a, long b, long c) { return net_point(CycNum(a), CycNum(b), CycNum(c)); };
        std::vector<Table1Row> r;
        r.push_back({"c=0, generic", 0, np(1, 1, 0), {"Sigma4"}});
        r.push_back({"c=0, [a:b:0]=[6:1:0]", 0, np(6, 1, 0), {"Sigma4", "Sigma4prime"}});
        r.push_back({"c=0, [a:b:0]=[-6:1:0]", 0, np(-6, 1, 0), {"Sigma4", "Sigma4primeprime"}});
        r.push_back({"c=0, [a:b:0]=[2:1:0]", 0, np(2, 1, 0), {"Sigma4", "Sigma12primeprimeprime"}});
        r.push_back({"c=0, [a:b:0]=[-2:1:0]", 0, np(-2, 1, 0), {"Sigma4", "Sigma12primeprime"}});
        r.push_back({"b+2c=0, [a:b:c] != [+-8:-2:1]", 1, np(1, -2, 1), {"Sigma12"}});
        r.push_back({"b-2c=0, generic", 2, np(1, 2, 1), {"Sigma12prime"}});
        r.push_back({"b-2c=0, [a:b:c]=[16:2:1]", 2, np(16, 2, 1), {"Sigma12prime", "Sigma4prime"}});
        r.push_back({"b-2c=0, [a:b:c]=[-16:2:1]", 2, np(-16, 2, 1), {"Sigma12prime", "Sigma4primeprime"}});
        r.push_back({"a+2b-4c=0, generic", 3, np(2, 1, 1), {"Sigma12primeprime"}});
        r.push_back({"a+2b-4c=0, [a:b:c]=[4:0:1]", 3, np(4, 0, 1), {"Sigma12primeprime", "Sigma4prime"}});
        r.push_back({"a-2b+4c=0, generic", 4, np(-2, 1, 1), {"Sigma12primeprimeprime"}});
        r.push_back({"a-2b+4c=0, [a:b:c]=[-4:0:1]", 4, np(-4, 0, 1), {"Sigma12primeprimeprime", "Sigma4primeprime"}});
        r.push_back({"a-6b-4c=0, generic", 5, np(10, 1, 1), {"Sigma4prime"}});
        r.push_back({"a-6b-4c=0, [a:b:c]=[0:-2:3]", 5, np(0, -2, 3), {"Sigma4prime", "Sigma4primeprime"}});
        r.push_back({"a+6b+4c=0, generic", 6, np(-10, 1, 1), {"Sigma4primeprime"}});
        return r;
    }();
    return rows;
}

nlohmann::json Table1Result::to_json() const
{
    return {{"condition", row.tag},
            {"parameter", row.parameter.str()},
            {"condition_holds", condition_holds},
            {"discriminant_zero", discriminant_zero},
            {"expected", row.expected},
            {"found", found},
            {"status", pass ? "pass" : "fail"}};
}

Table1Result verify_table1_row(const Table1Row& row)
{
    Table1Result r;
    r.row = row;
    r.condition_holds = net_discriminant_factors(row.parameter)[row.factor].is_zero();
    r.discriminant_zero = net_discriminant(row.parameter).is_zero();
    r.found = singular_orbits(net_member(row.parameter), standard_candidates());
    auto e = row.expected, f = r.found;
    std::sort(e.begin(), e.end());
    std::sort(f.begin(), f.end());
    r.pass = r.condition_holds && r.discriminant_zero && e == f;
    return r;
}

std::vector<Table1Result> verify_table1()
{
    standard_candidates();
    std::vector<std::future<Table1Result>> jobs;
    for (const auto& row : table1_rows())
        jobs.push_back(std::async(std::launch::async, [&row] { return verify_table1_row(row); }));
    std::vector<Table1Result> out;
    for (auto& j : jobs)
        out.push_back(j.get());
    return out;
}

NetPoint net_t_family(const CycNum& t)
{
    CycNum t2 = t * t;
    return net_point(CycNum(2) * t2 * t + CycNum(6) * t, -t2 - CycNum(1), CycNum(1));
}

nlohmann::json BaseLocusReport::to_json() const
{
    return {{"points_total", points_total},
            {"points_confirmed", points_confirmed},
            {"trials", trials},
            {"generic_lines_with_common_factor", generic_lines_with_common_factor},
            {"forced_trials", forced_trials},
            {"forced_lines_with_common_factor", forced_lines_with_common_factor}};
}

namespace {

ProjPoint random_point(Rng& rng, int n)
{
    for (;;) {
        std::vector<CycNum> x;
        bool nz = false;
        for (int i = 0; i < n; ++i) {
            x.emplace_back(rng.range(-20, 20));
            nz = nz || !x.back().is_zero();
        }
        if (nz)
            return ProjPoint(x);
    }
}

bool common_factor_on_line(const std::vector<Form>& basis, const ProjPoint& a, const ProjPoint& b)
{
    std::vector<Form> r;
    for (const auto& f : basis) {
        Form g = form_restrict_to_line(f, a, b);
        if (!g.is_zero())
            r.push_back(g);
    }
    if (r.empty())
        return true;  // the whole line is in the base locus
    return form_gcd(r).degree() > 0;
}

}  // namespace

BaseLocusReport base_locus_probe(const std::vector<Form>& basis, const std::vector<ProjPoint>& expected_points,
                                 int trials, std::uint64_t seed, const std::vector<ProjPoint>& forced_through)
{
    if (basis.empty())
        throw std::invalid_argument("base_locus_probe: empty system");
    int n = basis.front().nvars();
    BaseLocusReport rep;
    rep.points_total = expected_points.size();
    for (const auto& p : expected_points)
        if (std::all_of(basis.begin(), basis.end(), [&](const Form& f) { return form_eval(f, p).is_zero(); }))
            ++rep.points_confirmed;
    Rng rng(seed);
    rep.trials = trials;
    for (int k = 0; k < trials; ++k) {
        ProjPoint a = random_point(rng, n), b = random_point(rng, n);
        if (a == b) {
            --k;
            continue;
        }
        rep.generic_lines_with_common_factor += common_factor_on_line(basis, a, b);
    }
    for (const auto& p : forced_through) {
        ProjPoint b = random_point(rng, n);
        if (b == p)
            b = random_point(rng, n);
        ++rep.forced_trials;
        rep.forced_lines_with_common_factor += common_factor_on_line(basis, p, b);
    }
    return rep;
}

bool component_in_surface(const CurveComponent& c, const Form& f, std::uint64_t seed)
{
    if (c.line) {
        int samples = std::max(5, f.degree() + 1);
        for (int k = 0; k < samples; ++k) {
            ProjPoint p = k == 0 ? c.line->a() : c.line->point_at(CycNum(1), CycNum(k - 1));
            if (!form_eval(f, p).is_zero())
                return false;
        }
        return true;
    }
    const auto& F = modp::Field::small();
    std::vector<modp::ModForm> gens;
    for (const auto& g : c.ideal)
        gens.push_back(modp::reduce_form(F, g));
    Rng rng(seed);
    auto pts = modp::sample_zeros(F, gens, 8, rng);
    if (pts.size() < 8)
        throw math_error("curve sampling found only " + std::to_string(pts.size()) + " points");
    modp::ModForm mf = modp::reduce_form(F, f);
    return std::all_of(pts.begin(), pts.end(), [&](const auto& x) { return modp::eval(F, mf, x) == 0; });
}

bool curve_in_surface(const CurveEntry& c, const Form& f, std::uint64_t seed)
{
    for (std::size_t k = 0; k < c.components.size(); ++k)
        if (!component_in_surface(c.components[k], f, seed + k))
            return false;
    return true;
}

int genus_bidegree(int a, int b)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("genus_bidegree: bidegree must be positive");
    return a * b - a - b + 1;
}

}  // namespace solidus
