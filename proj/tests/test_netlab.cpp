#include "solidus/netlab.hpp"
#include "solidus/properties.hpp"

#include <doctest.h>

using namespace solidus;

namespace {

NetPoint np(long a, long b, long c) { return net_point(CycNum(a), CycNum(b), CycNum(c)); }

std::vector<std::string> sorted(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("net members")
{
    CHECK(net_member(np(1, 0, 0)) == load_surface("T"));
    CHECK(forms_rank({net_member(np(0, 2, 1)), load_surface("f1").pow(2)}) == 1);
    CHECK(forms_rank({net_member(np(-8, -2, 1)), load_surface("Tprime")}) == 1);
}

TEST_CASE("discriminant")
{
    CHECK(net_discriminant(np(1, 0, 0)).is_zero());
    CHECK(net_discriminant_factors(np(1, 0, 0))[0].is_zero());
    CHECK(net_discriminant(np(0, 2, 1)).is_zero());
    CHECK(net_discriminant_factors(np(0, 2, 1))[2].is_zero());
    // eight factors at [1:1:1]: 1, 3, -1, -1, 3, -9, 11, 9
    CHECK(net_discriminant(np(1, 1, 1)) == CycNum(-8019));
}

TEST_CASE("singular candidates")
{
    CHECK(sorted(singular_orbits(net_member(np(6, 1, 0)), standard_candidates())) ==
          sorted({"Sigma4", "Sigma4prime"}));
    CHECK(singular_orbits(load_surface("f2"), standard_candidates()) == std::vector<std::string>{"Sigma12"});
    CHECK(singular_orbits(load_surface("f1"), standard_candidates()).empty());
}

TEST_CASE("every row of the singular-locus table")
{
    for (const auto& r : verify_table1()) {
        INFO(r.row.tag);
        CHECK(r.condition_holds);
        CHECK(r.discriminant_zero);
        CHECK(r.pass);
    }
}

TEST_CASE("t family")
{
    for (long t : {2L, 3L}) {
        NetPoint p = net_t_family(CycNum(t));
        CHECK(net_discriminant(p).is_zero());
        auto pts = orbit(load_group("G_48_50"), sigma16_t(CycNum(t))).points;
        CHECK(singular_points_among(net_member(p), pts).size() == 16);
    }
}

TEST_CASE("base locus probes")
{
    auto s16 = named_orbits({"Sigma16", "Sigma16prime"});
    std::vector<ProjPoint> pts = s16[0].points;
    pts.insert(pts.end(), s16[1].points.begin(), s16[1].points.end());
    auto r = base_locus_probe(load_system("M4").basis, pts, 20, 0);
    CHECK(r.points_confirmed == 32);
    CHECK(r.generic_clean());

    std::vector<ProjPoint> curve_pts, forced;
    for (const char* c : {"L6primeprimeprime", "L6primeprimeprimeprime"})
        for (const auto& comp : load_curve(c).components) {
            for (long k = 0; k < 3; ++k)
                curve_pts.push_back(comp.line->point_at(CycNum(1), CycNum(k)));
            forced.push_back(comp.line->point_at(CycNum(1), CycNum(2)));
        }
    auto m6 = base_locus_probe(load_system("M6").basis, curve_pts, 20, 0, forced);
    CHECK(m6.points_ok());
    CHECK(m6.generic_clean());
    CHECK(m6.forced_lines_with_common_factor == m6.forced_trials);
}

TEST_CASE("containment and genus")
{
    CHECK(curve_in_surface(load_curve("C8_1"), load_surface("Q1")));
    CHECK(curve_in_surface(load_curve("L6"), load_surface("T")));
    CHECK(!curve_in_surface(load_curve("L4"), load_surface("Q2")));
    CHECK(curve_in_surface(load_curve("curve51"), load_system("pencil51").basis[0]));
    CHECK(genus_bidegree(4, 4) == 9);
    CHECK(genus_bidegree(4, 8) == 21);
    CHECK(genus_bidegree(1, 1) == 0);
}

TEST_CASE("netlab properties under seeds 0..2")
{
    for (std::uint64_t seed = 0; seed < 3; ++seed)
        for (const auto& r : run_properties(seed, "netlab")) {
            INFO(r.name << " seed " << seed << ": " << r.detail);
            CHECK(r.pass);
        }
}
