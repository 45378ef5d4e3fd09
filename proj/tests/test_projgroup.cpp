#include "solidus/catalog.hpp"
#include "solidus/projgroup.hpp"
#include "solidus/properties.hpp"

#include <doctest.h>

using namespace solidus;

namespace {

std::vector<ProjPoint> base()
{
    return {ProjPoint::parse("1,0,0,0"), ProjPoint::parse("0,1,0,0"), ProjPoint::parse("0,0,1,0"),
            ProjPoint::parse("0,0,0,1")};
}

ProjLine coord_line(int i, int j) { return ProjLine(base()[i], base()[j]); }

}  // namespace

TEST_CASE("closure orders")
{
    CHECK(load_group("G_48_50").order() == 48);
    CHECK(load_group("G_648_704").order() == 648);
    CHECK(group_closure({ProjMap::identity()}).order() == 1);
    CHECK(group_closure({ProjMap::diagonal(CycNum(-1), CycNum(1), CycNum(1))}).order() == 2);
}

TEST_CASE("closure cap is enforced")
{
    // a unipotent matrix has infinite order
    Matrix u = matrix_identity(4);
    u[0][1] = CycNum(1);
    CHECK_THROWS_AS(group_closure({ProjMap(u)}, 50), math_error);
}

TEST_CASE("projective normalization")
{
    Matrix m = named_linear_matrix("R");
    Matrix scaled = m;
    for (auto& row : scaled)
        for (auto& x : row)
            x *= cyc_constant("zeta8");
    CHECK(ProjMap(m) == ProjMap(scaled));
    CHECK(ProjMap(m).pow(3).is_identity());
    CHECK((ProjMap(m) * ProjMap(m).inverse()).is_identity());
}

TEST_CASE("fingerprints")
{
    CHECK(fingerprint(load_group("G_96_227")) == fingerprint(load_group("G_96_227prime")));
    auto a = fingerprint(load_group("G_48_50")), b = fingerprint(load_group("G_48_3"));
    CHECK(!(a.element_orders == b.element_orders));
    auto t = fingerprint(group_closure({ProjMap::identity()}));
    CHECK(t.order == 1);
    CHECK(t.element_orders == std::map<int, int>{{1, 1}});
}

TEST_CASE("permutation action on the coordinate points")
{
    auto a = sigma4_action(load_group("G_48_50"), base());
    CHECK(a.image_size == 12);
    CHECK(a.kernel.order() == 4);
    auto b = sigma4_action(load_group("G_648_704"), base());
    CHECK(b.image_size == 24);
    CHECK(b.kernel.order() == 27);
    auto c = sigma4_action(load_group("G_324_160prime"), base());
    CHECK(c.image_size == 12);
    CHECK(c.kernel.order() == 27);
}

TEST_CASE("orbits and stabilizers")
{
    const auto& g = load_group("G_48_50");
    CHECK(orbit(g, ProjPoint::parse("1,0,0,0")).length == 4);
    CHECK(orbit(g, ProjPoint::parse("0,0,1,1")).length == 12);
    CHECK(orbit(g, ProjPoint::parse("1,1,1,2")).length == 16);
    CHECK(stabilizer(g, ProjPoint::parse("1,0,0,0")).order() == 12);
    CHECK(stabilizer(g, ProjPoint::parse("2,3,5,7")).order() == 1);
    CHECK(orbit(g, ProjPoint::parse("2,3,5,7")).length == 48);
    CHECK(stabilizer(g, ProjPoint::parse("1,1,1,2")).order() == 3);
}

TEST_CASE("line intersections")
{
    auto p = line_intersect(coord_line(0, 1), coord_line(0, 2));
    REQUIRE(p);
    CHECK(*p == base()[0]);
    CHECK(!line_intersect(coord_line(0, 1), coord_line(2, 3)));
    const auto& l4 = load_curve("L4").components;
    const auto& l4pp = load_curve("L4primeprime").components;
    auto q = line_intersect(*l4[0].line, *l4pp[0].line);
    for (std::size_t k = 1; !q && k < l4pp.size(); ++k)
        q = line_intersect(*l4[0].line, *l4pp[k].line);
    REQUIRE(q);
    CHECK(orbit(load_group("G_48_50"), load_point("Sigma16_sqrt3i").seed).contains(*q));
}

TEST_CASE("group descriptors round trip")
{
    const auto& gens = load_group("G_96_227").generators();
    auto back = parse_group_descriptor(group_descriptor(gens));
    CHECK(back == gens);
}

TEST_CASE("projgroup properties under seeds 0..2")
{
    for (std::uint64_t seed = 0; seed < 3; ++seed)
        for (const auto& r : run_properties(seed, "projgroup")) {
            INFO(r.name << " seed " << seed << ": " << r.detail);
            CHECK(r.pass);
        }
}
