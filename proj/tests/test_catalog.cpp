#include "solidus/catalog.hpp"
#include "solidus/netlab.hpp"
#include "solidus/properties.hpp"

#include <doctest.h>

using namespace solidus;

TEST_CASE("typed loads")
{
    const auto& e = group_entry("G_324_160prime");
    CHECK(e.generators.size() == 5);
    CHECK(load_group("G_324_160prime").order() == 324);
    CHECK(load_surface("Q1") == Form::parse("x0^2+x1^2+x2^2+x3^2"));
    const auto& psi = load_map("psi");
    CHECK(psi.components.size() == 14);
    for (const auto& c : psi.components) {
        CHECK(c.degree() == 6);
        CHECK(c.size() == 1);
    }
    CHECK_THROWS_AS(load_group("G_1_1"), std::out_of_range);
    CHECK(!catalog_has({Kind::surface, "nope"}));
    CHECK(std::holds_alternative<SurfaceEntry>(load({Kind::surface, "T"})));
}

TEST_CASE("self-check passes and the negative control fails")
{
    auto r = catalog_selfcheck();
    for (const auto& c : r.checks) {
        INFO(c.id << " " << c.key << ": " << c.detail);
        CHECK(c.pass);
    }
    SelfCheckOptions bad;
    bad.corrupt_generator = true;
    bad.kind = Kind::group;
    auto rb = catalog_selfcheck(bad);
    CHECK(rb.failures() >= 1);
}

TEST_CASE("curve component counts")
{
    SelfCheckOptions o;
    o.kind = Kind::curve;
    CHECK(catalog_selfcheck(o).failures() == 0);
    CHECK(load_curve("L6primeprimeprimeprime").components.size() == 6);
    CHECK(load_curve("L6primeprimeprime").components.size() == 6);
    CHECK(load_curve("L4").components.size() == 4);
    CHECK(load_curve("C8_1").components.size() == 4);
}

TEST_CASE("named surfaces")
{
    // T is the coordinate tetrahedron; f4 has nodes at the coordinate points
    CHECK(load_surface("T") == Form::parse("x0*x1*x2*x3"));
    CHECK(vanishing_order_at_point(load_surface("f4"), ProjPoint::parse("1,0,0,0")) == 2);
    CHECK(vanishing_order_at_point(load_surface("f5"), ProjPoint::parse("1,0,0,0")) == 2);
    Form r1 = form_linear_substitute(load_surface("Q1"), named_linear_matrix("R"));
    CHECK(forms_rank({r1, load_surface("Q1")}) == 1);
}

TEST_CASE("twisted cubic family")
{
    for (long sv : {0L, 1L, 3L, -2L}) {
        CycNum s(sv);
        auto h = twisted_cubic(s);
        CHECK(h.size() == 3);
        CHECK(forms_rank(h) == 3);
        for (const auto& p : twisted_cubic_points(s))
            for (const auto& f : h)
                CHECK(form_eval(f, p).is_zero());
    }
}

TEST_CASE("dump is stable")
{
    auto a = catalog_dump({Kind::group, "G_48_50"}).dump();
    auto b = catalog_dump({Kind::group, "G_48_50"}).dump();
    CHECK(a == b);
    CHECK(catalog_dump({Kind::point, "Sigma12"})["orbit_length"] == 12);
}

TEST_CASE("containment examples")
{
    CHECK(curve_in_surface(load_curve("C8_1"), load_surface("Q1")));
    CHECK(curve_in_surface(load_curve("L6"), load_surface("T")));
    CHECK(!curve_in_surface(load_curve("L4"), load_surface("Q2")));
}

TEST_CASE("catalog properties under seeds 0..2")
{
    for (std::uint64_t seed = 0; seed < 3; ++seed)
        for (const auto& r : run_properties(seed, "catalog")) {
            INFO(r.name << " seed " << seed << ": " << r.detail);
            CHECK(r.pass);
        }
}
