#include "solidus/catalog.hpp"
#include "solidus/invariants.hpp"
#include "solidus/properties.hpp"

#include <doctest.h>

using namespace solidus;

TEST_CASE("lifted group orders")
{
    CHECK(lifted_group("H_hat").order() == 32);
    CHECK(lifted_group("G_hat").order() == 96);
    CHECK(lifted_group("G_96_227_hat").order() == 192);
    CHECK(lifted_group("G_144_184_hat").order() == 288);
    CHECK(lifted_group("trivial").order() == 1);
}

TEST_CASE("invariant quartics")
{
    CHECK(invariant_basis(lifted_group("H_hat"), 4).size() == 5);
    auto g = invariant_basis(lifted_group("G_hat"), 4);
    CHECK(g.size() == 3);
    std::vector<Form> net = load_system("M4").basis;
    CHECK(forms_rank(net) == 3);
    for (const auto& f : g)
        CHECK(form_in_span(f, net));
    CHECK(invariant_basis(lifted_group("G_hat"), 1).empty());
    CHECK(invariant_basis(lifted_group("H_hat"), 1).empty());
    CHECK(invariant_basis(lifted_group("trivial"), 2).size() == 10);
}

TEST_CASE("character splits")
{
    auto g96 = semi_invariant_split(lifted_group("G_96_227_hat"), 4);
    std::size_t trivial = 0;
    for (const auto& c : g96.characters)
        trivial += c.trivial() ? c.basis.size() : 0;
    CHECK(trivial == 3);
    REQUIRE(g96.blocks.size() == 1);
    CHECK(g96.blocks.front().size() == 2);
    CHECK(g96.dimension() == 5);

    auto g144 = semi_invariant_split(lifted_group("G_144_184_hat"), 4);
    CHECK(g144.blocks.empty());
    REQUIRE(g144.characters.size() == 5);
    std::vector<Form> expected{load_surface("f1").pow(2), load_surface("f2"), load_surface("f3"), load_surface("f4"),
                               load_surface("f5")};
    for (const auto& c : g144.characters) {
        REQUIRE(c.basis.size() == 1);
        int hits = 0;
        for (const auto& e : expected)
            hits += forms_rank({c.basis.front(), e}) == 1;
        CHECK(hits == 1);
    }

    auto triv = semi_invariant_split(lifted_group("trivial"), 2);
    REQUIRE(triv.characters.size() == 1);
    CHECK(triv.characters.front().basis.size() == 10);
    CHECK(triv.ambient == "full");
}

TEST_CASE("semi-invariance of single forms and pencils")
{
    const auto& g = lifted_group("G_48_50");
    auto t = is_semi_invariant(g, Form::parse("x0*x1*x2*x3"));
    REQUIRE(t);
    CHECK(!is_semi_invariant(g, Form::variable(4, 0)));
    const auto& g324 = lifted_group("G_324_160prime");
    const auto& pencil = load_system("pencil51").basis;
    CHECK(pencil.size() == 2);
    CHECK(!is_semi_invariant(g324, pencil.front()));
    CHECK(span_preserved(g324, pencil));
}

TEST_CASE("invariants properties under seeds 0..2")
{
    for (std::uint64_t seed = 0; seed < 3; ++seed)
        for (const auto& r : run_properties(seed, "invariants")) {
            INFO(r.name << " seed " << seed << ": " << r.detail);
            CHECK(r.pass);
        }
}

TEST_CASE("invariant cubic of the order 648 groups")
{
    Form fermat = load_surface("fermat_cubic");
    auto preserved = [&](const std::string& key) {
        for (const auto& g : load_group(key).generators())
            if (forms_rank({form_linear_substitute(fermat, g.matrix()), fermat}) != 1)
                return false;
        return true;
    };
    CHECK(preserved("G_648_704"));
    CHECK(!preserved("G_648_704prime"));
}
