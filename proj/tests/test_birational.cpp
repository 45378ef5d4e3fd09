#include "solidus/birational.hpp"
#include "solidus/properties.hpp"

#include <doctest.h>

#include <fstream>

using namespace solidus;

namespace {

Form F(const std::string& s) { return Form::parse(s, 4); }

std::vector<Form> monic_all(std::vector<Form> fs)
{
    for (auto& f : fs)
        f = f.monic();
    std::sort(fs.begin(), fs.end());
    return fs;
}

const OrbitRecord& sigma4()
{
    static const OrbitRecord o = orbit(load_group("G_48_50"), load_point("Sigma4").seed);
    return o;
}

}  // namespace

TEST_CASE("compositions and degrees")
{
    RationalMap i = involution("iota"), ip = involution("iota_prime"), ipp = involution("iota_double_prime");
    auto id = map_compose(i, i).as_projective();
    REQUIRE(id);
    CHECK(id->is_identity());
    CHECK(map_compose(i, ip).degree() == 9);
    CHECK(map_compose(ip, ip).degree() == 1);
    CHECK(map_compose(ipp, ipp).degree() == 1);
}

TEST_CASE("map equality")
{
    CHECK(maps_equal(involution("iota_prime"), map_from_catalog("iota_prime"), 10));
    CHECK(maps_equal(involution("iota_double_prime"), map_from_catalog("iota_double_prime"), 10));
    CHECK(!maps_equal(involution("iota"), involution("iota_prime"), 3));
    CHECK(maps_equal(RationalMap::identity(), RationalMap::identity(), 3));
    CHECK(maps_equal(involution("iota"), map_from_catalog("iota"), 5));
}

TEST_CASE("conjugation check")
{
    CHECK(conjugation_check(cremona_iota(), load_group("G_48_50")));
    CHECK(conjugation_check(cremona_iota(), load_group("G_96_227")));
    CHECK(!conjugation_check(cremona_iota(), group_closure({named_matrix("R")})));
}

TEST_CASE("pullbacks of linear systems")
{
    RationalMap i = involution("iota");
    LinearSystem h = LinearSystem::hyperplanes();
    LinearSystem cubics = pullback_system(i, h);
    CHECK(cubics.degree == 3);
    CHECK(monic_all(cubics.basis) == monic_all({F("x1*x2*x3"), F("x0*x2*x3"), F("x0*x1*x3"), F("x0*x1*x2")}));
    CHECK(pullback_system(i, cubics).degree == 1);
    LinearSystem cp = pullback_system(involution("iota_prime"), h);
    CHECK(cp.degree == 3);
    std::vector<Form> catalog_forms = map_from_catalog("iota_prime").components();
    CHECK(forms_rank(cp.basis) == 4);
    for (const auto& f : catalog_forms)
        CHECK(form_in_span(f, cp.basis));
}

TEST_CASE("multiplicities")
{
    RationalMap i = involution("iota");
    LinearSystem cubics = pullback_system(i, LinearSystem::hyperplanes());
    CHECK(system_mult_at_orbit(cubics, sigma4()) == 2);
    CHECK(system_mult_at_orbit(LinearSystem::hyperplanes(), sigma4()) == 0);
    OrbitRecord s4p = orbit(load_group("G_48_50"), load_point("Sigma4prime").seed);
    CHECK(system_mult_at_orbit(pullback_system(involution("iota_prime"), LinearSystem::hyperplanes()), s4p) == 2);
    CHECK(system_mult_along_curve(LinearSystem::of(load_system("psi_sextics").basis), load_curve("L6")) == 2);
    CHECK(system_mult_along_curve(cubics, load_curve("L6")) == 1);
    CHECK(system_mult_along_curve(LinearSystem::hyperplanes(), load_curve("L6")) == 0);
}

TEST_CASE("untwisting ledgers")
{
    LinearSystem h = LinearSystem::hyperplanes();
    UntwistLedger a = untwist_ledger(pullback_system(involution("iota"), h));
    CHECK(a.n == 3);
    CHECK(a.m_sigma4 == 2);
    CHECK(a.m_L6 == 1);
    CHECK(a.k == mpq_class(1, 2));
    CHECK(a.untwists_iota());
    CHECK(a.predicates_true() == 1);

    UntwistLedger b = untwist_ledger(h);
    CHECK(b.m_sigma4 + b.m_sigma4p + b.m_sigma4pp + b.m_L6 + b.m_L6p + b.m_L6pp == 0);
    CHECK(b.predicates_true() == 0);

    UntwistLedger c = untwist_ledger(pullback_system(involution("iota_prime"), h));
    CHECK(c.untwists_iota_prime());
    CHECK(!c.untwists_iota());
    CHECK(!c.untwists_iota_double_prime());
    CHECK(c.m_Ephi == (6 * c.k - c.n) / 4);

    UntwistLedger d = untwist_ledger(pullback_system(involution("iota_double_prime"), h));
    CHECK(d.untwists_iota_double_prime());
    CHECK(d.predicates_true() == 1);
}

TEST_CASE("decompositions")
{
    Decomposition a = sarkisov_decompose(involution("iota"));
    CHECK(a.word.letters == std::vector<std::string>{"iota"});
    CHECK(a.word.tail.is_identity());

    RationalMap m = map_compose(involution("iota_prime"), involution("iota"));
    Decomposition b = sarkisov_decompose(m);
    CHECK(b.word.letters == std::vector<std::string>{"iota", "iota_prime"});
    CHECK(b.word.tail.is_identity());
    CHECK(maps_equal(word_map(b.word), m, 10));

    Decomposition c = sarkisov_decompose(RationalMap::linear(named_linear_matrix("R")));
    CHECK(c.word.letters.empty());
    CHECK(c.word.tail == named_matrix("R"));

    // a linear factor on the left ends up in the tail
    ProjMap g = load_group("G_48_50").elements()[5];
    RationalMap gm = map_compose(RationalMap::linear(g.matrix()), m);
    Decomposition e = sarkisov_decompose(gm);
    CHECK(e.word.letters.size() == 2);
    CHECK(maps_equal(word_map(e.word), gm, 5));
}

TEST_CASE("shipped example map equals iota' o iota")
{
    std::ifstream in(std::string(SOLIDUS_DATA_DIR) + "/iota_prime_iota.json");
    REQUIRE(in);
    auto j = nlohmann::json::parse(in);
    std::vector<Form> comps;
    for (const auto& c : j["components"])
        comps.push_back(F(c.get<std::string>()));
    RationalMap file(4, comps);
    CHECK(j["degree"] == 9);
    RationalMap m = map_compose(involution("iota_prime"), involution("iota"));
    CHECK(file.components() == m.components());
}

TEST_CASE("diagram through V2")
{
    std::vector<CycNum> ones(5, CycNum(1));
    CHECK(diagram_commutes_at(ones));
    DiagramReport r = verify_diagram_63(100, 0);
    CHECK(r.samples == 100);
    CHECK(r.matches == 100);
    CHECK(r.eta_matches == r.eta_checks);
    CHECK(r.eta_checks >= 150);
    CHECK(psi_plane_target(0) == 12);
    for (int i = 0; i < 4; ++i)
        CHECK(psi_contracts_plane(i, 5) == 5);
}

TEST_CASE("sampled invariant systems")
{
    auto s = sampled_invariant_systems(0);
    CHECK(s.size() == 20);
    for (const auto& x : s)
        CHECK(x.degree <= 6);
    CHECK(sampled_invariant_systems(1).size() == 20);
}

TEST_CASE("birational properties under seed 0")
{
    for (const auto& r : run_properties(0, "birational")) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
    }
}
