#include "solidus/properties.hpp"

#include <doctest.h>

#include <algorithm>

using namespace solidus;

TEST_CASE("every property holds under seeds 0, 1 and 2")
{
    for (const auto& name : property_names())
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto r = run_property(name, seed);
            INFO(name << " seed " << seed << ": " << r.detail);
            CHECK(r.pass);
        }
}

TEST_CASE("property registry")
{
    auto names = property_names();
    CHECK(names.size() >= 30);
    for (const char* m : {"exactmath.", "projgroup.", "catalog.", "invariants.", "netlab.", "birational."})
        CHECK(std::any_of(names.begin(), names.end(), [&](const std::string& n) { return n.rfind(m, 0) == 0; }));
    CHECK_THROWS_AS(run_property("nope.nothing", 0), std::out_of_range);
}

TEST_CASE("reduced words")
{
    CHECK(reduced_words(1).size() == 3);
    CHECK(reduced_words(2).size() == 6);
    CHECK(reduced_words(3).size() == 12);
    for (const auto& w : reduced_words(3))
        for (std::size_t k = 1; k < w.size(); ++k)
            CHECK(w[k] != w[k - 1]);
}
