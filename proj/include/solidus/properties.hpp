#pragma once

#include "solidus/birational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace solidus {

struct PropertyResult {
    std::string module;
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<std::string> property_names();  // "module.name"
PropertyResult run_property(const std::string& name, std::uint64_t seed);
std::vector<PropertyResult> run_properties(std::uint64_t seed, const std::string& module = {});

// G_48_50-invariant systems of degree <= 6: fixed members plus seeded random ones
std::vector<LinearSystem> sampled_invariant_systems(std::uint64_t seed, int count = 20);
// seeded form with small integer coefficients on every monomial of degree d
Form random_form(Rng& rng, int nvars, int d, long bound = 5);
// all reduced words over {iota, iota_prime, iota_double_prime} of the given length
std::vector<std::vector<std::string>> reduced_words(int length);

}  // namespace solidus
