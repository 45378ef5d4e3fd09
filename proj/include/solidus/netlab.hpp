#pragma once

#include "solidus/catalog.hpp"
#include "solidus/exactmath.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace solidus {

// [a:b:c] in P2, normalized like any ProjPoint
using NetPoint = ProjPoint;

NetPoint net_point(const CycNum& a, const CycNum& b, const CycNum& c);

// a x0x1x2x3 + b sum x_i^2 x_j^2 + c sum x_i^4
Form net_member(const NetPoint& p);

// the eight factors of the discriminant
std::vector<CycNum> net_discriminant_factors(const NetPoint& p);
CycNum net_discriminant(const NetPoint& p);

std::vector<ProjPoint> singular_points_among(const Form& f, const std::vector<ProjPoint>& candidates);

struct NamedOrbit {
    std::string name;
    std::vector<ProjPoint> points;
};

// G_48_50 orbits of the listed catalog points
std::vector<NamedOrbit> named_orbits(const std::vector<std::string>& names);
// Sigma4, Sigma4', Sigma4'', Sigma12 .. Sigma12'''
const std::vector<NamedOrbit>& standard_candidates();
// names of the orbits made entirely of singular points; throws if an orbit is only partly singular
std::vector<std::string> singular_orbits(const Form& f, const std::vector<NamedOrbit>& orbits);

struct Table1Row {
    std::string tag;
    int factor = 0;  // index of the vanishing discriminant factor
    NetPoint parameter;
    std::vector<std::string> expected;  // catalog point keys
};

const std::vector<Table1Row>& table1_rows();

struct Table1Result {
    Table1Row row;
    bool condition_holds = false;
    bool discriminant_zero = false;
    std::vector<std::string> found;
    bool pass = false;
    nlohmann::json to_json() const;
};

Table1Result verify_table1_row(const Table1Row& row);
std::vector<Table1Result> verify_table1();  // rows in parallel, results in row order

// [2t^3+6t : -t^2-1 : 1]
NetPoint net_t_family(const CycNum& t);

struct BaseLocusReport {
    std::size_t points_total = 0;
    std::size_t points_confirmed = 0;
    int trials = 0;
    int generic_lines_with_common_factor = 0;
    int forced_trials = 0;
    int forced_lines_with_common_factor = 0;

    bool points_ok() const { return points_confirmed == points_total; }
    bool generic_clean() const { return generic_lines_with_common_factor == 0; }
    nlohmann::json to_json() const;
};

// Confirms the expected points lie on every basis form; restricts the basis to `trials`
// pseudo-random rational lines and counts those on which the restrictions share a factor.
// Lines forced through each of `forced_through` are tested the same way.
BaseLocusReport base_locus_probe(const std::vector<Form>& basis, const std::vector<ProjPoint>& expected_points,
                                 int trials, std::uint64_t seed = 0,
                                 const std::vector<ProjPoint>& forced_through = {});

// line components: f vanishes at max(5, deg f + 1) points of the line;
// ideal components: f vanishes at 8 sampled zeros of the ideal over F_1009
bool curve_in_surface(const CurveEntry& c, const Form& f, std::uint64_t seed = 0);
bool component_in_surface(const CurveComponent& c, const Form& f, std::uint64_t seed = 0);

int genus_bidegree(int a, int b);

}  // namespace solidus
