#pragma once

#include "solidus/exactmath.hpp"
#include "solidus/projgroup.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace solidus {

enum class Kind { group, point, surface, curve, system, map };

std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);

struct CatalogKey {
    Kind kind;
    std::string name;

    bool operator==(const CatalogKey& o) const = default;
    std::string str() const { return kind_name(kind) + ":" + name; }
};

struct GroupEntry {
    std::string name;
    std::vector<ProjMap> generators;
    std::size_t expected_order = 0;
    std::array<long, 3> lambda{1, 1, 1};  // Cremona twist defaults
};

struct PointEntry {
    std::string name;
    ProjPoint seed;
    std::string group;  // group whose orbit is meant; empty for bare points
    std::size_t expected_length = 0;
};

struct SurfaceEntry {
    std::string name;
    Form form;
};

// A component is a line (spanning points) or the zero set of ideal generators.
struct CurveComponent {
    std::optional<ProjLine> line;
    std::vector<Form> ideal;
    int degree = 0;

    std::vector<Form> equations() const;
};

struct CurveEntry {
    std::string name;
    int degree = 0;
    std::size_t expected_components = 0;
    std::string ambient_group;
    std::vector<CurveComponent> components;
};

struct SystemEntry {
    std::string name;
    int degree = 0;
    std::vector<Form> basis;
};

struct MapEntry {
    std::string name;
    int source_vars = 4;
    int target_vars = 4;
    std::vector<Form> components;
};

using CatalogObject = std::variant<GroupEntry, PointEntry, SurfaceEntry, CurveEntry, SystemEntry, MapEntry>;

std::vector<CatalogKey> catalog_keys();
bool catalog_has(const CatalogKey& key);
CatalogObject load(const CatalogKey& key);

// Typed accessors; throw std::out_of_range on unknown names.
const GroupEntry& group_entry(const std::string& name);
const MatrixGroup& load_group(const std::string& name);  // closed and cached
const PointEntry& load_point(const std::string& name);
const Form& load_surface(const std::string& name);
const CurveEntry& load_curve(const std::string& name);
const SystemEntry& load_system(const std::string& name);
const MapEntry& load_map(const std::string& name);

// Frequently used matrices.
ProjMap named_matrix(const std::string& name);  // M, N, L, A, B, Aprime, Bprime, R, and the 192 variants
Matrix named_linear_matrix(const std::string& name);  // same, without projective normalization

// Sigma16^t = Orb([1:1:1:t])
ProjPoint sigma16_t(const CycNum& t);
// Twisted cubic C_s through Orb_Gamma([i:s:si:1]), as the three quadrics h1, h2, h3.
std::vector<Form> twisted_cubic(const CycNum& s);
std::vector<ProjPoint> twisted_cubic_points(const CycNum& s);

// Canonical keys for comparing lines and ideals.
Matrix line_key(const ProjLine& l);
Matrix ideal_key(const std::vector<Form>& gens);
ProjLine map_line(const ProjMap& g, const ProjLine& l);
// generators of g(V(I)), i.e. f(g^{-1} x)
std::vector<Form> map_ideal(const ProjMap& g, const std::vector<Form>& gens);
// all components obtained from the seed under the group (breadth-first over generators)
std::vector<CurveComponent> component_orbit(const MatrixGroup& g, const CurveComponent& seed);
// index of a component equal to c in the list, -1 if none
int find_component(const std::vector<CurveComponent>& list, const CurveComponent& c);
CurveComponent map_component(const ProjMap& g, const CurveComponent& c);

// f pulled back by g, projectively proportional to f?
bool surface_invariant(const Form& f, const ProjMap& g);
// If the projective transform of f by g is proportional to some entry of fs, its index.
int surface_image_index(const Form& f, const ProjMap& g, const std::vector<Form>& fs);

struct CatalogCheck {
    std::string id;
    std::string key;
    bool pass = false;
    std::string detail;
};

struct SelfCheckOptions {
    std::optional<Kind> kind;
    bool corrupt_generator = false;  // negative control: replaces a generator of G_48_50
};

struct SelfCheckReport {
    std::vector<CatalogCheck> checks;
    std::size_t failures() const;
    nlohmann::json to_json() const;
};

SelfCheckReport catalog_selfcheck(const SelfCheckOptions& opt = {});

nlohmann::json catalog_dump(const CatalogKey& key);
nlohmann::json curve_json(const CurveEntry& c);

}  // namespace solidus
