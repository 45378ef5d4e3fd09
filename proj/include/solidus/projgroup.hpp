#pragma once

#include "solidus/exactmath.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace solidus {

std::size_t matrix_hash(const Matrix& m);

// Invertible matrix up to scalars; first nonzero entry (row-major) is 1.
class ProjMap {
public:
    ProjMap() = default;
    explicit ProjMap(Matrix m);
    static ProjMap identity(int n = 4);
    // diag(a1, a2, a3, 1), the shorthand (a1, a2, a3)
    static ProjMap diagonal(const CycNum& a1, const CycNum& a2, const CycNum& a3);
    static ProjMap parse(const std::vector<std::vector<std::string>>& rows);

    int dim() const { return static_cast<int>(m_.size()); }
    const Matrix& matrix() const { return m_; }
    ProjMap operator*(const ProjMap& o) const;  // (g*h)(x) = g(h(x))
    ProjMap inverse() const;
    ProjMap pow(int e) const;
    ProjPoint apply(const ProjPoint& p) const;
    bool is_identity() const;
    bool is_diagonal() const;

    bool operator==(const ProjMap& o) const { return m_ == o.m_; }
    bool operator!=(const ProjMap& o) const { return !(m_ == o.m_); }
    std::size_t hash() const { return hash_; }
    nlohmann::json to_json() const;
    std::string str() const;

private:
    Matrix m_;
    std::size_t hash_ = 0;
};

struct ProjMapHash {
    std::size_t operator()(const ProjMap& g) const { return g.hash(); }
};

class MatrixGroup {
public:
    MatrixGroup() = default;
    MatrixGroup(std::vector<ProjMap> gens, std::vector<ProjMap> elements, std::string name = {});

    const std::vector<ProjMap>& generators() const { return gens_; }
    const std::vector<ProjMap>& elements() const { return elems_; }
    std::size_t order() const { return elems_.size(); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    bool contains(const ProjMap& g) const { return index_.count(g) > 0; }
    int index_of(const ProjMap& g) const;

private:
    std::vector<ProjMap> gens_;
    std::vector<ProjMap> elems_;
    std::unordered_map<ProjMap, int, ProjMapHash> index_;
    std::string name_;
};

MatrixGroup group_closure(const std::vector<ProjMap>& gens, std::size_t cap = 10000, const std::string& name = {});

struct Fingerprint {
    std::size_t order = 0;
    std::map<int, int> element_orders;  // order -> count
    std::size_t center_order = 0;
    std::size_t derived_order = 0;
    std::vector<int> abelianization;  // invariant factors d1 | d2 | ...

    bool operator==(const Fingerprint& o) const = default;
    nlohmann::json to_json() const;
};

int element_order(const ProjMap& g, int cap = 1000);
Fingerprint fingerprint(const MatrixGroup& g);
MatrixGroup derived_subgroup(const MatrixGroup& g);
MatrixGroup center(const MatrixGroup& g);

struct Sigma4Action {
    std::size_t image_size = 0;
    MatrixGroup kernel;
    std::vector<std::vector<int>> images;  // perm of each element, element order as in the group
};

// Permutation action of g on the 4 base points (the homomorphism onto a subgroup of S4) and its kernel.
Sigma4Action sigma4_action(const MatrixGroup& g, const std::vector<ProjPoint>& base);
std::vector<int> point_permutation(const ProjMap& g, const std::vector<ProjPoint>& base);

struct OrbitRecord {
    ProjPoint representative;
    std::vector<ProjPoint> points;  // in discovery order
    std::size_t length = 0;
    std::size_t stabilizer_order = 0;

    bool contains(const ProjPoint& p) const;
};

OrbitRecord orbit(const MatrixGroup& g, const ProjPoint& p);
MatrixGroup stabilizer(const MatrixGroup& g, const ProjPoint& p);
std::optional<ProjPoint> line_intersect(const ProjLine& l1, const ProjLine& l2);

// {"conductor": 24, "generators": [[[entry x4] x4], ...]}
nlohmann::json group_descriptor(const std::vector<ProjMap>& gens);
std::vector<ProjMap> parse_group_descriptor(const nlohmann::json& j);

Matrix parse_matrix_json(const nlohmann::json& rows);
nlohmann::json matrix_json(const Matrix& m);

}  // namespace solidus
