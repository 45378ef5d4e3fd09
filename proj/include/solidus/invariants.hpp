#pragma once

#include "solidus/exactmath.hpp"
#include "solidus/projgroup.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace solidus {

struct MatrixHash {
    std::size_t operator()(const Matrix& m) const { return matrix_hash(m); }
};

// Finite subgroup of GL4 given by honest matrices (no projective normalization).
class LiftedGroup {
public:
    LiftedGroup() = default;
    LiftedGroup(std::vector<Matrix> gens, std::vector<Matrix> elements, std::string name = {});

    const std::vector<Matrix>& generators() const { return gens_; }
    const std::vector<Matrix>& elements() const { return elems_; }
    const std::vector<Matrix>& inverses() const { return inv_; }
    std::size_t order() const { return elems_.size(); }
    const std::string& name() const { return name_; }
    int dim() const { return elems_.empty() ? 4 : static_cast<int>(elems_.front().size()); }
    bool contains(const Matrix& m) const { return index_.count(m) > 0; }
    int index_of(const Matrix& m) const;

private:
    std::vector<Matrix> gens_, elems_, inv_;
    std::unordered_map<Matrix, int, MatrixHash> index_;
    std::string name_;
};

LiftedGroup lifted_closure(const std::vector<Matrix>& gens, const std::string& name = {}, std::size_t cap = 10000);

// H_hat, G_hat, G_96_227_hat, G_144_184_hat, trivial, or the lift of a catalog group key
// (each generator rescaled to finite order).
const LiftedGroup& lifted_group(const std::string& key);
LiftedGroup lift_projective(const std::vector<ProjMap>& gens, const std::string& name = {});

// (g.f)(x) = f(g^{-1} x)
Form act(const Matrix& g_inverse, const Form& f);
Form act_element(const LiftedGroup& g, std::size_t k, const Form& f);

// (1/|G|) sum_g g.f
Form reynolds(const LiftedGroup& g, const Form& f);

std::vector<Form> invariant_basis(const LiftedGroup& g, int d);
// basis of the forms in span(basis) fixed by every listed matrix
std::vector<Form> fixed_subspace(const std::vector<Form>& basis, const std::vector<Matrix>& inverses);

struct CharacterBlock {
    std::vector<CycNum> values;  // per element, in group order
    std::vector<Form> basis;
    bool trivial() const;
};

struct CharacterSplit {
    int degree = 0;
    std::size_t ambient_dim = 0;  // dimension of the space that was split
    std::string ambient;          // "H_hat-invariants" or "full"
    std::vector<CharacterBlock> characters;
    std::vector<std::vector<Form>> blocks;  // higher-dimensional parts that do not split into characters

    std::size_t dimension() const;
    nlohmann::json to_json(const LiftedGroup& g) const;
};

CharacterSplit semi_invariant_split(const LiftedGroup& g, int d);

// character values on the generators, if g.f is proportional to f for every generator
std::optional<std::vector<CycNum>> is_semi_invariant(const LiftedGroup& g, const Form& f);
// does every generator map span(forms) into itself?
bool span_preserved(const LiftedGroup& g, const std::vector<Form>& forms);

nlohmann::json forms_json(const std::vector<Form>& fs);

}  // namespace solidus
