#pragma once

#include "solidus/catalog.hpp"
#include "solidus/exactmath.hpp"
#include "solidus/projgroup.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace solidus {

// One factor of a factored map. Linear: x -> M x. Monomial: x_i -> scale_i * x^rows[i].
// General: x -> (forms).
struct MapStep {
    enum class Kind { linear, monomial, general };
    Kind kind = Kind::general;
    Matrix matrix;
    std::vector<std::vector<int>> rows;
    std::vector<CycNum> scales;
    std::vector<Form> forms;

    int source_vars() const;
    int target_vars() const;
    // forms in the target variables pulled back to the source variables
    std::vector<Form> pull(const std::vector<Form>& fs) const;
    std::optional<std::vector<CycNum>> apply(const std::vector<CycNum>& x) const;
};

// Components share no common factor. The optional chain lists factors in application
// order (the map is chain.back() o ... o chain.front()) and is used for fast pullback.
class RationalMap {
public:
    RationalMap() = default;
    // clears the common factor of the components
    RationalMap(int source_vars, std::vector<Form> components, std::string name = {});
    static RationalMap from_chain(std::vector<MapStep> chain, std::string name = {});
    static RationalMap linear(const Matrix& m, std::string name = {});
    static RationalMap identity(int n = 4);

    int source_vars() const { return src_; }
    int target_vars() const { return static_cast<int>(comps_.size()); }
    int degree() const { return comps_.empty() ? 0 : comps_.front().degree(); }
    const std::vector<Form>& components() const { return comps_; }
    const std::vector<MapStep>& chain() const { return chain_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    // forms on the target pulled back, with the monomial content (or full gcd for general steps) cleared
    std::vector<Form> pull(const std::vector<Form>& fs) const;
    // image of a point; empty when the point is indeterminate for some factor
    std::optional<ProjPoint> apply(const ProjPoint& p) const;
    // degree-1 map as a matrix
    std::optional<ProjMap> as_projective() const;
    nlohmann::json to_json() const;

private:
    int src_ = 4;
    std::vector<Form> comps_;
    std::vector<MapStep> chain_;
    std::string name_;
};

// lambda-twisted standard Cremona involution diag(l1,l2,l3,1) o iota
RationalMap cremona_iota(const std::array<CycNum, 3>& lambda = {CycNum(1), CycNum(1), CycNum(1)});
RationalMap involution(const std::string& letter);  // iota, iota_prime, iota_double_prime
RationalMap map_from_catalog(const std::string& name);

// g o f
RationalMap map_compose(const RationalMap& g, const RationalMap& f);
bool maps_equal(const RationalMap& f, const RationalMap& g, int samples = 10, std::uint64_t seed = 0);
bool conjugation_check(const RationalMap& m, const MatrixGroup& g);

struct LinearSystem {
    int degree = 0;
    std::vector<Form> basis;
    std::string tag;

    static LinearSystem of(std::vector<Form> basis, std::string tag = {});
    static LinearSystem hyperplanes(int n = 4);
    nlohmann::json to_json() const;
};

LinearSystem pullback_system(const RationalMap& m, const LinearSystem& s);
int system_mult_at_orbit(const LinearSystem& s, const OrbitRecord& orbit);
int system_mult_along_curve(const LinearSystem& s, const CurveEntry& c, std::uint64_t seed = 0);

struct UntwistLedger {
    int n = 0;
    int m_sigma4 = 0, m_sigma4p = 0, m_sigma4pp = 0;
    int m_L6 = 0, m_L6p = 0, m_L6pp = 0;
    mpq_class k;       // n/2 - m_L6
    mpq_class m_Ephi;  // (6k - n)/4

    bool untwists_iota() const { return std::max(4 * m_L6, 2 * m_sigma4) > n; }
    bool untwists_iota_prime() const { return std::max(4 * m_L6p, 2 * m_sigma4p) > n; }
    bool untwists_iota_double_prime() const { return std::max(4 * m_L6pp, 2 * m_sigma4pp) > n; }
    int predicates_true() const { return untwists_iota() + untwists_iota_prime() + untwists_iota_double_prime(); }
    nlohmann::json to_json() const;
};

// Multiplicities at the representatives [1:0:0:0], [1:1:1:-1], [1:1:1:1] and along a line of each
// six-line curve; the primed data are read off after substituting R and R^2.
UntwistLedger untwist_ledger(const LinearSystem& s);
UntwistLedger untwist_ledger(const std::vector<Form>& forms);

struct SarkisovWord {
    std::vector<std::string> letters;  // application order
    ProjMap tail;
    nlohmann::json to_json() const;
};

struct Decomposition {
    SarkisovWord word;
    std::vector<UntwistLedger> ledgers;
    nlohmann::json to_json() const;
};

// Post-composes with the involution selected by the unique true predicate until the degree is 1.
// The input equals tail o letters.back() o ... o letters.front().
Decomposition sarkisov_decompose(const RationalMap& m, int max_steps = 64);
// tail o tau_k o ... o tau_1
RationalMap word_map(const SarkisovWord& w);
// tau_1 o tau_2 o ... (letters composed left to right)
RationalMap compose_letters(const std::vector<std::string>& letters);

struct DiagramReport {
    int samples = 0;
    int matches = 0;
    int eta_checks = 0;
    int eta_matches = 0;
    std::vector<std::string> failures;
    bool pass() const { return matches == samples && eta_matches == eta_checks; }
    nlohmann::json to_json() const;
};

// V2 = {w^2 = x0x1x2x3}: omega(zeta(p)) against psi(xi(p)), and eta_i o psi against the squared projections
DiagramReport verify_diagram_63(int samples, std::uint64_t seed = 0);
// the V2 point used for sample k
std::vector<CycNum> v2_sample(Rng& rng);
bool diagram_commutes_at(const std::vector<CycNum>& v2_point);

// psi maps generic points of F_{i+1} = {x_i = 0} to this basis point of P13
int psi_plane_target(int i);
// number of the `points` generic points of F_{i+1} that psi sends to the expected basis point
int psi_contracts_plane(int i, int points, std::uint64_t seed = 0);

// restricted matrices for R-conjugation
const Matrix& r_matrix();
const Matrix& r2_matrix();

}  // namespace solidus
