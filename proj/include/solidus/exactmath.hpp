#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace solidus {

class math_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// SOLIDUS_CONDUCTOR overrides the default of 24.
int default_conductor();
int euler_phi(int n);

// Element of Q(zeta_c) stored sparsely on the power basis 1, z, ..., z^(phi(c)-1).
class CycNum {
public:
    using Term = std::pair<int, mpq_class>;

    CycNum();
    explicit CycNum(long n, int conductor = 0);
    CycNum(const mpq_class& q, int conductor = 0);

    static CycNum rational(long p, long q, int conductor = 0);
    static CycNum zeta(int c, int k, int conductor = 0);

    int conductor() const { return cond_; }
    // nonzero (power, coefficient) pairs in increasing power
    std::vector<Term> terms() const;
    std::vector<mpq_class> coeffs() const;

    bool is_zero() const { return sgn(q0_) == 0 && rest_.empty(); }
    bool is_one() const;
    bool is_rational() const;
    mpq_class rational_value() const;

    CycNum promote(int conductor) const;
    CycNum inverse() const;
    CycNum conj() const;
    CycNum pow(long e) const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }
    bool operator<(const CycNum& o) const;

    std::size_t hash() const;
    std::string str() const;
    static CycNum parse(const std::string& text);

    void mul_rational(const mpq_class& q);
    const mpq_class& constant_term() const { return q0_; }

private:
    int cond_;
    mpq_class q0_;
    std::vector<Term> rest_;  // powers >= 1

    void unify(CycNum& o);
    static CycNum from_dense(std::vector<mpq_class>& dense, int c);
    friend CycNum cyc_dense_mul(const CycNum& a, const CycNum& b);
};

// Named constants: i, zeta3, zeta6, zeta8, zeta12, zeta24, sqrt2, sqrt3, sqrt3_i, sqrt2_i,
// rational(p,q), zeta(c,k).
CycNum cyc_constant(const std::string& name, int conductor = 0);

enum class ArithOp { add, sub, mul, div };
CycNum cyc_arith(const CycNum& a, const CycNum& b, ArithOp op);

// Canonical text "(p/q)*z^k + ...@c" or a constant expression such as "-1+sqrt3_i".
CycNum parse_scalar(const std::string& text);

// ---------------------------------------------------------------------------
// monomials packed in 64 bits: top byte = total degree, then one byte per variable
constexpr int kMaxVars = 7;
using Mono = std::uint64_t;

inline int mono_exp(Mono m, int i) { return static_cast<int>((m >> (8 * (kMaxVars - 1 - i))) & 0xff); }
inline int mono_total(Mono m) { return static_cast<int>(m >> 56); }
Mono mono_make(const std::vector<int>& e);
Mono mono_mul(Mono a, Mono b);
std::vector<int> mono_exps(Mono m, int nvars);
bool mono_divides(Mono a, Mono b);
Mono mono_div(Mono a, Mono b);

struct Term {
    Mono mono;
    CycNum coeff;
};

// Homogeneous polynomial. Terms sorted in decreasing graded-lex order.
class Form {
public:
    Form() : nvars_(4), degree_(0), weighted_(false) {}
    Form(int nvars, int degree, bool weighted = false);

    static Form constant(int nvars, const CycNum& c);
    static Form variable(int nvars, int i, bool weighted = false);
    static Form monomial(const std::vector<int>& e, const CycNum& c, bool weighted = false);
    static Form from_terms(int nvars, std::vector<Term> terms, bool weighted = false);

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool weighted() const { return weighted_; }
    int weight(int i) const { return (weighted_ && i == 4) ? 2 : 1; }
    int mono_degree(Mono m) const;
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    int conductor() const;

    CycNum coeff(Mono m) const;
    const CycNum& leading_coeff() const;
    Form monic() const;
    Form scaled(const CycNum& c) const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Form& a, const Form& b);
    friend Form operator*(const CycNum& c, const Form& f) { return f.scaled(c); }
    Form pow(int e) const;

    bool operator==(const Form& o) const;
    bool operator!=(const Form& o) const { return !(*this == o); }
    bool operator<(const Form& o) const;

    CycNum eval(const std::vector<CycNum>& x) const;
    Form derivative(int i) const;
    Form mul_mono(Mono m) const;
    Form div_mono(Mono m) const;
    Mono mono_content() const;

    std::string str() const;
    static Form parse(const std::string& text, int nvars = 4, bool weighted = false);

private:
    int nvars_;
    int degree_;
    bool weighted_;
    std::vector<Term> terms_;

    friend class FormBuilder;
};

// Accumulates terms, then emits a sorted Form.
class FormBuilder {
public:
    FormBuilder(int nvars, int degree, bool weighted = false);
    void add(Mono m, const CycNum& c);
    Form build();
    std::size_t size() const;

private:
    int nvars_, degree_;
    bool weighted_;
    std::vector<std::pair<Mono, CycNum>> buf_;
};

// ---------------------------------------------------------------------------
class ProjPoint {
public:
    ProjPoint() = default;
    explicit ProjPoint(std::vector<CycNum> coords);
    static ProjPoint parse(const std::string& text);

    std::size_t dim() const { return coords_.size(); }
    const std::vector<CycNum>& coords() const { return coords_; }
    const CycNum& operator[](std::size_t i) const { return coords_[i]; }
    int pivot() const;

    bool operator==(const ProjPoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool operator<(const ProjPoint& o) const;
    std::size_t hash() const;
    std::string str() const;

private:
    std::vector<CycNum> coords_;
};

struct ProjPointHash {
    std::size_t operator()(const ProjPoint& p) const { return p.hash(); }
};

class ProjLine {
public:
    ProjLine(const ProjPoint& a, const ProjPoint& b);
    // line cut out by independent linear forms (n-1 forms in P^(n-1) for n = 4 gives 2)
    static ProjLine from_equations(const std::vector<Form>& eqs);

    const ProjPoint& a() const { return a_; }
    const ProjPoint& b() const { return b_; }
    const std::vector<Form>& equations() const { return eqs_; }
    ProjPoint point_at(const CycNum& s, const CycNum& t) const;
    bool contains(const ProjPoint& p) const;
    ProjLine swapped() const { return ProjLine(b_, a_); }
    std::string str() const;

private:
    ProjPoint a_, b_;
    std::vector<Form> eqs_;
};

// ---------------------------------------------------------------------------
// Seeded linear congruential stream (std::minstd_rand) shared by all probabilistic steps.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    long range(long lo, long hi);
    mpq_class small_rational(long bound = 9);
    mpq_class nonzero_rational(long bound = 9);
    CycNum small_cyc(long bound = 3, int conductor = 0);

private:
    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// polynomial operations

CycNum form_eval(const Form& f, const ProjPoint& p);

// f(c_0, ..., c_{n-1}); all components homogeneous of a common degree
Form form_substitute(const Form& f, const std::vector<Form>& components);
// f(A x) with A given row-major, rows = nvars(f), cols = target nvars
Form form_linear_substitute(const Form& f, const std::vector<std::vector<CycNum>>& a);
// each variable x_i replaced by the monomial rows[i]
Form form_monomial_substitute(const Form& f, const std::vector<std::vector<int>>& rows,
                              const std::vector<CycNum>& scales = {});

std::optional<Form> form_divide(const Form& f, const Form& g);
Form form_gcd(const std::vector<Form>& fs);
std::optional<Form> known_plane_factor(const Form& f);
const std::vector<Form>& tetrahedra_planes();

int vanishing_order_at_point(const Form& f, const ProjPoint& p);
int vanishing_order_along_line(const Form& f, const ProjLine& l, std::uint64_t seed);

// restriction of f to the line s*a + t*b as a binary form in (s, t)
Form form_restrict_to_line(const Form& f, const ProjPoint& a, const ProjPoint& b);

// Row reduction over the cyclotomic field.
using Matrix = std::vector<std::vector<CycNum>>;
int matrix_rank(Matrix m);
Matrix matrix_rref(Matrix m, std::vector<int>* pivots = nullptr);
Matrix matrix_nullspace(const Matrix& m);
std::optional<Matrix> matrix_inverse(const Matrix& m);
CycNum matrix_det(Matrix m);
Matrix matrix_mul(const Matrix& a, const Matrix& b);
Matrix matrix_identity(int n, int conductor = 0);

// Coefficient vectors of forms over a shared monomial list; used for span tests.
struct FormSpace {
    std::vector<Mono> monos;
    Matrix rows;
};
FormSpace form_space(const std::vector<Form>& fs);
int forms_rank(const std::vector<Form>& fs);
bool form_in_span(const Form& f, const std::vector<Form>& basis);
// coordinates of f in the basis, if f lies in the span
std::optional<std::vector<CycNum>> form_coordinates(const Form& f, const std::vector<Form>& basis);
std::vector<Form> independent_forms(const std::vector<Form>& fs);
std::vector<Form> monomials_of_degree(int nvars, int d);

}  // namespace solidus

template <>
struct std::hash<solidus::CycNum> {
    std::size_t operator()(const solidus::CycNum& c) const { return c.hash(); }
};
