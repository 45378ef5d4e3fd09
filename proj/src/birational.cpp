#include "solidus/birational.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace solidus {

namespace {

// removes the monomial content common to all nonzero forms
std::vector<Form> strip_monomial_content(std::vector<Form> fs)
{
    int n = -1;
    std::vector<int> e;
    for (const auto& f : fs) {
        if (f.is_zero())
            continue;
        auto c = mono_exps(f.mono_content(), f.nvars());
        if (n < 0) {
            n = f.nvars();
            e = c;
        } else {
            for (int i = 0; i < n; ++i)
                e[i] = std::min(e[i], c[i]);
        }
    }
    if (n < 0)
        throw math_error("all components vanish identically");
    Mono m = mono_make(e);
    if (mono_total(m) == 0)
        return fs;
    int drop = mono_total(m);
    for (auto& f : fs)
        f = f.is_zero() ? Form(f.nvars(), f.degree() - drop, f.weighted()) : f.div_mono(m);
    return fs;
}

std::vector<Form> clear_gcd(std::vector<Form> fs)
{
    fs = strip_monomial_content(std::move(fs));
    Form g = form_gcd(fs);
    if (g.degree() == 0)
        return fs;
    for (auto& f : fs) {
        if (f.is_zero()) {
            f = Form(f.nvars(), f.degree() - g.degree(), f.weighted());
            continue;
        }
        auto q = form_divide(f, g);
        if (!q)
            throw math_error("gcd does not divide a component");
        f = std::move(*q);
    }
    return fs;
}

std::vector<Form> coordinate_forms(int n)
{
    std::vector<Form> out;
    for (int i = 0; i < n; ++i)
        out.push_back(Form::variable(n, i));
    return out;
}

Matrix linear_matrix(const std::vector<Form>& comps)
{
    int n = comps.front().nvars();
    Matrix m(comps.size(), std::vector<CycNum>(n));
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].degree() != 1)
            throw math_error("not a linear map");
        for (const auto& t : comps[i].terms())
            for (int j = 0; j < n; ++j)
                if (mono_exp(t.mono, j))
                    m[i][j] = t.coeff;
    }
    return m;
}

MapStep linear_step(const Matrix& m)
{
    MapStep s;
    s.kind = MapStep::Kind::linear;
    s.matrix = m;
    return s;
}

MapStep iota_step(const std::array<CycNum, 3>& lambda)
{
    MapStep s;
    s.kind = MapStep::Kind::monomial;
    s.rows = {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}};
    s.scales = {lambda[0], lambda[1], lambda[2], CycNum(1)};
    return s;
}

}  // namespace

int MapStep::source_vars() const
{
    switch (kind) {
    case Kind::linear: return static_cast<int>(matrix.front().size());
    case Kind::monomial: return static_cast<int>(rows.front().size());
    case Kind::general: return forms.front().nvars();
    }
    return 0;
}

int MapStep::target_vars() const
{
    switch (kind) {
    case Kind::linear: return static_cast<int>(matrix.size());
    case Kind::monomial: return static_cast<int>(rows.size());
    case Kind::general: return static_cast<int>(forms.size());
    }
    return 0;
}

std::vector<Form> MapStep::pull(const std::vector<Form>& fs) const
{
    std::vector<Form> out;
    out.reserve(fs.size());
    for (const auto& f : fs) {
        switch (kind) {
        case Kind::linear: out.push_back(form_linear_substitute(f, matrix)); break;
        case Kind::monomial: out.push_back(form_monomial_substitute(f, rows, scales)); break;
        case Kind::general: out.push_back(form_substitute(f, forms)); break;
        }
    }
    return kind == Kind::general ? clear_gcd(std::move(out)) : strip_monomial_content(std::move(out));
}

std::optional<std::vector<CycNum>> MapStep::apply(const std::vector<CycNum>& x) const
{
    std::vector<CycNum> y;
    switch (kind) {
    case Kind::linear:
        for (const auto& row : matrix) {
            CycNum s;
            for (std::size_t j = 0; j < row.size(); ++j)
                if (!row[j].is_zero())
                    s += row[j] * x[j];
            y.push_back(s);
        }
        break;
    case Kind::monomial:
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CycNum s = scales.empty() ? CycNum(1) : scales[i];
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                s *= x[j].pow(rows[i][j]);
            y.push_back(s);
        }
        break;
    case Kind::general:
        for (const auto& f : forms)
            y.push_back(f.eval(x));
        break;
    }
    if (std::all_of(y.begin(), y.end(), [](const CycNum& c) { return c.is_zero(); }))
        return std::nullopt;
    return y;
}

RationalMap::RationalMap(int source_vars, std::vector<Form> components, std::string name)
    : src_(source_vars), name_(std::move(name))
{
    if (components.empty())
        throw std::invalid_argument("rational map without components");
    int d = -1;
    for (const auto& f : components) {
        if (f.nvars() != source_vars)
            throw std::invalid_argument("component in the wrong ring");
        if (f.is_zero())
            continue;
        if (d >= 0 && f.degree() != d)
            throw std::invalid_argument("components of different degrees");
        d = f.degree();
    }
    if (d < 0)
        throw math_error("all components vanish identically");
    for (auto& f : components)
        if (f.is_zero())
            f = Form(source_vars, d, f.weighted());
    bool weighted = std::any_of(components.begin(), components.end(), [](const Form& f) { return f.weighted(); });
    comps_ = weighted ? std::move(components) : clear_gcd(std::move(components));
    MapStep s;
    s.kind = MapStep::Kind::general;
    s.forms = comps_;
    chain_ = {s};
}

RationalMap RationalMap::from_chain(std::vector<MapStep> chain, std::string name)
{
    if (chain.empty())
        throw std::invalid_argument("empty chain");
    RationalMap m;
    m.src_ = chain.front().source_vars();
    m.name_ = std::move(name);
    std::vector<Form> fs = coordinate_forms(chain.back().target_vars());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        fs = it->pull(fs);
    m.comps_ = std::move(fs);
    m.chain_ = std::move(chain);
    return m;
}

RationalMap RationalMap::linear(const Matrix& m, std::string name) { return from_chain({linear_step(m)}, std::move(name)); }

RationalMap RationalMap::identity(int n) { return linear(matrix_identity(n), "identity"); }

std::vector<Form> RationalMap::pull(const std::vector<Form>& fs) const
{
    std::vector<Form> out = fs;
    for (auto it = chain_.rbegin(); it != chain_.rend(); ++it)
        out = it->pull(out);
    return out;
}

std::optional<ProjPoint> RationalMap::apply(const ProjPoint& p) const
{
    std::vector<CycNum> x = p.coords();
    for (const auto& s : chain_) {
        auto y = s.apply(x);
        if (!y)
            return std::nullopt;
        x = std::move(*y);
    }
    return ProjPoint(x);
}

std::optional<ProjMap> RationalMap::as_projective() const
{
    if (degree() != 1 || src_ != target_vars())
        return std::nullopt;
    Matrix m = linear_matrix(comps_);
    if (matrix_det(m).is_zero())
        return std::nullopt;
    return ProjMap(m);
}

nlohmann::json RationalMap::to_json() const
{
    nlohmann::json c = nlohmann::json::array();
    for (const auto& f : comps_)
        c.push_back(f.str());
    return {{"degree", degree()}, {"components", c}};
}

const Matrix& r_matrix()
{
    static const Matrix r = named_linear_matrix("R");
    return r;
}

const Matrix& r2_matrix()
{
    static const Matrix r2 = matrix_mul(r_matrix(), r_matrix());
    return r2;
}

RationalMap cremona_iota(const std::array<CycNum, 3>& lambda) { return RationalMap::from_chain({iota_step(lambda)}, "iota"); }

RationalMap involution(const std::string& letter)
{
    std::array<CycNum, 3> one{CycNum(1), CycNum(1), CycNum(1)};
    if (letter == "iota")
        return cremona_iota();
    // R o iota o R^2 and R^2 o iota o R, in application order
    if (letter == "iota_prime")
        return RationalMap::from_chain({linear_step(r2_matrix()), iota_step(one), linear_step(r_matrix())}, letter);
    if (letter == "iota_double_prime")
        return RationalMap::from_chain({linear_step(r_matrix()), iota_step(one), linear_step(r2_matrix())}, letter);
    throw std::invalid_argument("unknown involution: " + letter);
}

RationalMap map_from_catalog(const std::string& name)
{
    if (name == "iota" || name == "iota_prime" || name == "iota_double_prime")
        return involution(name);
    if (name == "R")
        return RationalMap::linear(r_matrix(), "R");
    const MapEntry& e = load_map(name);
    return RationalMap(e.source_vars, e.components, name);
}

RationalMap map_compose(const RationalMap& g, const RationalMap& f)
{
    if (f.target_vars() != g.source_vars())
        throw std::invalid_argument("map_compose: dimension mismatch");
    std::vector<MapStep> chain = f.chain();
    chain.insert(chain.end(), g.chain().begin(), g.chain().end());
    RationalMap out = RationalMap::from_chain(std::move(chain));
    if (!g.name().empty() && !f.name().empty())
        out.set_name(g.name() + " o " + f.name());
    return out;
}

namespace {

ProjPoint random_rational_point(Rng& rng, int n)
{
    for (;;) {
        std::vector<CycNum> x;
        bool nz = false;
        for (int i = 0; i < n; ++i) {
            x.emplace_back(rng.range(-20, 20));
            nz = nz || !x.back().is_zero();
        }
        if (nz)
            return ProjPoint(x);
    }
}

}  // namespace

bool maps_equal(const RationalMap& f, const RationalMap& g, int samples, std::uint64_t seed)
{
    if (f.source_vars() != g.source_vars() || f.target_vars() != g.target_vars())
        throw std::invalid_argument("maps_equal: dimension mismatch");
    Rng rng(seed);
    int rejections = 0;
    for (int k = 0; k < samples;) {
        ProjPoint p = random_rational_point(rng, f.source_vars());
        auto a = f.apply(p), b = g.apply(p);
        if (!a || !b) {
            if (++rejections >= 64)
                throw math_error("maps_equal: too many points in the indeterminacy locus");
            continue;
        }
        if (*a != *b)
            return false;
        ++k;
    }
    return true;
}

bool conjugation_check(const RationalMap& m, const MatrixGroup& g)
{
    for (const auto& h : g.generators()) {
        RationalMap c = map_compose(m, map_compose(RationalMap::linear(h.matrix()), m));
        auto p = c.as_projective();
        if (!p || !g.contains(*p))
            return false;
    }
    return true;
}

LinearSystem LinearSystem::of(std::vector<Form> basis, std::string tag)
{
    if (basis.empty())
        throw std::invalid_argument("empty linear system");
    basis.erase(std::remove_if(basis.begin(), basis.end(), [](const Form& f) { return f.is_zero(); }), basis.end());
    if (basis.empty())
        throw math_error("linear system of zero forms");
    if (forms_rank(basis) != static_cast<int>(basis.size()))
        basis = independent_forms(basis);
    LinearSystem s;
    s.degree = basis.front().degree();
    s.basis = std::move(basis);
    s.tag = std::move(tag);
    return s;
}

LinearSystem LinearSystem::hyperplanes(int n) { return of(coordinate_forms(n), "|O(1)|"); }

nlohmann::json LinearSystem::to_json() const
{
    nlohmann::json b = nlohmann::json::array();
    for (const auto& f : basis)
        b.push_back(f.str());
    return {{"degree", degree}, {"tag", tag}, {"basis", b}};
}

LinearSystem pullback_system(const RationalMap& m, const LinearSystem& s)
{
    std::string tag = "pullback of " + (s.tag.empty() ? std::string("system") : s.tag) + " under " +
                      (m.name().empty() ? std::string("map") : m.name());
    return LinearSystem::of(m.pull(s.basis), tag);
}

int system_mult_at_orbit(const LinearSystem& s, const OrbitRecord& orbit)
{
    if (orbit.points.empty())
        throw std::invalid_argument("empty orbit");
    int result = -1;
    for (const auto& p : orbit.points) {
        int m = -1;
        for (const auto& f : s.basis) {
            int o = vanishing_order_at_point(f, p);
            m = m < 0 ? o : std::min(m, o);
        }
        if (result >= 0 && m != result)
            throw math_error("multiplicity differs along the orbit");
        result = m;
    }
    return result;
}

int system_mult_along_curve(const LinearSystem& s, const CurveEntry& c, std::uint64_t seed)
{
    int result = -1;
    for (const auto& comp : c.components) {
        if (!comp.line)
            throw std::invalid_argument("system_mult_along_curve: component is not a line");
        for (const auto& f : s.basis) {
            int o = vanishing_order_along_line(f, *comp.line, seed);
            result = result < 0 ? o : std::min(result, o);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------

nlohmann::json UntwistLedger::to_json() const
{
    return {{"n", n},
            {"m_sigma4", m_sigma4},
            {"m_sigma4p", m_sigma4p},
            {"m_sigma4pp", m_sigma4pp},
            {"m_L6", m_L6},
            {"m_L6p", m_L6p},
            {"m_L6pp", m_L6pp},
            {"k", k.get_str()},
            {"m_Ephi", m_Ephi.get_str()},
            {"untwists_iota", untwists_iota()},
            {"untwists_iota_prime", untwists_iota_prime()},
            {"untwists_iota_double_prime", untwists_iota_double_prime()}};
}

namespace {

// order at the coordinate point e_i: d - max exponent of x_i
int order_at_coordinate_point(const std::vector<Form>& fs, int i)
{
    int best = -1;
    for (const auto& f : fs) {
        if (f.is_zero())
            continue;
        int mx = 0;
        for (const auto& t : f.terms())
            mx = std::max(mx, mono_exp(t.mono, i));
        int o = f.degree() - mx;
        best = best < 0 ? o : std::min(best, o);
    }
    return best;
}

// order along the line through e_i and e_j: min over terms of the remaining exponents
int order_along_coordinate_line(const std::vector<Form>& fs, int i, int j)
{
    int best = -1;
    for (const auto& f : fs)
        for (const auto& t : f.terms()) {
            int o = mono_total(t.mono) - mono_exp(t.mono, i) - mono_exp(t.mono, j);
            best = best < 0 ? o : std::min(best, o);
        }
    return best;
}

int coordinate_index(const std::vector<CycNum>& v)
{
    int idx = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            if (idx >= 0)
                return -1;
            idx = static_cast<int>(i);
        }
    return idx;
}

std::vector<CycNum> mat_vec(const Matrix& m, const std::vector<CycNum>& v)
{
    std::vector<CycNum> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!m[i][j].is_zero() && !v[j].is_zero())
                out[i] += m[i][j] * v[j];
    return out;
}

// the coordinate point whose image under `m` is p, or -1
int preimage_coordinate_point(const Matrix& m_inverse, const ProjPoint& p)
{
    return coordinate_index(mat_vec(m_inverse, p.coords()));
}

// the coordinate line whose image under `m` is l, as a pair of indices
std::optional<std::pair<int, int>> preimage_coordinate_line(const Matrix& m_inverse, const ProjLine& l)
{
    Matrix span{mat_vec(m_inverse, l.a().coords()), mat_vec(m_inverse, l.b().coords())};
    Matrix r = matrix_rref(span);
    if (r.size() != 2)
        return std::nullopt;
    std::vector<int> idx;
    for (const auto& row : r) {
        int c = coordinate_index(row);
        if (c < 0)
            return std::nullopt;
        idx.push_back(c);
    }
    return std::make_pair(idx[0], idx[1]);
}

struct RotatedData {
    int point_index = -1;
    std::pair<int, int> line{-1, -1};
};

// coordinate data for the orbit `point_name` and curve `curve_name` after substituting `m`
RotatedData rotated_data(const Matrix& m, const std::string& point_name, const std::string& curve_name)
{
    Matrix inv = *matrix_inverse(m);
    RotatedData d;
    for (const auto& p : orbit(load_group("G_48_50"), load_point(point_name).seed).points) {
        d.point_index = preimage_coordinate_point(inv, p);
        if (d.point_index >= 0)
            break;
    }
    for (const auto& c : load_curve(curve_name).components) {
        auto l = preimage_coordinate_line(inv, *c.line);
        if (l) {
            d.line = *l;
            break;
        }
    }
    if (d.point_index < 0 || d.line.first < 0)
        throw math_error("R does not carry the coordinate configuration onto " + point_name + "/" + curve_name);
    return d;
}

const RotatedData& rotated_r()
{
    static const RotatedData d = rotated_data(r_matrix(), "Sigma4prime", "L6prime");
    return d;
}

const RotatedData& rotated_r2()
{
    static const RotatedData d = rotated_data(r2_matrix(), "Sigma4primeprime", "L6primeprime");
    return d;
}

UntwistLedger ledger_from(const std::vector<Form>& s0, const std::vector<Form>& s1, const std::vector<Form>& s2)
{
    UntwistLedger l;
    l.n = s0.front().degree();
    l.m_sigma4 = order_at_coordinate_point(s0, 0);
    l.m_L6 = order_along_coordinate_line(s0, 0, 1);
    const auto& a = rotated_r();
    const auto& b = rotated_r2();
    l.m_sigma4p = order_at_coordinate_point(s1, a.point_index);
    l.m_L6p = order_along_coordinate_line(s1, a.line.first, a.line.second);
    l.m_sigma4pp = order_at_coordinate_point(s2, b.point_index);
    l.m_L6pp = order_along_coordinate_line(s2, b.line.first, b.line.second);
    l.k = mpq_class(l.n, 2) - l.m_L6;
    l.k.canonicalize();
    l.m_Ephi = (6 * l.k - l.n) / 4;
    l.m_Ephi.canonicalize();
    return l;
}

std::vector<Form> substitute_all(const std::vector<Form>& fs, const Matrix& m)
{
    std::vector<Form> out(fs.size());
    std::vector<std::future<void>> jobs;
    for (std::size_t k = 0; k < fs.size(); ++k)
        jobs.push_back(std::async(std::launch::async, [&, k] { out[k] = form_linear_substitute(fs[k], m); }));
    for (auto& j : jobs)
        j.get();
    return out;
}

}  // namespace

UntwistLedger untwist_ledger(const std::vector<Form>& forms)
{
    if (forms.empty())
        throw std::invalid_argument("untwist_ledger: empty system");
    return ledger_from(forms, substitute_all(forms, r_matrix()), substitute_all(forms, r2_matrix()));
}

UntwistLedger untwist_ledger(const LinearSystem& s) { return untwist_ledger(s.basis); }

nlohmann::json SarkisovWord::to_json() const { return {{"word", letters}, {"tail", matrix_json(tail.matrix())}}; }

nlohmann::json Decomposition::to_json() const
{
    nlohmann::json l = nlohmann::json::array();
    for (const auto& x : ledgers)
        l.push_back(x.to_json());
    return {{"word", word.letters}, {"tail", matrix_json(word.tail.matrix())}, {"ledgers", l}};
}

Decomposition sarkisov_decompose(const RationalMap& m, int max_steps)
{
    if (m.source_vars() != 4 || m.target_vars() != 4)
        throw std::invalid_argument("sarkisov_decompose: expects a self-map of P3");
    Decomposition out;
    std::vector<Form> s = m.components();
    const std::vector<std::vector<int>> iota_rows = iota_step({CycNum(1), CycNum(1), CycNum(1)}).rows;
    auto pull_iota = [&](const std::vector<Form>& fs) {
        std::vector<Form> r;
        for (const auto& f : fs)
            r.push_back(form_monomial_substitute(f, iota_rows));
        return strip_monomial_content(std::move(r));
    };
    int steps = 0;
    while (s.front().degree() > 1) {
        if (++steps > max_steps)
            throw math_error("sarkisov_decompose: step limit exceeded");
        std::vector<Form> s1 = substitute_all(s, r_matrix());
        std::vector<Form> s2 = substitute_all(s, r2_matrix());
        UntwistLedger l = ledger_from(s, s1, s2);
        out.ledgers.push_back(l);
        int count = l.predicates_true();
        if (count == 0)
            throw math_error("no untwisting predicate holds at degree " + std::to_string(l.n) +
                             ": map outside the decomposable group");
        if (count > 1)
            throw math_error("several untwisting predicates hold at degree " + std::to_string(l.n));
        std::vector<Form> next;
        if (l.untwists_iota()) {
            next = pull_iota(s);
            out.word.letters.push_back("iota");
        } else if (l.untwists_iota_prime()) {
            // s o R o iota o R^2
            next = substitute_all(pull_iota(s1), r2_matrix());
            out.word.letters.push_back("iota_prime");
        } else {
            next = substitute_all(pull_iota(s2), r_matrix());
            out.word.letters.push_back("iota_double_prime");
        }
        if (next.front().degree() >= l.n)
            throw math_error("untwisting failed to lower the degree");
        s = std::move(next);
    }
    out.word.tail = ProjMap(linear_matrix(s));
    return out;
}

RationalMap compose_letters(const std::vector<std::string>& letters)
{
    if (letters.empty())
        return RationalMap::identity();
    // tau_1 o tau_2 o ... : the last letter is applied first
    std::vector<MapStep> chain;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        const RationalMap inv = involution(*it);
        const auto& c = inv.chain();
        chain.insert(chain.end(), c.begin(), c.end());
    }
    return RationalMap::from_chain(std::move(chain));
}

RationalMap word_map(const SarkisovWord& w)
{
    // tau_1 acts first, the tail last
    std::vector<MapStep> chain;
    for (const auto& letter : w.letters) {
        const RationalMap inv = involution(letter);
        const auto& c = inv.chain();
        chain.insert(chain.end(), c.begin(), c.end());
    }
    chain.push_back(linear_step(w.tail.matrix()));
    return RationalMap::from_chain(std::move(chain));
}

// ---------------------------------------------------------------------------

nlohmann::json DiagramReport::to_json() const
{
    return {{"samples", samples},
            {"matches", matches},
            {"eta_checks", eta_checks},
            {"eta_matches", eta_matches},
            {"failures", failures},
            {"status", pass() ? "pass" : "fail"}};
}

std::vector<CycNum> v2_sample(Rng& rng)
{
    CycNum x0(rng.nonzero_rational(9)), x1(rng.nonzero_rational(9)), x2(rng.nonzero_rational(9));
    CycNum w(rng.nonzero_rational(9));
    CycNum x3 = w * w / (x0 * x1 * x2);
    return {x0, x1, x2, x3, w};
}

namespace {

std::optional<ProjPoint> eval_point(const std::vector<Form>& fs, const std::vector<CycNum>& x)
{
    std::vector<CycNum> y;
    for (const auto& f : fs)
        y.push_back(f.eval(x));
    if (std::all_of(y.begin(), y.end(), [](const CycNum& c) { return c.is_zero(); }))
        return std::nullopt;
    return ProjPoint(y);
}

}  // namespace

bool diagram_commutes_at(const std::vector<CycNum>& p)
{
    const auto& zeta = load_map("zeta_map").components;
    const auto& omega = load_map("omega").components;
    const auto& psi = load_map("psi").components;
    std::vector<CycNum> u;
    for (const auto& f : zeta)
        u.push_back(f.eval(p));
    std::vector<CycNum> x(p.begin(), p.begin() + 4);
    auto left = eval_point(omega, u);
    auto right = eval_point(psi, x);
    return left && right && *left == *right;
}

DiagramReport verify_diagram_63(int samples, std::uint64_t seed)
{
    if (samples < 1)
        throw std::invalid_argument("verify_diagram_63: samples must be positive");
    DiagramReport rep;
    Rng rng(seed);
    std::vector<std::vector<CycNum>> pts;
    pts.push_back({CycNum(1), CycNum(1), CycNum(1), CycNum(1), CycNum(1)});
    while (static_cast<int>(pts.size()) < samples)
        pts.push_back(v2_sample(rng));
    pts.resize(samples);
    std::vector<char> ok(pts.size());
    std::vector<std::future<void>> jobs;
    for (std::size_t k = 0; k < pts.size(); ++k)
        jobs.push_back(std::async(std::launch::async, [&, k] { ok[k] = diagram_commutes_at(pts[k]); }));
    for (auto& j : jobs)
        j.get();
    rep.samples = samples;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (ok[k])
            ++rep.matches;
        else
            rep.failures.push_back("diagram sample " + std::to_string(k));
    }
    // eta_i o psi against [u_i^2 : v_i^2] of zeta
    const auto& zeta = load_map("zeta_map").components;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        for (int i = 0; i < 3; ++i) {
            const auto& eta = load_map("eta" + std::to_string(i + 1) + "_psi").components;
            std::vector<CycNum> x(pts[k].begin(), pts[k].begin() + 4);
            CycNum u = zeta[2 * i].eval(pts[k]), v = zeta[2 * i + 1].eval(pts[k]);
            auto lhs = eval_point(eta, x);
            ++rep.eta_checks;
            if (lhs && *lhs == ProjPoint({u * u, v * v}))
                ++rep.eta_matches;
            else
                rep.failures.push_back("eta" + std::to_string(i + 1) + " sample " + std::to_string(k));
        }
    }
    return rep;
}

int psi_plane_target(int i)
{
    static const int targets[4] = {12, 10, 4, 0};
    if (i < 0 || i > 3)
        throw std::out_of_range("plane index");
    return targets[i];
}

int psi_contracts_plane(int i, int points, std::uint64_t seed)
{
    const auto& psi = load_map("psi").components;
    std::vector<CycNum> e(14);
    e[psi_plane_target(i)] = CycNum(1);
    ProjPoint expected(e);
    Rng rng(seed);
    int hits = 0;
    for (int k = 0; k < points; ++k) {
        std::vector<CycNum> x;
        for (int j = 0; j < 4; ++j)
            x.emplace_back(j == i ? mpq_class(0) : rng.nonzero_rational(9));
        auto img = eval_point(psi, x);
        hits += img && *img == expected;
    }
    return hits;
}

}  // namespace solidus
