#include "solidus/invariants.hpp"

#include "solidus/catalog.hpp"

#include <algorithm>
#include <deque>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace solidus {

LiftedGroup::LiftedGroup(std::vector<Matrix> gens, std::vector<Matrix> elements, std::string name)
    : gens_(std::move(gens)), elems_(std::move(elements)), name_(std::move(name))
{
    for (std::size_t k = 0; k < elems_.size(); ++k)
        index_.emplace(elems_[k], static_cast<int>(k));
    inv_.reserve(elems_.size());
    for (const auto& m : elems_) {
        auto inv = matrix_inverse(m);
        if (!inv)
            throw math_error("singular element in lifted group");
        inv_.push_back(std::move(*inv));
    }
}

int LiftedGroup::index_of(const Matrix& m) const
{
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

LiftedGroup lifted_closure(const std::vector<Matrix>& gens, const std::string& name, std::size_t cap)
{
    if (gens.empty())
        throw std::invalid_argument("lifted_closure: no generators");
    int n = static_cast<int>(gens.front().size());
    std::vector<Matrix> elems{matrix_identity(n)};
    std::unordered_map<Matrix, int, MatrixHash> seen{{elems.front(), 0}};
    for (const auto& g : gens)
        if (matrix_det(g).is_zero())
            throw math_error("singular generator");
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            Matrix p = matrix_mul(elems[head], g);
            if (seen.emplace(p, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(p));
                if (elems.size() > cap)
                    throw math_error("lifted group exceeds cap");
            }
        }
    }
    return LiftedGroup(gens, std::move(elems), name);
}

namespace {

bool is_scalar(const Matrix& m, CycNum* lambda)
{
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (i == j && !(m[i][j] == m[0][0]))
                return false;
            if (i != j && !m[i][j].is_zero())
                return false;
        }
    *lambda = m[0][0];
    return true;
}

std::optional<mpz_class> exact_root(const mpz_class& v, unsigned long k)
{
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0)
        return std::nullopt;
    return r;
}

// c with (c m)^k = I where m^k is scalar
Matrix finite_order_lift(const Matrix& m)
{
    Matrix p = m;
    CycNum lambda;
    int k = 1;
    while (!is_scalar(p, &lambda)) {
        if (++k > 1000)
            throw math_error("generator has no finite projective order");
        p = matrix_mul(p, m);
    }
    const int c = default_conductor();
    for (int j = 0; j < c; ++j) {
        CycNum z = CycNum::zeta(c, (j * k) % c);
        CycNum mu = lambda * z;  // must equal r^{-k}
        if (!mu.is_rational() || sgn(mu.rational_value()) <= 0)
            continue;
        mpq_class q = mu.rational_value();
        auto num = exact_root(q.get_num(), k), den = exact_root(q.get_den(), k);
        if (!num || !den)
            continue;
        CycNum scale = CycNum(mpq_class(*den, *num)) * CycNum::zeta(c, j);
        Matrix out = m;
        for (auto& row : out)
            for (auto& x : row)
                x *= scale;
        return out;
    }
    throw math_error("no finite-order lift over the current conductor");
}

Form rebuild(const std::vector<Mono>& monos, const std::vector<CycNum>& row, int nvars, int degree)
{
    FormBuilder b(nvars, degree);
    for (std::size_t k = 0; k < monos.size(); ++k)
        if (!row[k].is_zero())
            b.add(monos[k], row[k]);
    return b.build();
}

// canonical reduced basis of span(fs)
std::vector<Form> reduced_basis(const std::vector<Form>& fs)
{
    if (fs.empty())
        return {};
    FormSpace sp = form_space(fs);
    if (sp.monos.empty())
        return {};
    Matrix r = matrix_rref(sp.rows);
    std::vector<Form> out;
    for (const auto& row : r)
        out.push_back(rebuild(sp.monos, row, fs.front().nvars(), fs.front().degree()));
    return out;
}

Matrix generator_action(const LiftedGroup& g, const Matrix& inverse, const std::vector<Form>& basis)
{
    // column k = coordinates of g.basis[k]
    std::size_t n = basis.size();
    Matrix a(n, std::vector<CycNum>(n));
    for (std::size_t k = 0; k < n; ++k) {
        auto c = form_coordinates(act(inverse, basis[k]), basis);
        if (!c)
            throw math_error("subspace is not stable under " + g.name());
        for (std::size_t i = 0; i < n; ++i)
            a[i][k] = (*c)[i];
    }
    return a;
}

int matrix_order(const Matrix& m, int cap = 1000)
{
    Matrix id = matrix_identity(static_cast<int>(m.size()));
    Matrix p = m;
    for (int k = 1; k <= cap; ++k) {
        if (p == id)
            return k;
        p = matrix_mul(p, m);
    }
    throw math_error("action of infinite order");
}

std::vector<Form> combine(const Matrix& vecs, const std::vector<Form>& basis)
{
    std::vector<Form> out;
    for (const auto& v : vecs) {
        Form f(basis.front().nvars(), basis.front().degree());
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero())
                f += v[k] * basis[k];
        out.push_back(f);
    }
    return reduced_basis(out);
}

}  // namespace

LiftedGroup lift_projective(const std::vector<ProjMap>& gens, const std::string& name)
{
    std::vector<Matrix> lifted;
    for (const auto& g : gens)
        lifted.push_back(finite_order_lift(g.matrix()));
    return lifted_closure(lifted, name);
}

const LiftedGroup& lifted_group(const std::string& key)
{
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<LiftedGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end())
        return *it->second;
    auto m = [](const char* n) { return named_linear_matrix(n); };
    Matrix aba2 = matrix_mul(matrix_mul(m("A"), m("B")), matrix_mul(m("A"), m("A")));
    LiftedGroup g;
    if (key == "H_hat")
        g = lifted_closure({m("M"), m("N"), m("B"), aba2}, key);
    else if (key == "G_hat")
        g = lifted_closure({m("M"), m("N"), m("A"), m("B")}, key);
    else if (key == "G_96_227_hat")
        g = lifted_closure({m("M"), m("N"), m("Aprime"), m("Bprime")}, key);
    else if (key == "G_144_184_hat")
        g = lifted_closure({m("M"), m("N"), m("A"), m("B"), m("R")}, key);
    else if (key == "trivial")
        g = lifted_closure({matrix_identity(4)}, key);
    else
        g = lift_projective(group_entry(key).generators, key);
    return *cache.emplace(key, std::make_unique<LiftedGroup>(std::move(g))).first->second;
}

Form act(const Matrix& g_inverse, const Form& f) { return form_linear_substitute(f, g_inverse); }

Form act_element(const LiftedGroup& g, std::size_t k, const Form& f) { return act(g.inverses()[k], f); }

Form reynolds(const LiftedGroup& g, const Form& f)
{
    Form sum(f.nvars(), f.degree());
    for (std::size_t k = 0; k < g.order(); ++k)
        sum += act_element(g, k, f);
    return sum.scaled(CycNum(mpq_class(1, static_cast<long>(g.order()))));
}

std::vector<Form> invariant_basis(const LiftedGroup& g, int d)
{
    if (d < 0 || d > 12)
        throw std::invalid_argument("invariant_basis: degree out of range");
    std::vector<Form> monos = monomials_of_degree(g.dim(), d);
    std::vector<Form> avg(monos.size());
    std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t k = w; k < monos.size(); k += workers)
                avg[k] = reynolds(g, monos[k]);
        }));
    for (auto& j : jobs)
        j.get();
    avg.erase(std::remove_if(avg.begin(), avg.end(), [](const Form& f) { return f.is_zero(); }), avg.end());
    return reduced_basis(avg);
}

std::vector<Form> fixed_subspace(const std::vector<Form>& basis, const std::vector<Matrix>& inverses)
{
    if (basis.empty())
        return {};
    std::size_t n = basis.size();
    Matrix eqs;
    for (const auto& inv : inverses) {
        // coefficient vector of (g - 1) applied to each basis form, as columns
        std::vector<Form> diffs;
        for (const auto& f : basis)
            diffs.push_back(act(inv, f) - f);
        FormSpace sp = form_space(diffs);
        for (std::size_t r = 0; r < sp.monos.size(); ++r) {
            std::vector<CycNum> row(n);
            for (std::size_t k = 0; k < n; ++k)
                row[k] = sp.rows[k][r];
            eqs.push_back(std::move(row));
        }
    }
    if (eqs.empty())
        return reduced_basis(basis);
    Matrix ker = matrix_nullspace(eqs);
    if (ker.empty())
        return {};
    return combine(ker, basis);
}

bool CharacterBlock::trivial() const
{
    return std::all_of(values.begin(), values.end(), [](const CycNum& v) { return v.is_one(); });
}

std::size_t CharacterSplit::dimension() const
{
    std::size_t n = 0;
    for (const auto& c : characters)
        n += c.basis.size();
    for (const auto& b : blocks)
        n += b.size();
    return n;
}

nlohmann::json forms_json(const std::vector<Form>& fs)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& f : fs)
        a.push_back(f.str());
    return a;
}

nlohmann::json CharacterSplit::to_json(const LiftedGroup& g) const
{
    nlohmann::json chars = nlohmann::json::array();
    for (const auto& c : characters) {
        nlohmann::json gv = nlohmann::json::array();
        for (const auto& gen : g.generators())
            gv.push_back(c.values[g.index_of(gen)].str());
        chars.push_back({{"trivial", c.trivial()}, {"generator_values", gv}, {"dimension", c.basis.size()},
                         {"basis", forms_json(c.basis)}});
    }
    nlohmann::json bl = nlohmann::json::array();
    for (const auto& b : blocks)
        bl.push_back({{"dimension", b.size()}, {"basis", forms_json(b)}});
    return {{"degree", degree}, {"ambient", ambient}, {"ambient_dimension", ambient_dim},
            {"characters", chars}, {"blocks", bl}};
}

CharacterSplit semi_invariant_split(const LiftedGroup& g, int d)
{
    CharacterSplit out;
    out.degree = d;
    const LiftedGroup& h = lifted_group("H_hat");
    bool has_h = h.dim() == g.dim() &&
                 std::all_of(h.generators().begin(), h.generators().end(), [&](const Matrix& x) { return g.contains(x); });
    std::vector<Form> space;
    if (has_h) {
        space = invariant_basis(h, d);
        out.ambient = "H_hat-invariants";
    } else {
        space = monomials_of_degree(g.dim(), d);
        out.ambient = "full";
    }
    out.ambient_dim = space.size();
    if (space.empty())
        return out;

    // the one-dimensional constituents live in the fixed space of the commutator subgroup
    std::unordered_map<Matrix, int, MatrixHash> comm;
    for (std::size_t a = 0; a < g.generators().size(); ++a)
        for (std::size_t b = 0; b < g.generators().size(); ++b) {
            const Matrix& x = g.generators()[a];
            const Matrix& y = g.generators()[b];
            Matrix c = matrix_mul(matrix_mul(x, y), matrix_mul(g.inverses()[g.index_of(x)], g.inverses()[g.index_of(y)]));
            for (std::size_t k = 0; k < g.order(); ++k)
                comm.emplace(matrix_mul(matrix_mul(g.elements()[k], c), g.inverses()[k]), 0);
        }
    std::vector<Matrix> comm_inv;
    for (const auto& [c, unused] : comm)
        comm_inv.push_back(*matrix_inverse(c));
    std::sort(comm_inv.begin(), comm_inv.end());
    std::vector<Form> abelian = fixed_subspace(space, comm_inv);

    // simultaneous eigenspaces of the generators
    struct Piece {
        std::vector<CycNum> gen_values;
        std::vector<Form> basis;
    };
    std::vector<Piece> pieces;
    if (!abelian.empty())
        pieces.push_back({{}, abelian});
    const int cond = default_conductor();
    for (const auto& gen : g.generators()) {
        const Matrix& inv = g.inverses()[g.index_of(gen)];
        std::vector<Piece> next;
        for (const auto& p : pieces) {
            Matrix a = generator_action(g, inv, p.basis);
            int ord = matrix_order(a);
            if (cond % ord != 0)
                throw math_error("conductor too small to diagonalize the action");
            std::size_t found = 0;
            for (int j = 0; j < ord; ++j) {
                CycNum lambda = CycNum::zeta(ord, j, cond);
                Matrix shifted = a;
                for (std::size_t i = 0; i < a.size(); ++i)
                    shifted[i][i] -= lambda;
                Matrix ker = matrix_nullspace(shifted);
                if (ker.empty())
                    continue;
                found += ker.size();
                Piece q{p.gen_values, combine(ker, p.basis)};
                q.gen_values.push_back(lambda);
                next.push_back(std::move(q));
            }
            if (found != p.basis.size())
                throw math_error("action is not diagonalizable");
        }
        pieces = std::move(next);
    }
    for (auto& p : pieces) {
        CharacterBlock c;
        c.basis = p.basis;
        const Form& f = c.basis.front();
        for (std::size_t k = 0; k < g.order(); ++k) {
            Form img = act_element(g, k, f);
            c.values.push_back(img.leading_coeff() / f.coeff(img.terms().front().mono));
        }
        out.characters.push_back(std::move(c));
    }
    std::sort(out.characters.begin(), out.characters.end(), [](const CharacterBlock& a, const CharacterBlock& b) {
        if (a.trivial() != b.trivial())
            return a.trivial();
        return a.values < b.values;
    });

    // the rest of the space, as a single block modulo the split part
    if (abelian.size() < space.size()) {
        std::vector<Form> rest;
        std::vector<Form> acc = abelian;
        for (const auto& f : space) {
            if (form_in_span(f, acc))
                continue;
            acc.push_back(f);
            rest.push_back(f);
        }
        out.blocks.push_back(reduced_basis(rest));
    }
    return out;
}

std::optional<std::vector<CycNum>> is_semi_invariant(const LiftedGroup& g, const Form& f)
{
    if (f.is_zero())
        throw std::invalid_argument("is_semi_invariant: zero form");
    std::vector<CycNum> values;
    for (const auto& gen : g.generators()) {
        Form img = act(g.inverses()[g.index_of(gen)], f);
        if (img.size() != f.size())
            return std::nullopt;
        CycNum c = img.leading_coeff() / f.leading_coeff();
        if (img != f.scaled(c))
            return std::nullopt;
        values.push_back(c);
    }
    return values;
}

bool span_preserved(const LiftedGroup& g, const std::vector<Form>& forms)
{
    for (const auto& gen : g.generators()) {
        const Matrix& inv = g.inverses()[g.index_of(gen)];
        for (const auto& f : forms)
            if (!form_in_span(act(inv, f), forms))
                return false;
    }
    return true;
}

}  // namespace solidus
