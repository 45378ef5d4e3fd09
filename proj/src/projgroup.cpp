#include "solidus/projgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace solidus {

std::size_t matrix_hash(const Matrix& m)
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& row : m)
        for (const auto& x : row)
            h = (h ^ x.hash()) * 0x100000001b3ULL;
    return h;
}

ProjMap::ProjMap(Matrix m) : m_(std::move(m))
{
    int n = static_cast<int>(m_.size());
    for (const auto& row : m_)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("projective map needs a square matrix");
    const CycNum* piv = nullptr;
    for (const auto& row : m_) {
        for (const auto& x : row)
            if (!x.is_zero()) {
                piv = &x;
                break;
            }
        if (piv)
            break;
    }
    if (!piv)
        throw math_error("zero matrix is not a projective map");
    if (!piv->is_one()) {
        CycNum inv = piv->inverse();
        for (auto& row : m_)
            for (auto& x : row)
                if (!x.is_zero())
                    x *= inv;
    }
    hash_ = matrix_hash(m_);
}

ProjMap ProjMap::identity(int n) { return ProjMap(matrix_identity(n)); }

ProjMap ProjMap::diagonal(const CycNum& a1, const CycNum& a2, const CycNum& a3)
{
    Matrix m = matrix_identity(4);
    m[0][0] = a1;
    m[1][1] = a2;
    m[2][2] = a3;
    return ProjMap(std::move(m));
}

ProjMap ProjMap::parse(const std::vector<std::vector<std::string>>& rows)
{
    Matrix m;
    for (const auto& r : rows) {
        std::vector<CycNum> row;
        for (const auto& s : r)
            row.push_back(parse_scalar(s));
        m.push_back(std::move(row));
    }
    return ProjMap(std::move(m));
}

ProjMap ProjMap::operator*(const ProjMap& o) const { return ProjMap(matrix_mul(m_, o.m_)); }

ProjMap ProjMap::inverse() const
{
    auto inv = matrix_inverse(m_);
    if (!inv)
        throw math_error("singular matrix");
    return ProjMap(std::move(*inv));
}

ProjMap ProjMap::pow(int e) const
{
    if (e < 0)
        return inverse().pow(-e);
    ProjMap r = identity(dim());
    for (int k = 0; k < e; ++k)
        r = r * *this;
    return r;
}

ProjPoint ProjMap::apply(const ProjPoint& p) const
{
    int n = dim();
    if (static_cast<int>(p.dim()) != n)
        throw std::invalid_argument("point dimension does not match map");
    std::vector<CycNum> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!m_[i][j].is_zero() && !p[j].is_zero())
                out[i] += m_[i][j] * p[j];
    return ProjPoint(std::move(out));
}

bool ProjMap::is_identity() const { return m_ == matrix_identity(dim()); }

bool ProjMap::is_diagonal() const
{
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (i != j && !m_[i][j].is_zero())
                return false;
    return true;
}

nlohmann::json matrix_json(const Matrix& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : m) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : r)
            row.push_back(x.str());
        rows.push_back(row);
    }
    return rows;
}

Matrix parse_matrix_json(const nlohmann::json& rows)
{
    Matrix m;
    for (const auto& r : rows) {
        std::vector<CycNum> row;
        for (const auto& x : r) {
            if (x.is_number_integer())
                row.push_back(CycNum(x.get<long>()));
            else
                row.push_back(parse_scalar(x.get<std::string>()));
        }
        m.push_back(std::move(row));
    }
    return m;
}

nlohmann::json ProjMap::to_json() const { return matrix_json(m_); }

std::string ProjMap::str() const { return to_json().dump(); }

// ---------------------------------------------------------------------------

MatrixGroup::MatrixGroup(std::vector<ProjMap> gens, std::vector<ProjMap> elements, std::string name)
    : gens_(std::move(gens)), elems_(std::move(elements)), name_(std::move(name))
{
    for (std::size_t k = 0; k < elems_.size(); ++k)
        index_.emplace(elems_[k], static_cast<int>(k));
}

int MatrixGroup::index_of(const ProjMap& g) const
{
    auto it = index_.find(g);
    return it == index_.end() ? -1 : it->second;
}

MatrixGroup group_closure(const std::vector<ProjMap>& gens, std::size_t cap, const std::string& name)
{
    if (gens.empty())
        throw std::invalid_argument("group_closure: no generators");
    int n = gens.front().dim();
    for (const auto& g : gens)
        if (matrix_det(g.matrix()).is_zero())
            throw math_error("group_closure: singular generator");
    std::vector<ProjMap> elems{ProjMap::identity(n)};
    std::unordered_set<ProjMap, ProjMapHash> seen{elems.front()};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            ProjMap h = g * elems[head];
            if (seen.insert(h).second) {
                elems.push_back(h);
                if (elems.size() > cap)
                    throw math_error("group_closure: more than " + std::to_string(cap) + " elements");
            }
        }
    }
    return MatrixGroup(gens, std::move(elems), name);
}

int element_order(const ProjMap& g, int cap)
{
    ProjMap p = g;
    for (int k = 1; k <= cap; ++k) {
        if (p.is_identity())
            return k;
        p = p * g;
    }
    throw math_error("element order exceeds cap");
}

MatrixGroup center(const MatrixGroup& g)
{
    std::vector<ProjMap> z;
    for (const auto& x : g.elements()) {
        bool central = true;
        for (const auto& s : g.generators())
            if (x * s != s * x) {
                central = false;
                break;
            }
        if (central)
            z.push_back(x);
    }
    return MatrixGroup(z, z);
}

MatrixGroup derived_subgroup(const MatrixGroup& g)
{
    const auto& gens = g.generators();
    std::vector<ProjMap> comm;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            comm.push_back(gens[a] * gens[b] * gens[a].inverse() * gens[b].inverse());
    if (comm.empty())
        comm.push_back(ProjMap::identity(gens.front().dim()));
    // normal closure: close under products and conjugation by generators
    std::vector<ProjMap> cur = comm;
    for (;;) {
        MatrixGroup d = group_closure(cur);
        std::vector<ProjMap> extra;
        for (const auto& x : cur)
            for (const auto& s : gens) {
                ProjMap y = s * x * s.inverse();
                if (!d.contains(y))
                    extra.push_back(y);
            }
        if (extra.empty())
            return d;
        cur.insert(cur.end(), extra.begin(), extra.end());
    }
}

namespace {

std::vector<int> prime_factors(int n)
{
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    if (n > 1)
        ps.push_back(n);
    return ps;
}

// invariant factors of a finite abelian group from its element orders
std::vector<int> invariant_factors(const std::vector<int>& orders)
{
    int n = static_cast<int>(orders.size());
    std::vector<std::vector<int>> exps;  // per prime, exponents descending
    std::vector<int> primes = prime_factors(n);
    for (int p : primes) {
        std::vector<int> counts;  // counts[k] = #{x : x^(p^k) = 1}
        int pk = 1;
        for (int k = 0;; ++k) {
            int c = 0;
            for (int o : orders)
                if (pk % o == 0 || (o == 1))
                    ++c;
            // x^(p^k) = 1 iff order divides p^k
            c = 0;
            for (int o : orders)
                if (pk % o == 0)
                    ++c;
            counts.push_back(c);
            if (k > 0 && counts[k] == counts[k - 1])
                break;
            pk *= p;
        }
        // r_k = number of cyclic factors with exponent >= k
        std::vector<int> ge;
        for (std::size_t k = 1; k < counts.size(); ++k) {
            int ratio = counts[k] / counts[k - 1];
            int r = 0;
            while (ratio > 1) {
                ratio /= p;
                ++r;
            }
            ge.push_back(r);
        }
        std::vector<int> e;
        for (std::size_t k = 0; k < ge.size(); ++k) {
            int next = k + 1 < ge.size() ? ge[k + 1] : 0;
            for (int c = 0; c < ge[k] - next; ++c)
                e.push_back(static_cast<int>(k) + 1);
        }
        std::sort(e.rbegin(), e.rend());
        exps.push_back(e);
    }
    std::size_t width = 0;
    for (const auto& e : exps)
        width = std::max(width, e.size());
    std::vector<int> factors(width, 1);
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = 0; j < exps[i].size(); ++j)
            for (int k = 0; k < exps[i][j]; ++k)
                factors[j] *= primes[i];
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace

Fingerprint fingerprint(const MatrixGroup& g)
{
    Fingerprint fp;
    fp.order = g.order();
    std::vector<int> ord(g.order());
    for (std::size_t k = 0; k < g.order(); ++k) {
        ord[k] = element_order(g.elements()[k]);
        fp.element_orders[ord[k]]++;
    }
    fp.center_order = center(g).order();
    MatrixGroup d = derived_subgroup(g);
    fp.derived_order = d.order();
    // cosets of the derived subgroup
    std::vector<int> coset(g.order(), -1);
    int ncos = 0;
    for (std::size_t k = 0; k < g.order(); ++k) {
        if (coset[k] >= 0)
            continue;
        for (const auto& x : d.elements())
            coset[g.index_of(g.elements()[k] * x)] = ncos;
        ++ncos;
    }
    std::vector<int> qorders(ncos, 0);
    int id_coset = coset[g.index_of(ProjMap::identity(g.elements().front().dim()))];
    for (std::size_t k = 0; k < g.order(); ++k) {
        int c = coset[k];
        if (qorders[c])
            continue;
        ProjMap p = g.elements()[k];
        int e = 1;
        while (coset[g.index_of(p)] != id_coset) {
            p = p * g.elements()[k];
            ++e;
        }
        qorders[c] = e;
    }
    fp.abelianization = ncos == 1 ? std::vector<int>{} : invariant_factors(qorders);
    return fp;
}

nlohmann::json Fingerprint::to_json() const
{
    nlohmann::json eo = nlohmann::json::object();
    for (const auto& [o, c] : element_orders)
        eo[std::to_string(o)] = c;
    return {{"order", order},
            {"element_orders", eo},
            {"center_order", center_order},
            {"derived_order", derived_order},
            {"abelianization", abelianization}};
}

// ---------------------------------------------------------------------------

std::vector<int> point_permutation(const ProjMap& g, const std::vector<ProjPoint>& base)
{
    std::vector<int> perm(base.size(), -1);
    for (std::size_t i = 0; i < base.size(); ++i) {
        ProjPoint q = g.apply(base[i]);
        auto it = std::find(base.begin(), base.end(), q);
        if (it == base.end())
            throw math_error("base set is not invariant");
        perm[i] = static_cast<int>(it - base.begin());
    }
    return perm;
}

Sigma4Action sigma4_action(const MatrixGroup& g, const std::vector<ProjPoint>& base)
{
    if (base.size() != 4)
        throw std::invalid_argument("sigma4_action needs four base points");
    for (const auto& s : g.generators())
        point_permutation(s, base);
    OrbitRecord o = orbit(g, base.front());
    if (o.length != 4)
        throw math_error("base points do not form a single orbit");
    for (const auto& p : base)
        if (!o.contains(p))
            throw math_error("base points do not form a single orbit");
    Sigma4Action out;
    std::set<std::vector<int>> image;
    std::vector<ProjMap> ker;
    const std::vector<int> ident{0, 1, 2, 3};
    for (const auto& x : g.elements()) {
        auto perm = point_permutation(x, base);
        image.insert(perm);
        if (perm == ident)
            ker.push_back(x);
        out.images.push_back(std::move(perm));
    }
    out.image_size = image.size();
    out.kernel = MatrixGroup(ker, ker, "T");
    return out;
}

bool OrbitRecord::contains(const ProjPoint& p) const { return std::find(points.begin(), points.end(), p) != points.end(); }

OrbitRecord orbit(const MatrixGroup& g, const ProjPoint& p)
{
    OrbitRecord rec;
    rec.representative = p;
    std::unordered_set<ProjPoint, ProjPointHash> seen{p};
    rec.points.push_back(p);
    for (std::size_t head = 0; head < rec.points.size(); ++head)
        for (const auto& s : g.generators()) {
            ProjPoint q = s.apply(rec.points[head]);
            if (seen.insert(q).second)
                rec.points.push_back(q);
        }
    rec.length = rec.points.size();
    std::size_t stab = 0;
    for (const auto& x : g.elements())
        if (x.apply(p) == p)
            ++stab;
    rec.stabilizer_order = stab;
    return rec;
}

MatrixGroup stabilizer(const MatrixGroup& g, const ProjPoint& p)
{
    std::vector<ProjMap> st;
    for (const auto& x : g.elements())
        if (x.apply(p) == p)
            st.push_back(x);
    return MatrixGroup(st, st, g.name().empty() ? "" : "Stab_" + g.name());
}

std::optional<ProjPoint> line_intersect(const ProjLine& l1, const ProjLine& l2)
{
    std::size_t n = l1.a().dim();
    Matrix m(n, std::vector<CycNum>(4));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][0] = l1.a()[i];
        m[i][1] = l1.b()[i];
        m[i][2] = -l2.a()[i];
        m[i][3] = -l2.b()[i];
    }
    Matrix ker = matrix_nullspace(m);
    if (ker.empty())
        return std::nullopt;
    if (ker.size() > 1)
        throw math_error("line_intersect: identical lines");
    return l1.point_at(ker[0][0], ker[0][1]);
}

nlohmann::json group_descriptor(const std::vector<ProjMap>& gens)
{
    nlohmann::json g = nlohmann::json::array();
    for (const auto& x : gens)
        g.push_back(x.to_json());
    return {{"conductor", default_conductor()}, {"generators", g}};
}

std::vector<ProjMap> parse_group_descriptor(const nlohmann::json& j)
{
    if (!j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("group descriptor lacks a generators array");
    if (j.contains("conductor")) {
        int c = j["conductor"].get<int>();
        if (c % default_conductor() != 0 && default_conductor() % c != 0)
            throw std::invalid_argument("descriptor conductor incompatible with the active conductor");
    }
    std::vector<ProjMap> gens;
    for (const auto& m : j["generators"]) {
        Matrix mat = parse_matrix_json(m);
        if (mat.size() != 4)
            throw std::invalid_argument("generators must be 4x4");
        gens.emplace_back(std::move(mat));
    }
    return gens;
}

}  // namespace solidus
