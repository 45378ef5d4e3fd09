#include "solidus/exactmath.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace solidus {

namespace {

// Fraction-free (Bareiss) forward elimination; returns pivot columns, leaves m in echelon form.
std::vector<int> bareiss_echelon(Matrix& m, int* sign = nullptr)
{
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    int rows = static_cast<int>(m.size()), cols = static_cast<int>(m[0].size());
    CycNum prev(1L);
    int r = 0;
    if (sign)
        *sign = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            if (sign)
                *sign = -*sign;
        }
        CycNum prev_inv = prev.inverse();
        bool unit_prev = prev.is_one();
        for (int i = r + 1; i < rows; ++i) {
            const CycNum a = m[i][c];
            for (int j = c + 1; j < cols; ++j) {
                CycNum v = m[r][c] * m[i][j];
                if (!a.is_zero() && !m[r][j].is_zero())
                    v -= a * m[r][j];
                if (!unit_prev && !v.is_zero())
                    v *= prev_inv;
                m[i][j] = std::move(v);
            }
            m[i][c] = CycNum();
        }
        // entries left of c in rows below r are already zero
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix matrix_rref(Matrix m, std::vector<int>* pivots_out)
{
    std::vector<int> pivots = bareiss_echelon(m);
    int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    int rank = static_cast<int>(pivots.size());
    for (int r = rank - 1; r >= 0; --r) {
        int c = pivots[r];
        CycNum inv = m[r][c].inverse();
        for (int j = c; j < cols; ++j)
            if (!m[r][j].is_zero())
                m[r][j] *= inv;
        for (int i = 0; i < r; ++i) {
            if (m[i][c].is_zero())
                continue;
            CycNum k = m[i][c];
            for (int j = c; j < cols; ++j)
                if (!m[r][j].is_zero())
                    m[i][j] -= k * m[r][j];
        }
    }
    m.resize(rank);
    if (pivots_out)
        *pivots_out = pivots;
    return m;
}

int matrix_rank(Matrix m) { return static_cast<int>(bareiss_echelon(m).size()); }

Matrix matrix_nullspace(const Matrix& m)
{
    if (m.empty())
        return {};
    int cols = static_cast<int>(m[0].size());
    std::vector<int> piv;
    Matrix r = matrix_rref(m, &piv);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv)
        is_piv[c] = true;
    Matrix ker;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f])
            continue;
        std::vector<CycNum> v(cols);
        v[f] = CycNum(1L);
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -r[i][f];
        ker.push_back(std::move(v));
    }
    return ker;
}

std::optional<Matrix> matrix_inverse(const Matrix& a)
{
    int n = static_cast<int>(a.size());
    Matrix aug(n, std::vector<CycNum>(2 * n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n)
            throw std::invalid_argument("inverse of a non-square matrix");
        for (int j = 0; j < n; ++j)
            aug[i][j] = a[i][j];
        aug[i][n + i] = CycNum(1L);
    }
    std::vector<int> piv;
    Matrix r = matrix_rref(aug, &piv);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] >= n)
        return std::nullopt;
    Matrix inv(n, std::vector<CycNum>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv[i][j] = r[i][n + j];
    return inv;
}

CycNum matrix_det(Matrix m)
{
    int n = static_cast<int>(m.size());
    if (n == 0)
        return CycNum(1L);
    int sign = 1;
    auto piv = bareiss_echelon(m, &sign);
    if (static_cast<int>(piv.size()) < n)
        return CycNum();
    CycNum d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

Matrix matrix_mul(const Matrix& a, const Matrix& b)
{
    if (a.empty() || b.empty())
        return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    if (a[0].size() != k)
        throw std::invalid_argument("matrix dimensions do not match");
    Matrix c(n, std::vector<CycNum>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero())
                continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero())
                    c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

Matrix matrix_identity(int n, int conductor)
{
    Matrix m(n, std::vector<CycNum>(n, CycNum(0L, conductor)));
    for (int i = 0; i < n; ++i)
        m[i][i] = CycNum(1L, conductor);
    return m;
}

// ---------------------------------------------------------------------------

FormSpace form_space(const std::vector<Form>& fs)
{
    FormSpace sp;
    for (const auto& f : fs)
        for (const auto& t : f.terms())
            sp.monos.push_back(t.mono);
    std::sort(sp.monos.begin(), sp.monos.end(), std::greater<Mono>());
    sp.monos.erase(std::unique(sp.monos.begin(), sp.monos.end()), sp.monos.end());
    std::map<Mono, int, std::greater<Mono>> index;
    for (std::size_t k = 0; k < sp.monos.size(); ++k)
        index[sp.monos[k]] = static_cast<int>(k);
    for (const auto& f : fs) {
        std::vector<CycNum> row(sp.monos.size());
        for (const auto& t : f.terms())
            row[index[t.mono]] = t.coeff;
        sp.rows.push_back(std::move(row));
    }
    return sp;
}

namespace {

// Echelon basis of forms keyed by leading monomial; rows are monic.
class Reducer {
public:
    Form reduce(Form f) const
    {
        for (const auto& [lead, row] : rows_) {
            if (f.is_zero())
                break;
            CycNum c = f.coeff(lead);
            if (!c.is_zero())
                f -= row.scaled(c);
        }
        return f;
    }

    bool insert(const Form& f)
    {
        Form r = reduce(f);
        if (r.is_zero())
            return false;
        r = r.monic();
        Mono lead = r.terms().front().mono;
        // keep rows fully reduced against the new row so one descending pass suffices
        for (auto& [l, row] : rows_) {
            CycNum c = row.coeff(lead);
            if (!c.is_zero())
                row -= r.scaled(c);
        }
        rows_.emplace(lead, std::move(r));
        return true;
    }

    std::size_t size() const { return rows_.size(); }

private:
    std::map<Mono, Form, std::greater<Mono>> rows_;
};

}  // namespace

int forms_rank(const std::vector<Form>& fs)
{
    Reducer red;
    for (const auto& f : fs)
        red.insert(f);
    return static_cast<int>(red.size());
}

bool form_in_span(const Form& f, const std::vector<Form>& basis)
{
    Reducer red;
    for (const auto& b : basis)
        red.insert(b);
    return red.reduce(f).is_zero();
}

std::vector<Form> independent_forms(const std::vector<Form>& fs)
{
    Reducer red;
    std::vector<Form> out;
    for (const auto& f : fs)
        if (red.insert(f))
            out.push_back(f);
    return out;
}

std::optional<std::vector<CycNum>> form_coordinates(const Form& f, const std::vector<Form>& basis)
{
    std::vector<Form> all(basis);
    all.push_back(f);
    FormSpace sp = form_space(all);
    std::size_t k = basis.size(), n = sp.monos.size();
    Matrix m(n, std::vector<CycNum>(k + 1));
    for (std::size_t j = 0; j <= k; ++j)
        for (std::size_t i = 0; i < n; ++i)
            m[i][j] = sp.rows[j][i];
    std::vector<int> piv;
    Matrix r = matrix_rref(m, &piv);
    if (!piv.empty() && piv.back() == static_cast<int>(k))
        return std::nullopt;
    if (static_cast<std::size_t>(piv.size()) < k)
        throw math_error("basis forms are linearly dependent");
    std::vector<CycNum> x(k);
    for (std::size_t i = 0; i < piv.size(); ++i)
        x[piv[i]] = r[i][k];
    return x;
}

std::vector<Form> monomials_of_degree(int nvars, int d)
{
    std::vector<Form> out;
    std::vector<int> e(nvars, 0);
    // enumerate compositions of d into nvars parts, grlex descending
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nvars - 1) {
            e[i] = left;
            out.push_back(Form::monomial(e, CycNum(1L)));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    if (nvars == 0)
        return out;
    rec(0, d);
    return out;
}

}  // namespace solidus
