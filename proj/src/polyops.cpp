#include "solidus/exactmath.hpp"
#include "solidus/modp.hpp"

#include <algorithm>
#include <map>

namespace solidus {

CycNum form_eval(const Form& f, const ProjPoint& p)
{
    if (static_cast<int>(p.dim()) != f.nvars())
        throw std::invalid_argument("form_eval: dimension mismatch");
    return f.eval(p.coords());
}

namespace {

Mono unit_mono(int nvars, int i)
{
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    return mono_make(e);
}

// x_i <- x_i + c * x_j
Form shear(const Form& f, int i, int j, const CycNum& c)
{
    if (c.is_zero() || f.is_zero())
        return f;
    int n = f.nvars();
    int maxe = 0;
    for (const auto& t : f.terms())
        maxe = std::max(maxe, mono_exp(t.mono, i));
    if (maxe == 0)
        return f;
    std::vector<CycNum> cp(maxe + 1);
    cp[0] = CycNum(1L);
    for (int r = 1; r <= maxe; ++r)
        cp[r] = cp[r - 1] * c;
    Mono ui = unit_mono(n, i), uj = unit_mono(n, j);
    FormBuilder b(n, f.degree(), f.weighted());
    for (const auto& t : f.terms()) {
        int k = mono_exp(t.mono, i);
        if (k == 0) {
            b.add(t.mono, t.coeff);
            continue;
        }
        mpz_class binom = 1;
        Mono m = t.mono;
        for (int r = 0; r <= k; ++r) {
            CycNum v = t.coeff * cp[r];
            v.mul_rational(mpq_class(binom));
            b.add(m, v);
            // next: one x_i -> x_j
            m = m - ui + uj;
            binom = binom * (k - r) / (r + 1);
        }
    }
    return b.build();
}

// x_i <- d_i x_i
Form scale_vars(const Form& f, const std::vector<CycNum>& d)
{
    int n = f.nvars();
    bool trivial = true;
    for (const auto& x : d)
        trivial = trivial && x.is_one();
    if (trivial)
        return f;
    std::vector<std::vector<CycNum>> pw(n);
    int deg = f.degree();
    for (int i = 0; i < n; ++i) {
        pw[i].push_back(CycNum(1L));
        for (int k = 1; k <= deg; ++k)
            pw[i].push_back(pw[i].back() * d[i]);
    }
    FormBuilder b(n, f.degree(), f.weighted());
    for (const auto& t : f.terms()) {
        CycNum v = t.coeff;
        for (int i = 0; i < n; ++i) {
            int e = mono_exp(t.mono, i);
            if (e && !d[i].is_one())
                v *= pw[i][e];
        }
        b.add(t.mono, v);
    }
    return b.build();
}

// new variable r takes the role of old variable src[r]
Form relabel(const Form& f, const std::vector<int>& src)
{
    int n = f.nvars();
    bool ident = true;
    for (int r = 0; r < n; ++r)
        ident = ident && src[r] == r;
    if (ident)
        return f;
    FormBuilder b(n, f.degree(), f.weighted());
    for (const auto& t : f.terms()) {
        std::vector<int> e(n);
        for (int r = 0; r < n; ++r)
            e[r] = mono_exp(t.mono, src[r]);
        b.add(mono_make(e), t.coeff);
    }
    return b.build();
}

// f(A x) for square invertible A via A = P^T L D U; empty if A is singular
std::optional<Form> square_linear_substitute(const Form& f, Matrix a)
{
    int n = static_cast<int>(a.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    Matrix l = matrix_identity(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c].is_zero())
            ++p;
        if (p == n)
            return std::nullopt;
        if (p != c) {
            std::swap(a[p], a[c]);
            std::swap(perm[p], perm[c]);
            for (int k = 0; k < c; ++k)
                std::swap(l[p][k], l[c][k]);
        }
        CycNum inv = a[c][c].inverse();
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero())
                continue;
            CycNum k = a[r][c] * inv;
            l[r][c] = k;
            for (int j = c; j < n; ++j)
                a[r][j] -= k * a[c][j];
        }
    }
    // PA = L U with (PA)_r = A_{perm[r]}; A = P^T L U
    // f(P^T y): x_{perm[r]} = y_r
    std::vector<int> src(n);
    for (int r = 0; r < n; ++r)
        src[r] = perm[r];
    Form g = relabel(f, src);
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i)
            g = shear(g, i, j, l[i][j]);
    std::vector<CycNum> d(n);
    for (int i = 0; i < n; ++i)
        d[i] = a[i][i];
    g = scale_vars(g, d);
    // U = D U1, U1 = T_{n-2} ... T_0 with T_j = I + sum_k u_jk e_j e_k^T
    for (int j = n - 2; j >= 0; --j)
        for (int k = j + 1; k < n; ++k) {
            if (a[j][k].is_zero())
                continue;
            g = shear(g, j, k, a[j][k] * d[j].inverse());
        }
    return g;
}

Form generic_substitute(const Form& f, const std::vector<Form>& comps, int target_nvars, int d, bool weighted)
{
    int n = f.nvars();
    std::vector<std::vector<Form>> pw(n);
    int maxe = 0;
    for (const auto& t : f.terms())
        for (int i = 0; i < n; ++i)
            maxe = std::max(maxe, mono_exp(t.mono, i));
    for (int i = 0; i < n; ++i) {
        pw[i].push_back(Form::constant(target_nvars, CycNum(1L)));
        if (weighted)
            pw[i].back() = Form::parse("1", target_nvars, true);
        for (int k = 1; k <= maxe; ++k)
            pw[i].push_back(pw[i].back() * comps[i]);
    }
    FormBuilder out(target_nvars, f.degree() * d, weighted);
    for (const auto& t : f.terms()) {
        Form prod = Form::constant(target_nvars, t.coeff);
        if (weighted)
            prod = Form::parse("1", target_nvars, true).scaled(t.coeff);
        for (int i = 0; i < n; ++i) {
            int e = mono_exp(t.mono, i);
            if (e)
                prod = prod * pw[i][e];
        }
        for (const auto& pt : prod.terms())
            out.add(pt.mono, pt.coeff);
    }
    return out.build();
}

}  // namespace

Form form_linear_substitute(const Form& f, const Matrix& a)
{
    int n = f.nvars();
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("linear substitution: one row per variable required");
    int m = static_cast<int>(a[0].size());
    if (f.weighted())
        throw std::invalid_argument("linear substitution of weighted forms is not supported");
    if (m == n) {
        if (auto g = square_linear_substitute(f, a))
            return *g;
    } else if (m < n) {
        // extend with unit columns to an invertible matrix, then set the extra variables to zero
        Matrix ext = a;
        std::vector<std::vector<CycNum>> cols;
        for (int k = 0; k < n && static_cast<int>(ext[0].size()) < n; ++k) {
            Matrix trial = ext;
            for (int i = 0; i < n; ++i)
                trial[i].push_back(CycNum(i == k ? 1L : 0L));
            Matrix tt(trial[0].size(), std::vector<CycNum>(n));
            for (int i = 0; i < n; ++i)
                for (std::size_t j = 0; j < trial[0].size(); ++j)
                    tt[j][i] = trial[i][j];
            if (matrix_rank(tt) == static_cast<int>(trial[0].size()))
                ext = trial;
        }
        if (static_cast<int>(ext[0].size()) == n) {
            if (auto g = square_linear_substitute(f, ext)) {
                FormBuilder b(m, f.degree());
                for (const auto& t : g->terms()) {
                    bool keep = true;
                    for (int k = m; k < n; ++k)
                        keep = keep && mono_exp(t.mono, k) == 0;
                    if (keep)
                        b.add(t.mono, t.coeff);
                }
                return b.build();
            }
        }
    }
    std::vector<Form> comps;
    for (int i = 0; i < n; ++i) {
        FormBuilder b(m, 1);
        for (int j = 0; j < m; ++j)
            b.add(unit_mono(m, j), a[i][j]);
        comps.push_back(b.build());
    }
    return generic_substitute(f, comps, m, 1, false);
}

Form form_monomial_substitute(const Form& f, const std::vector<std::vector<int>>& rows,
                              const std::vector<CycNum>& scales)
{
    int n = f.nvars();
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("monomial substitution: one row per variable required");
    int m = static_cast<int>(rows[0].size());
    int d = -1;
    std::vector<Mono> images;
    for (const auto& r : rows) {
        int s = 0;
        for (int e : r)
            s += e;
        if (d >= 0 && s != d)
            throw std::invalid_argument("monomial substitution: inhomogeneous components");
        d = s;
        images.push_back(mono_make(r));
    }
    bool scaled = !scales.empty();
    std::vector<std::vector<CycNum>> pw(n);
    if (scaled) {
        for (int i = 0; i < n; ++i) {
            pw[i].push_back(CycNum(1L));
            for (int k = 1; k <= f.degree(); ++k)
                pw[i].push_back(pw[i].back() * scales[i]);
        }
    }
    FormBuilder b(m, f.degree() * d);
    for (const auto& t : f.terms()) {
        Mono img = mono_make(std::vector<int>(m, 0));
        CycNum c = t.coeff;
        for (int i = 0; i < n; ++i) {
            int e = mono_exp(t.mono, i);
            for (int k = 0; k < e; ++k)
                img = mono_mul(img, images[i]);
            if (scaled && e)
                c *= pw[i][e];
        }
        b.add(img, c);
    }
    return b.build();
}

Form form_substitute(const Form& f, const std::vector<Form>& comps)
{
    if (static_cast<int>(comps.size()) != f.nvars())
        throw std::invalid_argument("form_substitute: component count must equal variable count");
    int d = -1, m = -1;
    bool weighted = false;
    for (const auto& c : comps) {
        if (m >= 0 && c.nvars() != m)
            throw std::invalid_argument("form_substitute: components live in different rings");
        m = c.nvars();
        weighted = c.weighted();
        if (c.is_zero())
            continue;
        if (d >= 0 && c.degree() != d)
            throw std::invalid_argument("form_substitute: inhomogeneous components");
        d = c.degree();
    }
    if (d < 0)
        d = 0;
    if (f.weighted())
        throw std::invalid_argument("form_substitute: weighted source ring");
    if (!weighted && d == 1) {
        // linear components: use the shear path
        Matrix a(f.nvars(), std::vector<CycNum>(m));
        for (int i = 0; i < f.nvars(); ++i)
            for (const auto& t : comps[i].terms())
                for (int j = 0; j < m; ++j)
                    if (mono_exp(t.mono, j))
                        a[i][j] = t.coeff;
        return form_linear_substitute(f, a);
    }
    if (!weighted && d > 1) {
        bool monomial = true;
        for (const auto& c : comps)
            monomial = monomial && c.size() == 1;
        if (monomial) {
            std::vector<std::vector<int>> rows;
            std::vector<CycNum> scales;
            for (const auto& c : comps) {
                rows.push_back(mono_exps(c.terms().front().mono, m));
                scales.push_back(c.terms().front().coeff);
            }
            return form_monomial_substitute(f, rows, scales);
        }
    }
    return generic_substitute(f, comps, m, d, weighted);
}

// ---------------------------------------------------------------------------

std::optional<Form> form_divide(const Form& f, const Form& g)
{
    if (g.is_zero())
        throw math_error("division by the zero form");
    if (f.nvars() != g.nvars())
        throw std::invalid_argument("form_divide: different rings");
    if (f.is_zero())
        return Form(f.nvars(), std::max(f.degree() - g.degree(), 0), f.weighted());
    if (f.degree() < g.degree())
        return std::nullopt;
    std::map<Mono, CycNum, std::greater<Mono>> rem;
    for (const auto& t : f.terms())
        rem.emplace(t.mono, t.coeff);
    const Term& lt = g.terms().front();
    CycNum lt_inv = lt.coeff.inverse();
    FormBuilder q(f.nvars(), f.degree() - g.degree(), f.weighted());
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!mono_divides(lt.mono, it->first))
            return std::nullopt;
        Mono qm = mono_div(it->first, lt.mono);
        CycNum qc = it->second * lt_inv;
        q.add(qm, qc);
        for (const auto& t : g.terms()) {
            Mono m = mono_mul(qm, t.mono);
            CycNum v = qc * t.coeff;
            auto jt = rem.find(m);
            if (jt == rem.end()) {
                rem.emplace(m, -v);
            } else {
                jt->second -= v;
                if (jt->second.is_zero())
                    rem.erase(jt);
            }
        }
    }
    return q.build();
}

const std::vector<Form>& tetrahedra_planes()
{
    static const std::vector<Form> planes = [] {
        const char* text[] = {"x0",          "x1",          "x2",          "x3",
                              "x0+x1+x2-x3", "x0+x1-x2+x3", "x0-x1+x2+x3", "x0-x1-x2-x3",
                              "x0+x1+x2+x3", "x0-x1-x2+x3", "x0+x1-x2-x3", "x0-x1+x2-x3"};
        std::vector<Form> out;
        for (const char* t : text)
            out.push_back(Form::parse(t, 4));
        return out;
    }();
    return planes;
}

std::optional<Form> known_plane_factor(const Form& f)
{
    if (f.nvars() != 4 || f.degree() == 0)
        return std::nullopt;
    for (const auto& p : tetrahedra_planes())
        if (form_divide(f, p))
            return p;
    return std::nullopt;
}

namespace {

// Variables with index >= v only.
int degree_in(const Form& f, int v)
{
    int d = 0;
    for (const auto& t : f.terms())
        d = std::max(d, mono_exp(t.mono, v));
    return d;
}

Form coefficient_in(const Form& f, int v, int k)
{
    int n = f.nvars();
    Mono u = mono_make([&] {
        std::vector<int> e(n, 0);
        e[v] = k;
        return e;
    }());
    FormBuilder b(n, f.degree() - k, f.weighted());
    for (const auto& t : f.terms())
        if (mono_exp(t.mono, v) == k)
            b.add(t.mono - u, t.coeff);
    return b.build();
}

Form one_form(int n) { return Form::constant(n, CycNum(1L)); }

Form gcd_rec(const Form& a, const Form& b, int v);

Form content_in(const Form& f, int v)
{
    int n = f.nvars();
    int dmax = degree_in(f, v);
    Form g;
    bool have = false;
    for (int k = dmax; k >= 0; --k) {
        Form c = coefficient_in(f, v, k);
        if (c.is_zero())
            continue;
        g = have ? gcd_rec(g, c, v + 1) : c.monic();
        have = true;
        if (g.degree() == 0)
            return one_form(n);
    }
    return g;
}

Form exact_div(const Form& a, const Form& b)
{
    auto q = form_divide(a, b);
    if (!q)
        throw math_error("internal gcd error: inexact division");
    return *q;
}

Form primitive_in(const Form& f, int v)
{
    Form c = content_in(f, v);
    Form p = c.degree() == 0 ? f : exact_div(f, c);
    return p.monic();
}

Form prem(Form a, const Form& b, int v)
{
    int n = a.nvars();
    int db = degree_in(b, v);
    Form lb = coefficient_in(b, v, db);
    while (!a.is_zero() && degree_in(a, v) >= db) {
        int da = degree_in(a, v);
        Form la = coefficient_in(a, v, da);
        std::vector<int> e(n, 0);
        e[v] = da - db;
        a = lb * a - la * b.mul_mono(mono_make(e));
    }
    return a;
}

Form gcd_rec(const Form& a, const Form& b, int v)
{
    int n = a.nvars();
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.degree() == 0 || b.degree() == 0)
        return one_form(n);
    if (v >= n - 1) {
        int k = std::min(degree_in(a, n - 1), degree_in(b, n - 1));
        std::vector<int> e(n, 0);
        e[n - 1] = k;
        return Form::monomial(e, CycNum(1L));
    }
    if (degree_in(a, v) == 0 && degree_in(b, v) == 0)
        return gcd_rec(a, b, v + 1);
    Form ca = content_in(a, v), cb = content_in(b, v);
    Form c = gcd_rec(ca, cb, v + 1);
    Form pa = ca.degree() == 0 ? a.monic() : exact_div(a, ca).monic();
    Form pb = cb.degree() == 0 ? b.monic() : exact_div(b, cb).monic();
    if (degree_in(pa, v) < degree_in(pb, v))
        std::swap(pa, pb);
    for (;;) {
        if (degree_in(pb, v) == 0)
            return c;
        Form r = prem(pa, pb, v);
        if (r.is_zero())
            return (c * pb).monic();
        pa = pb;
        pb = primitive_in(r, v);
    }
}

// Degree of the gcd of the restrictions to a random line over F_p; -1 if reduction is impossible.
int modular_gcd_degree(const std::vector<Form>& fs, Rng& rng)
{
    try {
        const auto& F = modp::Field::large();
        int n = fs.front().nvars();
        std::vector<std::uint64_t> a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = static_cast<std::uint64_t>(rng.range(1, 1000000000));
            b[i] = static_cast<std::uint64_t>(rng.range(1, 1000000000));
        }
        modp::Poly g;
        bool first = true;
        for (const auto& f : fs) {
            auto mf = modp::reduce_form(F, f);
            auto r = modp::restrict_line(F, mf, a, b);
            modp::trim(r);
            if (modp::degree(r) < f.degree())
                return -1;  // leading coefficient vanished; the certificate does not apply
            g = first ? r : modp::poly_gcd(F, g, r);
            first = false;
            if (modp::degree(g) == 0)
                return 0;
        }
        return modp::degree(g);
    } catch (const math_error&) {
        return -1;
    }
}

}  // namespace

Form form_gcd(const std::vector<Form>& fs_in)
{
    std::vector<Form> fs;
    for (const auto& f : fs_in)
        if (!f.is_zero())
            fs.push_back(f);
    if (fs.empty())
        throw math_error("form_gcd: no nonzero input");
    int n = fs.front().nvars();
    for (const auto& f : fs)
        if (f.nvars() != n)
            throw std::invalid_argument("form_gcd: forms in different rings");
    if (fs.front().weighted())
        throw std::invalid_argument("form_gcd: weighted forms are not supported");
    if (fs.size() == 1)
        return fs.front().monic();

    // monomial content
    std::vector<int> e = mono_exps(fs.front().mono_content(), n);
    for (const auto& f : fs) {
        auto c = mono_exps(f.mono_content(), n);
        for (int i = 0; i < n; ++i)
            e[i] = std::min(e[i], c[i]);
    }
    Form g = Form::monomial(e, CycNum(1L));
    Mono cm = mono_make(e);
    if (mono_total(cm) > 0)
        for (auto& f : fs)
            f = f.div_mono(cm);

    // the tetrahedra planes, to saturation
    if (n == 4) {
        Rng rng(0x5eed);
        for (const auto& plane : tetrahedra_planes()) {
            if (plane.size() == 1)
                continue;
            for (;;) {
                bool all = true;
                for (const auto& f : fs) {
                    if (f.degree() == 0) {
                        all = false;
                        break;
                    }
                    // a point of the plane with x3 determined by the others
                    std::vector<CycNum> x(4);
                    for (int i = 0; i < 3; ++i)
                        x[i] = CycNum(rng.nonzero_rational(50));
                    CycNum s;
                    for (const auto& t : plane.terms())
                        for (int i = 0; i < 3; ++i)
                            if (mono_exp(t.mono, i))
                                s += t.coeff * x[i];
                    x[3] = -s / plane.coeff(mono_make({0, 0, 0, 1}));
                    if (!f.eval(x).is_zero()) {
                        all = false;
                        break;
                    }
                }
                if (!all)
                    break;
                std::vector<Form> q;
                for (const auto& f : fs) {
                    auto d = form_divide(f, plane);
                    if (!d) {
                        all = false;
                        break;
                    }
                    q.push_back(std::move(*d));
                }
                if (!all)
                    break;
                fs = std::move(q);
                g = g * plane;
            }
        }
    }

    for (const auto& f : fs)
        if (f.degree() == 0)
            return g.monic();
    Rng rng(0xc0ffee);
    if (modular_gcd_degree(fs, rng) == 0)
        return g.monic();
    // general fallback: recursive primitive remainder sequences
    Form h = fs.front();
    for (std::size_t k = 1; k < fs.size() && h.degree() > 0; ++k)
        h = gcd_rec(h, fs[k], 0);
    return (g * h).monic();
}

// ---------------------------------------------------------------------------

int vanishing_order_at_point(const Form& f, const ProjPoint& p)
{
    if (static_cast<int>(p.dim()) != f.nvars())
        throw std::invalid_argument("vanishing_order_at_point: dimension mismatch");
    if (f.is_zero())
        throw math_error("vanishing order of the zero form");
    int k = p.pivot();
    Form g = f;
    for (int j = 0; j < f.nvars(); ++j)
        if (j != k && !p[j].is_zero())
            g = shear(g, j, k, p[j]);
    int best = 0;
    for (const auto& t : g.terms())
        best = std::max(best, mono_exp(t.mono, k) * g.weight(k));
    return f.degree() - best;
}

Form form_restrict_to_line(const Form& f, const ProjPoint& a, const ProjPoint& b)
{
    int n = f.nvars();
    Matrix m(n, std::vector<CycNum>(2));
    for (int i = 0; i < n; ++i) {
        m[i][0] = a[i];
        m[i][1] = b[i];
    }
    return form_linear_substitute(f, m);
}

namespace {

bool is_coordinate_point(const ProjPoint& p)
{
    int nz = 0;
    for (const auto& c : p.coords())
        nz += !c.is_zero();
    return nz == 1;
}

}  // namespace

int vanishing_order_along_line(const Form& f, const ProjLine& l, std::uint64_t seed)
{
    if (f.is_zero())
        throw math_error("vanishing order of the zero form");
    int n = f.nvars();
    if (static_cast<int>(l.a().dim()) != n)
        throw std::invalid_argument("vanishing_order_along_line: dimension mismatch");
    if (is_coordinate_point(l.a()) && is_coordinate_point(l.b())) {
        int i = l.a().pivot(), j = l.b().pivot();
        int best = -1;
        for (const auto& t : f.terms()) {
            int s = mono_total(t.mono) - mono_exp(t.mono, i) - mono_exp(t.mono, j);
            if (best < 0 || s < best)
                best = s;
        }
        return best;
    }
    if (n != 4)
        throw std::invalid_argument("generic line multiplicity needs four variables");
    Rng rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Matrix a(n, std::vector<CycNum>(4));
        for (int i = 0; i < n; ++i) {
            a[i][0] = l.a()[i];
            a[i][1] = l.b()[i];
            a[i][2] = CycNum(rng.range(-9973, 9973));
            a[i][3] = CycNum(rng.range(-9973, 9973));
        }
        if (matrix_det(a).is_zero())
            continue;
        Form g = form_linear_substitute(f, a);
        int o1 = -1, o2 = -1;
        for (const auto& t : g.terms()) {
            int ee = mono_exp(t.mono, 2), ed = mono_exp(t.mono, 3);
            if (ed == 0 && (o1 < 0 || ee < o1))
                o1 = ee;
            if (ee == 0 && (o2 < 0 || ed < o2))
                o2 = ed;
        }
        if (o1 != o2)
            throw math_error("line multiplicity: generic directions disagree (" + std::to_string(o1) + " vs " +
                             std::to_string(o2) + "); retry with another seed");
        return o1;
    }
    throw math_error("line multiplicity: could not draw independent directions");
}

}  // namespace solidus
