#include "solidus/modp.hpp"

#include <algorithm>

namespace solidus::modp {

Field::Field(std::uint64_t p) : p_(p), z24_(0)
{
    if ((p - 1) % 24 != 0)
        throw std::invalid_argument("prime must be 1 mod 24");
    for (std::uint64_t g = 2; g < p; ++g) {
        std::uint64_t z = pow(g, (p - 1) / 24);
        if (pow(z, 12) != 1 && pow(z, 8) != 1) {
            z24_ = z;
            break;
        }
    }
}

const Field& Field::large()
{
    static const Field f(2013265921ULL);
    return f;
}

const Field& Field::small()
{
    static const Field f(1009ULL);
    return f;
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const
{
    std::uint64_t r = 1;
    a %= p_;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::inv(std::uint64_t a) const
{
    if (a % p_ == 0)
        throw math_error("inverse of zero mod p");
    return pow(a, p_ - 2);
}

std::uint64_t Field::reduce(const mpq_class& q) const
{
    std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
    if (den == 0)
        throw math_error("denominator divisible by p");
    return mul(num, inv(den));
}

std::uint64_t Field::reduce(const CycNum& c) const
{
    int cond = c.conductor();
    if (c.is_rational())
        return reduce(c.constant_term());
    if (24 % cond != 0)
        throw math_error("conductor does not divide 24");
    std::uint64_t z = pow(z24_, 24 / cond);
    std::uint64_t acc = 0;
    for (const auto& [k, q] : c.terms())
        acc = add(acc, mul(reduce(q), pow(z, k)));
    return acc;
}

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int degree(const Poly& a)
{
    Poly b = a;
    trim(b);
    return static_cast<int>(b.size()) - 1;
}

Poly poly_gcd(const Field& F, Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = F.inv(b.back());
        while (a.size() >= b.size()) {
            std::uint64_t k = F.mul(a.back(), lead_inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = F.sub(a[shift + i], F.mul(k, b[i]));
            trim(a);
            if (a.empty())
                break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        std::uint64_t li = F.inv(a.back());
        for (auto& x : a)
            x = F.mul(x, li);
    }
    return a;
}

std::uint64_t poly_eval(const Field& F, const Poly& a, std::uint64_t x)
{
    std::uint64_t acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        acc = F.add(F.mul(acc, x), *it);
    return acc;
}

Poly interpolate(const Field& F, const std::vector<std::uint64_t>& xs, const std::vector<std::uint64_t>& ys)
{
    std::size_t n = xs.size();
    // Newton divided differences
    std::vector<std::uint64_t> c(ys);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            c[i] = F.mul(F.sub(c[i], c[i - 1]), F.inv(F.sub(xs[i], xs[i - j])));
            if (i == j)
                break;
        }
    Poly out(n, 0);
    Poly basis{1};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            out[i] = F.add(out[i], F.mul(c[k], basis[i]));
        // basis *= (t - xs[k])
        Poly nb(basis.size() + 1, 0);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            nb[i + 1] = F.add(nb[i + 1], basis[i]);
            nb[i] = F.sub(nb[i], F.mul(xs[k], basis[i]));
        }
        basis = std::move(nb);
    }
    trim(out);
    return out;
}

ModForm reduce_form(const Field& F, const Form& f)
{
    ModForm m;
    m.nvars = f.nvars();
    m.degree = f.degree();
    for (const auto& t : f.terms()) {
        std::uint64_t v = F.reduce(t.coeff);
        if (v)
            m.terms.emplace_back(t.mono, v);
    }
    return m;
}

std::uint64_t eval(const Field& F, const ModForm& f, const std::vector<std::uint64_t>& x)
{
    int n = f.nvars;
    int maxe = 0;
    for (const auto& t : f.terms)
        for (int i = 0; i < n; ++i)
            maxe = std::max(maxe, mono_exp(t.first, i));
    std::vector<std::vector<std::uint64_t>> pw(n, std::vector<std::uint64_t>(maxe + 1, 1));
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= maxe; ++k)
            pw[i][k] = F.mul(pw[i][k - 1], x[i] % F.p());
    std::uint64_t acc = 0;
    for (const auto& [m, c] : f.terms) {
        std::uint64_t v = c;
        for (int i = 0; i < n; ++i)
            v = F.mul(v, pw[i][mono_exp(m, i)]);
        acc = F.add(acc, v);
    }
    return acc;
}

Poly restrict_line(const Field& F, const ModForm& f, const std::vector<std::uint64_t>& a,
                   const std::vector<std::uint64_t>& b)
{
    int d = f.degree;
    std::vector<std::uint64_t> xs, ys;
    std::vector<std::uint64_t> pt(f.nvars);
    for (int k = 0; k <= d; ++k) {
        std::uint64_t t = static_cast<std::uint64_t>(k);
        for (int i = 0; i < f.nvars; ++i)
            pt[i] = F.add(a[i] % F.p(), F.mul(t, b[i] % F.p()));
        xs.push_back(t);
        ys.push_back(eval(F, f, pt));
    }
    return interpolate(F, xs, ys);
}

std::vector<std::uint64_t> normalize(const Field& F, std::vector<std::uint64_t> x)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] % F.p() == 0)
            continue;
        std::uint64_t inv = F.inv(x[i]);
        for (auto& v : x)
            v = F.mul(v, inv);
        break;
    }
    return x;
}

std::vector<std::vector<std::uint64_t>> sample_zeros(const Field& F, const std::vector<ModForm>& gens, int count,
                                                     Rng& rng, int budget)
{
    std::vector<std::vector<std::uint64_t>> out;
    if (gens.empty())
        return out;
    int n = gens.front().nvars;
    auto rnd = [&] { return static_cast<std::uint64_t>(rng.range(0, static_cast<long>(F.p()) - 1)); };
    // random chart x = M y; search y = (t, y1, .., 1)
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (auto& row : m)
        for (auto& v : row)
            v = rnd();
    for (int attempt = 0; attempt < budget && static_cast<int>(out.size()) < count; ++attempt) {
        std::vector<std::uint64_t> y(n);
        y[0] = 0;
        for (int i = 1; i < n - 1; ++i)
            y[i] = rnd();
        y[n - 1] = 1;
        std::vector<std::uint64_t> base(n, 0), dir(n, 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 1; j < n; ++j)
                base[i] = F.add(base[i], F.mul(m[i][j], y[j]));
            dir[i] = m[i][0];
        }
        Poly g;
        bool first = true;
        bool dead = false;
        for (const auto& f : gens) {
            Poly r = restrict_line(F, f, base, dir);
            trim(r);
            if (r.empty())
                continue;
            g = first ? r : poly_gcd(F, g, r);
            first = false;
            if (degree(g) <= 0) {
                dead = true;
                break;
            }
        }
        if (dead || first)
            continue;
        for (std::uint64_t t = 0; t < F.p() && static_cast<int>(out.size()) < count; ++t) {
            if (poly_eval(F, g, t) != 0)
                continue;
            std::vector<std::uint64_t> x(n);
            for (int i = 0; i < n; ++i)
                x[i] = F.add(base[i], F.mul(t, dir[i]));
            bool ok = true;
            for (const auto& f : gens)
                ok = ok && eval(F, f, x) == 0;
            if (ok) {
                x = normalize(F, x);
                if (std::find(out.begin(), out.end(), x) == out.end())
                    out.push_back(x);
            }
        }
    }
    return out;
}

}  // namespace solidus::modp
