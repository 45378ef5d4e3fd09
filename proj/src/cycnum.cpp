#include "solidus/exactmath.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace solidus {

int default_conductor()
{
    static const int c = [] {
        const char* env = std::getenv("SOLIDUS_CONDUCTOR");
        if (!env || !*env)
            return 24;
        int v = std::atoi(env);
        if (v <= 0)
            throw std::invalid_argument("SOLIDUS_CONDUCTOR must be a positive integer");
        return v;
    }();
    return c;
}

int euler_phi(int n)
{
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            r -= r / p;
        }
    }
    if (n > 1)
        r -= r / n;
    return r;
}

namespace {

struct CycTable {
    int c = 1;
    int phi = 1;
    std::vector<std::vector<mpq_class>> red;  // red[k] = zeta^k on the power basis, 0 <= k < c
};

// integer polynomial helpers for building cyclotomic polynomials
using IPoly = std::vector<long>;

IPoly ipoly_div(IPoly a, const IPoly& b)
{
    // b monic
    int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    IPoly q(std::max(da - db + 1, 1), 0);
    for (int k = da - db; k >= 0; --k) {
        long coef = a[k + db];
        q[k] = coef;
        for (int j = 0; j <= db; ++j)
            a[k + j] -= coef * b[j];
    }
    return q;
}

IPoly cyclotomic(int n)
{
    IPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            p = ipoly_div(p, cyclotomic(d));
    return p;
}

std::unique_ptr<CycTable> build_table(int c)
{
    auto t = std::make_unique<CycTable>();
    t->c = c;
    t->phi = euler_phi(c);
    IPoly phi_c = cyclotomic(c);
    int f = t->phi;
    t->red.assign(c, std::vector<mpq_class>(f));
    for (int k = 0; k < c; ++k) {
        if (k < f) {
            t->red[k][k] = 1;
            continue;
        }
        // zeta^k = zeta * zeta^(k-1); shift then reduce zeta^f = -sum phi_j zeta^j
        const auto& prev = t->red[k - 1];
        std::vector<mpq_class> cur(f);
        for (int j = f - 1; j >= 1; --j)
            cur[j] = prev[j - 1];
        mpq_class top = prev[f - 1];
        if (sgn(top) != 0)
            for (int j = 0; j < f; ++j)
                cur[j] -= top * phi_c[j];
        t->red[k] = std::move(cur);
    }
    return t;
}

const CycTable& table(int c)
{
    thread_local const CycTable* last = nullptr;
    if (last && last->c == c)
        return *last;
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(c);
    if (it == cache.end())
        it = cache.emplace(c, build_table(c)).first;
    last = it->second.get();
    return *last;
}

int resolve(int conductor)
{
    if (conductor < 0)
        throw std::invalid_argument("conductor must be positive");
    return conductor == 0 ? default_conductor() : conductor;
}

}  // namespace

CycNum::CycNum() : cond_(default_conductor()) {}

CycNum::CycNum(long n, int conductor) : cond_(resolve(conductor)), q0_(n) {}

CycNum::CycNum(const mpq_class& q, int conductor) : cond_(resolve(conductor)), q0_(q)
{
    q0_.canonicalize();
}

CycNum CycNum::rational(long p, long q, int conductor)
{
    if (q == 0)
        throw math_error("rational: zero denominator");
    mpq_class v(p, q);
    v.canonicalize();
    return CycNum(v, conductor);
}

CycNum CycNum::zeta(int c, int k, int conductor)
{
    if (c <= 0)
        throw std::invalid_argument("zeta: order must be positive");
    int target = resolve(conductor);
    if (conductor == 0 && target % c != 0)
        target = std::lcm(target, c);
    if (target % c != 0)
        throw math_error("zeta(" + std::to_string(c) + ",.) not contained in conductor " + std::to_string(target));
    int power = static_cast<int>(((static_cast<long>(k) % c + c) % c) * (target / c));
    const auto& t = table(target);
    std::vector<mpq_class> dense = t.red[power % target];
    return from_dense(dense, target);
}

CycNum CycNum::from_dense(std::vector<mpq_class>& dense, int c)
{
    CycNum r(0L, c);
    r.q0_ = std::move(dense[0]);
    for (std::size_t k = 1; k < dense.size(); ++k)
        if (sgn(dense[k]) != 0)
            r.rest_.emplace_back(static_cast<int>(k), std::move(dense[k]));
    return r;
}

std::vector<CycNum::Term> CycNum::terms() const
{
    std::vector<Term> out;
    if (sgn(q0_) != 0)
        out.emplace_back(0, q0_);
    out.insert(out.end(), rest_.begin(), rest_.end());
    return out;
}

std::vector<mpq_class> CycNum::coeffs() const
{
    std::vector<mpq_class> d(table(cond_).phi);
    d[0] = q0_;
    for (const auto& [k, q] : rest_)
        d[k] = q;
    return d;
}

bool CycNum::is_one() const { return rest_.empty() && q0_ == 1; }
bool CycNum::is_rational() const { return rest_.empty(); }

mpq_class CycNum::rational_value() const
{
    if (!rest_.empty())
        throw math_error("not a rational number: " + str());
    return q0_;
}

CycNum CycNum::promote(int conductor) const
{
    if (conductor == cond_)
        return *this;
    if (conductor % cond_ != 0)
        throw math_error("cannot promote conductor " + std::to_string(cond_) + " to " + std::to_string(conductor));
    CycNum r(q0_, conductor);
    if (rest_.empty())
        return r;
    int step = conductor / cond_;
    const auto& t = table(conductor);
    std::vector<mpq_class> dense(t.phi);
    dense[0] = q0_;
    for (const auto& [k, q] : rest_) {
        const auto& z = t.red[(k * step) % conductor];
        for (int j = 0; j < t.phi; ++j)
            if (sgn(z[j]) != 0)
                dense[j] += q * z[j];
    }
    return from_dense(dense, conductor);
}

void CycNum::unify(CycNum& o)
{
    if (cond_ == o.cond_)
        return;
    if (o.rest_.empty()) {
        o.cond_ = cond_;
        return;
    }
    if (rest_.empty()) {
        cond_ = o.cond_;
        return;
    }
    int l = std::lcm(cond_, o.cond_);
    *this = promote(l);
    o = o.promote(l);
}

CycNum CycNum::operator-() const
{
    CycNum r(*this);
    r.q0_ = -r.q0_;
    for (auto& t : r.rest_)
        t.second = -t.second;
    return r;
}

namespace {

template <class Op>
void merge_rest(std::vector<CycNum::Term>& a, const std::vector<CycNum::Term>& b, Op op)
{
    std::vector<CycNum::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, op(mpq_class(0), b[j].second));
            ++j;
        } else {
            mpq_class v = op(a[i].second, b[j].second);
            if (sgn(v) != 0)
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

}  // namespace

CycNum& CycNum::operator+=(const CycNum& o)
{
    if (cond_ != o.cond_) {
        CycNum oo(o);
        unify(oo);
        return *this += oo;
    }
    q0_ += o.q0_;
    if (!o.rest_.empty())
        merge_rest(rest_, o.rest_, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x + y); });
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o)
{
    if (cond_ != o.cond_) {
        CycNum oo(o);
        unify(oo);
        return *this -= oo;
    }
    q0_ -= o.q0_;
    if (!o.rest_.empty())
        merge_rest(rest_, o.rest_, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x - y); });
    return *this;
}

void CycNum::mul_rational(const mpq_class& q)
{
    if (sgn(q) == 0) {
        q0_ = 0;
        rest_.clear();
        return;
    }
    q0_ *= q;
    for (auto& t : rest_)
        t.second *= q;
}

CycNum cyc_dense_mul(const CycNum& a, const CycNum& b)
{
    const auto& t = table(a.cond_);
    int f = t.phi;
    std::vector<mpq_class> acc(2 * f - 1);
    auto at = a.terms(), bt = b.terms();
    for (const auto& [i, x] : at)
        for (const auto& [j, y] : bt)
            acc[i + j] += x * y;
    std::vector<mpq_class> dense(f);
    for (int k = 0; k < 2 * f - 1; ++k) {
        if (sgn(acc[k]) == 0)
            continue;
        if (k < f) {
            dense[k] += acc[k];
            continue;
        }
        const auto& z = t.red[k % t.c];
        for (int j = 0; j < f; ++j)
            if (sgn(z[j]) != 0)
                dense[j] += acc[k] * z[j];
    }
    return CycNum::from_dense(dense, a.cond_);
}

CycNum& CycNum::operator*=(const CycNum& o)
{
    if (cond_ != o.cond_) {
        CycNum oo(o);
        unify(oo);
        return *this *= oo;
    }
    if (o.rest_.empty()) {
        mul_rational(o.q0_);
        return *this;
    }
    if (rest_.empty()) {
        mpq_class q = q0_;
        *this = o;
        mul_rational(q);
        return *this;
    }
    *this = cyc_dense_mul(*this, o);
    return *this;
}

CycNum CycNum::inverse() const
{
    if (is_zero())
        throw math_error("division by zero");
    if (rest_.empty())
        return CycNum(mpq_class(1) / q0_, cond_);
    // solve (multiplication by this) * x = 1 on the power basis
    const auto& t = table(cond_);
    int f = t.phi;
    std::vector<std::vector<mpq_class>> m(f, std::vector<mpq_class>(f + 1));
    for (int col = 0; col < f; ++col) {
        std::vector<mpq_class> basis(f);
        basis[col] = 1;
        CycNum e = from_dense(basis, cond_);
        auto prod = (*this * e).coeffs();
        for (int row = 0; row < f; ++row)
            m[row][col] = prod[row];
    }
    m[0][f] = 1;
    for (int col = 0; col < f; ++col) {
        int piv = col;
        while (piv < f && sgn(m[piv][col]) == 0)
            ++piv;
        if (piv == f)
            throw math_error("singular multiplication matrix");
        std::swap(m[piv], m[col]);
        mpq_class inv = 1 / m[col][col];
        for (int j = col; j <= f; ++j)
            m[col][j] *= inv;
        for (int r = 0; r < f; ++r) {
            if (r == col || sgn(m[r][col]) == 0)
                continue;
            mpq_class k = m[r][col];
            for (int j = col; j <= f; ++j)
                m[r][j] -= k * m[col][j];
        }
    }
    std::vector<mpq_class> x(f);
    for (int r = 0; r < f; ++r)
        x[r] = m[r][f];
    return from_dense(x, cond_);
}

CycNum& CycNum::operator/=(const CycNum& o)
{
    if (o.is_zero())
        throw math_error("division by zero");
    if (o.rest_.empty()) {
        mul_rational(mpq_class(1) / o.q0_);
        if (cond_ != o.cond_ && rest_.empty())
            cond_ = std::max(cond_, o.cond_);
        return *this;
    }
    return *this *= o.inverse();
}

CycNum CycNum::conj() const
{
    if (rest_.empty())
        return *this;
    const auto& t = table(cond_);
    std::vector<mpq_class> dense(t.phi);
    dense[0] = q0_;
    for (const auto& [k, q] : rest_) {
        const auto& z = t.red[(t.c - k) % t.c];
        for (int j = 0; j < t.phi; ++j)
            if (sgn(z[j]) != 0)
                dense[j] += q * z[j];
    }
    return from_dense(dense, cond_);
}

CycNum CycNum::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    CycNum result(1L, cond_), base(*this);
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

bool CycNum::operator==(const CycNum& o) const
{
    if (q0_ != o.q0_ || rest_.size() != o.rest_.size())
        return false;
    if (cond_ != o.cond_ && !rest_.empty())
        return false;
    for (std::size_t k = 0; k < rest_.size(); ++k)
        if (rest_[k].first != o.rest_[k].first || rest_[k].second != o.rest_[k].second)
            return false;
    return true;
}

bool CycNum::operator<(const CycNum& o) const
{
    if (q0_ != o.q0_)
        return q0_ < o.q0_;
    std::size_t n = std::min(rest_.size(), o.rest_.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (rest_[k].first != o.rest_[k].first)
            return rest_[k].first < o.rest_[k].first;
        if (rest_[k].second != o.rest_[k].second)
            return rest_[k].second < o.rest_[k].second;
    }
    return rest_.size() < o.rest_.size();
}

namespace {

std::size_t hash_mpq(const mpq_class& q)
{
    std::size_t h = std::hash<long>()(mpz_fdiv_ui(q.get_num_mpz_t(), 1000000007UL));
    h ^= std::hash<long>()(mpz_fdiv_ui(q.get_den_mpz_t(), 998244353UL)) * 0x9e3779b97f4a7c15ULL;
    if (sgn(q) < 0)
        h = ~h;
    return h;
}

}  // namespace

std::size_t CycNum::hash() const
{
    std::size_t h = hash_mpq(q0_);
    for (const auto& [k, q] : rest_)
        h = h * 1000003 ^ (hash_mpq(q) + static_cast<std::size_t>(k) * 0x9e37);
    return h;
}

std::string CycNum::str() const
{
    std::ostringstream os;
    auto ts = terms();
    if (ts.empty()) {
        os << "(0/1)*z^0";
    } else {
        bool first = true;
        for (const auto& [k, q] : ts) {
            if (!first)
                os << " + ";
            first = false;
            os << '(' << q.get_num().get_str() << '/' << q.get_den().get_str() << ")*z^" << k;
        }
    }
    os << '@' << cond_;
    return os.str();
}

CycNum CycNum::parse(const std::string& text)
{
    auto at = text.rfind('@');
    if (at == std::string::npos)
        throw std::invalid_argument("cyclotomic literal lacks '@conductor': " + text);
    int c = std::stoi(text.substr(at + 1));
    if (c <= 0)
        throw std::invalid_argument("bad conductor in: " + text);
    const auto& t = table(c);
    std::vector<mpq_class> dense(t.phi);
    std::string body = text.substr(0, at);
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto lp = body.find('(', pos);
        if (lp == std::string::npos)
            break;
        auto rp = body.find(')', lp);
        auto zp = body.find("z^", rp);
        if (rp == std::string::npos || zp == std::string::npos)
            throw std::invalid_argument("malformed cyclotomic literal: " + text);
        mpq_class q(body.substr(lp + 1, rp - lp - 1));
        q.canonicalize();
        std::size_t end = zp + 2;
        while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end])))
            ++end;
        int k = std::stoi(body.substr(zp + 2, end - zp - 2));
        const auto& z = t.red[k % c];
        for (int j = 0; j < t.phi; ++j)
            if (sgn(z[j]) != 0)
                dense[j] += q * z[j];
        pos = end;
    }
    return from_dense(dense, c);
}

CycNum cyc_constant(const std::string& name, int conductor)
{
    int c = resolve(conductor);
    auto need = [&](int order) {
        if (c % order != 0)
            throw math_error("constant " + name + " needs conductor divisible by " + std::to_string(order));
    };
    if (name == "i") {
        need(4);
        return CycNum::zeta(4, 1, c);
    }
    if (name == "zeta3") {
        need(3);
        return CycNum::zeta(3, 1, c);
    }
    if (name == "zeta6") {
        need(6);
        return CycNum::zeta(6, 1, c);
    }
    if (name == "zeta8") {
        need(8);
        return CycNum::zeta(8, 1, c);
    }
    if (name == "zeta12") {
        need(12);
        return CycNum::zeta(12, 1, c);
    }
    if (name == "zeta24") {
        need(24);
        return CycNum::zeta(24, 1, c);
    }
    if (name == "sqrt2") {
        need(8);
        return CycNum::zeta(8, 1, c) + CycNum::zeta(8, 7, c);
    }
    if (name == "sqrt2_i") {
        need(8);
        return CycNum::zeta(8, 1, c) + CycNum::zeta(8, 3, c);
    }
    if (name == "sqrt3_i") {
        need(3);
        return CycNum(2L, c) * CycNum::zeta(3, 1, c) + CycNum(1L, c);
    }
    if (name == "sqrt3") {
        need(12);
        return CycNum::zeta(12, 1, c) + CycNum::zeta(12, 11, c);
    }
    // rational(p,q) and zeta(c,k)
    auto args = [&](const std::string& prefix) -> std::pair<long, long> {
        std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
        auto comma = inner.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("bad constant: " + name);
        return {std::stol(inner.substr(0, comma)), std::stol(inner.substr(comma + 1))};
    };
    if (name.rfind("rational(", 0) == 0 && name.back() == ')') {
        auto [p, q] = args("rational");
        return CycNum::rational(p, q, c);
    }
    if (name.rfind("zeta(", 0) == 0 && name.back() == ')') {
        auto [order, k] = args("zeta");
        if (conductor == 0 && c % order != 0)
            throw math_error("zeta(" + std::to_string(order) + ",.) needs a larger conductor");
        return CycNum::zeta(static_cast<int>(order), static_cast<int>(k), c);
    }
    throw std::invalid_argument("unknown constant: " + name);
}

CycNum cyc_arith(const CycNum& a, const CycNum& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    case ArithOp::div:
        return a / b;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

CycNum parse_scalar(const std::string& text)
{
    if (text.find('@') != std::string::npos)
        return CycNum::parse(text);
    Form f = Form::parse(text, 4);
    if (f.is_zero())
        return CycNum();
    if (f.degree() != 0)
        throw std::invalid_argument("not a constant: " + text);
    return f.terms().front().coeff;
}

}  // namespace solidus
