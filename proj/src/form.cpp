#include "solidus/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

namespace solidus {

Mono mono_make(const std::vector<int>& e)
{
    if (e.size() > static_cast<std::size_t>(kMaxVars))
        throw std::invalid_argument("too many variables");
    Mono m = 0;
    int total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 255)
            throw std::invalid_argument("exponent out of range");
        total += e[i];
        m |= static_cast<Mono>(e[i]) << (8 * (kMaxVars - 1 - i));
    }
    if (total > 255)
        throw std::invalid_argument("degree out of range");
    return m | (static_cast<Mono>(total) << 56);
}

Mono mono_mul(Mono a, Mono b)
{
    if (mono_total(a) + mono_total(b) > 255)
        throw std::invalid_argument("degree out of range");
    return a + b;
}

std::vector<int> mono_exps(Mono m, int nvars)
{
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i)
        e[i] = mono_exp(m, i);
    return e;
}

bool mono_divides(Mono a, Mono b)
{
    for (int i = 0; i < kMaxVars; ++i)
        if (mono_exp(a, i) > mono_exp(b, i))
            return false;
    return true;
}

Mono mono_div(Mono a, Mono b) { return a - b; }

// ---------------------------------------------------------------------------

Form::Form(int nvars, int degree, bool weighted) : nvars_(nvars), degree_(degree), weighted_(weighted)
{
    if (nvars < 1 || nvars > kMaxVars)
        throw std::invalid_argument("unsupported variable count");
    if (weighted && nvars != 5)
        throw std::invalid_argument("weighted forms use x0..x3 and w");
}

int Form::mono_degree(Mono m) const
{
    int d = mono_total(m);
    if (weighted_)
        d += mono_exp(m, 4);
    return d;
}

Form Form::constant(int nvars, const CycNum& c)
{
    Form f(nvars, 0);
    if (!c.is_zero())
        f.terms_.push_back({0, c});
    return f;
}

Form Form::variable(int nvars, int i, bool weighted)
{
    std::vector<int> e(nvars, 0);
    e.at(i) = 1;
    return monomial(e, CycNum(1L), weighted);
}

Form Form::monomial(const std::vector<int>& e, const CycNum& c, bool weighted)
{
    Form f(static_cast<int>(e.size()), 0, weighted);
    Mono m = mono_make(e);
    f.degree_ = f.mono_degree(m);
    if (!c.is_zero())
        f.terms_.push_back({m, c});
    return f;
}

Form Form::from_terms(int nvars, std::vector<Term> terms, bool weighted)
{
    Form probe(nvars, 0, weighted);
    int deg = -1;
    for (const auto& t : terms) {
        int d = probe.mono_degree(t.mono);
        if (deg < 0)
            deg = d;
        else if (d != deg)
            throw std::invalid_argument("inhomogeneous terms");
    }
    FormBuilder b(nvars, std::max(deg, 0), weighted);
    for (auto& t : terms)
        b.add(t.mono, t.coeff);
    return b.build();
}

int Form::conductor() const
{
    int c = default_conductor();
    for (const auto& t : terms_)
        if (!t.coeff.is_rational())
            return t.coeff.conductor();
    return c;
}

CycNum Form::coeff(Mono m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, Mono key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m)
        return it->coeff;
    return CycNum();
}

const CycNum& Form::leading_coeff() const
{
    if (terms_.empty())
        throw math_error("zero form has no leading coefficient");
    return terms_.front().coeff;
}

Form Form::monic() const
{
    if (terms_.empty() || terms_.front().coeff.is_one())
        return *this;
    return scaled(terms_.front().coeff.inverse());
}

Form Form::scaled(const CycNum& c) const
{
    Form r(nvars_, degree_, weighted_);
    if (c.is_zero())
        return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Form Form::operator-() const { return scaled(CycNum(-1L)); }

namespace {

void check_compatible(const Form& a, const Form& b)
{
    if (a.nvars() != b.nvars() || a.weighted() != b.weighted())
        throw std::invalid_argument("forms live in different rings");
}

}  // namespace

Form& Form::operator+=(const Form& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        check_compatible(*this, o);
        *this = o;
        return *this;
    }
    check_compatible(*this, o);
    if (o.degree_ != degree_)
        throw std::invalid_argument("adding forms of different degrees");
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono > o.terms_[j].mono)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].mono > terms_[i].mono) {
            out.push_back(o.terms_[j++]);
        } else {
            CycNum s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero())
                out.push_back({terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form operator*(const Form& a, const Form& b)
{
    check_compatible(a, b);
    FormBuilder out(a.nvars_, a.degree_ + b.degree_, a.weighted_);
    if (a.is_zero() || b.is_zero())
        return out.build();
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            out.add(mono_mul(x.mono, y.mono), x.coeff * y.coeff);
    return out.build();
}

Form Form::pow(int e) const
{
    if (e < 0)
        throw std::invalid_argument("negative power of a form");
    Form r = constant(nvars_, CycNum(1L));
    r.weighted_ = weighted_;
    Form base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

bool Form::operator==(const Form& o) const
{
    if (is_zero() && o.is_zero())
        return nvars_ == o.nvars_;
    if (nvars_ != o.nvars_ || degree_ != o.degree_ || terms_.size() != o.terms_.size())
        return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].mono != o.terms_[k].mono || terms_[k].coeff != o.terms_[k].coeff)
            return false;
    return true;
}

bool Form::operator<(const Form& o) const
{
    if (degree_ != o.degree_)
        return degree_ < o.degree_;
    std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (terms_[k].mono != o.terms_[k].mono)
            return terms_[k].mono > o.terms_[k].mono;
        if (terms_[k].coeff != o.terms_[k].coeff)
            return terms_[k].coeff < o.terms_[k].coeff;
    }
    return terms_.size() < o.terms_.size();
}

CycNum Form::eval(const std::vector<CycNum>& x) const
{
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    int maxe = 0;
    for (const auto& t : terms_)
        for (int i = 0; i < nvars_; ++i)
            maxe = std::max(maxe, mono_exp(t.mono, i));
    std::vector<std::vector<CycNum>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        pw[i].reserve(maxe + 1);
        pw[i].push_back(CycNum(1L, x[i].conductor()));
        for (int k = 1; k <= maxe; ++k)
            pw[i].push_back(pw[i].back() * x[i]);
    }
    CycNum acc;
    for (const auto& t : terms_) {
        CycNum v = t.coeff;
        for (int i = 0; i < nvars_ && !v.is_zero(); ++i) {
            int e = mono_exp(t.mono, i);
            if (e)
                v *= pw[i][e];
        }
        if (!v.is_zero())
            acc += v;
    }
    return acc;
}

Form Form::derivative(int i) const
{
    if (i < 0 || i >= nvars_)
        throw std::invalid_argument("derivative index out of range");
    int w = weight(i);
    FormBuilder b(nvars_, std::max(degree_ - w, 0), weighted_);
    Mono unit = mono_make([&] {
        std::vector<int> e(nvars_, 0);
        e[i] = 1;
        return e;
    }());
    for (const auto& t : terms_) {
        int e = mono_exp(t.mono, i);
        if (e == 0)
            continue;
        CycNum c = t.coeff;
        c.mul_rational(mpq_class(e));
        b.add(t.mono - unit, c);
    }
    Form r = b.build();
    if (degree_ < w)
        r.degree_ = 0;
    return r;
}

Form Form::mul_mono(Mono m) const
{
    Form r(nvars_, degree_ + mono_degree(m), weighted_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({mono_mul(t.mono, m), t.coeff});
    return r;
}

Form Form::div_mono(Mono m) const
{
    Form r(nvars_, degree_ - mono_degree(m), weighted_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!mono_divides(m, t.mono))
            throw math_error("monomial does not divide form");
        r.terms_.push_back({mono_div(t.mono, m), t.coeff});
    }
    return r;
}

Mono Form::mono_content() const
{
    if (terms_.empty())
        return 0;
    std::vector<int> e = mono_exps(terms_.front().mono, nvars_);
    for (const auto& t : terms_)
        for (int i = 0; i < nvars_; ++i)
            e[i] = std::min(e[i], mono_exp(t.mono, i));
    return mono_make(e);
}

namespace {

std::string var_name(int i, int nvars, bool weighted)
{
    if (weighted && i == 4)
        return "w";
    (void)nvars;
    return "x" + std::to_string(i);
}

}  // namespace

std::string Form::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << '[' << t.coeff.str() << ']';
        for (int i = 0; i < nvars_; ++i) {
            int e = mono_exp(t.mono, i);
            if (e == 0)
                continue;
            os << '*' << var_name(i, nvars_, weighted_);
            if (e > 1)
                os << '^' << e;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

FormBuilder::FormBuilder(int nvars, int degree, bool weighted) : nvars_(nvars), degree_(degree), weighted_(weighted) {}

void FormBuilder::add(Mono m, const CycNum& c)
{
    if (!c.is_zero())
        buf_.emplace_back(m, c);
}

std::size_t FormBuilder::size() const { return buf_.size(); }

Form FormBuilder::build()
{
    Form f(nvars_, degree_, weighted_);
    std::sort(buf_.begin(), buf_.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 0; i < buf_.size();) {
        std::size_t j = i + 1;
        CycNum acc = std::move(buf_[i].second);
        while (j < buf_.size() && buf_[j].first == buf_[i].first)
            acc += buf_[j++].second;
        if (!acc.is_zero()) {
            if (f.mono_degree(buf_[i].first) != degree_)
                throw std::invalid_argument("term degree differs from form degree");
            f.terms_.push_back({buf_[i].first, std::move(acc)});
        }
        i = j;
    }
    buf_.clear();
    return f;
}

// ---------------------------------------------------------------------------
// expression parser: + - * / ^ ( ), integers, x0..x6, w, named constants, [literal]

namespace {

struct Poly {
    std::map<Mono, CycNum, std::greater<Mono>> t;
};

class Parser {
public:
    Parser(const std::string& s, int nvars, bool weighted) : s_(s), nvars_(nvars), weighted_(weighted) {}

    Poly parse()
    {
        Poly p = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character");
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    int nvars_;
    bool weighted_;

    [[noreturn]] void fail(const std::string& why) const
    {
        throw std::invalid_argument("form parse error at " + std::to_string(pos_) + ": " + why + " in '" + s_ + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static Poly scalar(const CycNum& c)
    {
        Poly p;
        if (!c.is_zero())
            p.t.emplace(0, c);
        return p;
    }

    static void add_into(Poly& a, const Poly& b, bool negate)
    {
        for (const auto& [m, c] : b.t) {
            auto it = a.t.find(m);
            CycNum v = negate ? -c : c;
            if (it == a.t.end()) {
                a.t.emplace(m, v);
            } else {
                it->second += v;
                if (it->second.is_zero())
                    a.t.erase(it);
            }
        }
    }

    static Poly mul(const Poly& a, const Poly& b)
    {
        Poly r;
        for (const auto& [ma, ca] : a.t)
            for (const auto& [mb, cb] : b.t) {
                Poly term;
                term.t.emplace(mono_mul(ma, mb), ca * cb);
                add_into(r, term, false);
            }
        return r;
    }

    Poly expr()
    {
        Poly acc;
        bool neg = false;
        skip();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        add_into(acc, term(), neg);
        for (;;) {
            if (eat('+'))
                add_into(acc, term(), false);
            else if (eat('-'))
                add_into(acc, term(), true);
            else
                break;
        }
        return acc;
    }

    Poly term()
    {
        Poly acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = mul(acc, factor());
            } else if (eat('/')) {
                Poly d = factor();
                if (d.t.size() != 1 || d.t.begin()->first != 0)
                    fail("division by a non-constant");
                CycNum inv = d.t.begin()->second.inverse();
                for (auto& kv : acc.t)
                    kv.second *= inv;
            } else {
                skip();
                // implicit multiplication: "2x0", "x0 x1", "(..)(..)"
                if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' ||
                                         s_[pos_] == '['))
                    acc = mul(acc, factor());
                else
                    break;
            }
        }
        return acc;
    }

    Poly factor()
    {
        Poly b = base();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            int e = std::stoi(s_.substr(start, pos_ - start));
            Poly r = scalar(CycNum(1L));
            for (int k = 0; k < e; ++k)
                r = mul(r, b);
            return r;
        }
        return b;
    }

    Poly var(int i)
    {
        if (i >= nvars_)
            fail("variable index exceeds ring size");
        std::vector<int> e(nvars_, 0);
        e[i] = 1;
        Poly p;
        p.t.emplace(mono_make(e), CycNum(1L));
        return p;
    }

    Poly base()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (c == '[') {
            auto close = s_.find(']', pos_);
            if (close == std::string::npos)
                fail("unterminated literal");
            CycNum v = CycNum::parse(s_.substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
            return scalar(v);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return scalar(CycNum(mpq_class(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string word = s_.substr(start, pos_ - start);
            if (word.size() >= 2 && word[0] == 'x' && std::all_of(word.begin() + 1, word.end(), ::isdigit))
                return var(std::stoi(word.substr(1)));
            if (word == "w") {
                if (!weighted_)
                    fail("w requires the weighted ring");
                return var(4);
            }
            if (word == "z")
                return scalar(CycNum::zeta(default_conductor(), 1));
            if (word == "rational" || word == "zeta") {
                auto close = s_.find(')', pos_);
                if (close == std::string::npos)
                    fail("unterminated call");
                std::string call = word + s_.substr(pos_, close - pos_ + 1);
                pos_ = close + 1;
                return scalar(cyc_constant(call));
            }
            try {
                return scalar(cyc_constant(word));
            } catch (const std::invalid_argument&) {
                fail("unknown identifier '" + word + "'");
            }
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

Form Form::parse(const std::string& text, int nvars, bool weighted)
{
    Parser p(text, nvars, weighted);
    Poly poly = p.parse();
    Form probe(nvars, 0, weighted);
    int deg = -1;
    for (const auto& [m, c] : poly.t) {
        int d = probe.mono_degree(m);
        if (deg >= 0 && d != deg)
            throw std::invalid_argument("form is not homogeneous: " + text);
        deg = d;
    }
    FormBuilder b(nvars, std::max(deg, 0), weighted);
    for (const auto& [m, c] : poly.t)
        b.add(m, c);
    return b.build();
}

// ---------------------------------------------------------------------------

ProjPoint::ProjPoint(std::vector<CycNum> coords) : coords_(std::move(coords))
{
    int p = pivot();
    if (p < 0)
        throw math_error("projective point with all coordinates zero");
    if (!coords_[p].is_one()) {
        CycNum inv = coords_[p].inverse();
        for (std::size_t i = p; i < coords_.size(); ++i)
            coords_[i] *= inv;
    }
}

ProjPoint ProjPoint::parse(const std::string& text)
{
    std::vector<CycNum> c;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(' || ch == '[')
            ++depth;
        if (ch == ')' || ch == ']')
            --depth;
        if ((ch == ',' || ch == ':') && depth == 0) {
            c.push_back(parse_scalar(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    c.push_back(parse_scalar(cur));
    return ProjPoint(std::move(c));
}

int ProjPoint::pivot() const
{
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (!coords_[i].is_zero())
            return static_cast<int>(i);
    return -1;
}

bool ProjPoint::operator<(const ProjPoint& o) const
{
    return std::lexicographical_compare(coords_.begin(), coords_.end(), o.coords_.begin(), o.coords_.end());
}

std::size_t ProjPoint::hash() const
{
    std::size_t h = coords_.size();
    for (const auto& c : coords_)
        h = h * 0x100000001b3ULL ^ c.hash();
    return h;
}

std::string ProjPoint::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            s += " : ";
        s += coords_[i].str();
    }
    return s + "]";
}

ProjLine::ProjLine(const ProjPoint& a, const ProjPoint& b) : a_(a), b_(b)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument("line through points of different dimension");
    if (a == b)
        throw math_error("line needs two distinct points");
    Matrix m{a.coords(), b.coords()};
    Matrix ker = matrix_nullspace(m);
    int n = static_cast<int>(a.dim());
    for (const auto& v : ker) {
        FormBuilder fb(n, 1);
        for (int i = 0; i < n; ++i) {
            std::vector<int> e(n, 0);
            e[i] = 1;
            fb.add(mono_make(e), v[i]);
        }
        eqs_.push_back(fb.build().monic());
    }
}

ProjLine ProjLine::from_equations(const std::vector<Form>& eqs)
{
    if (eqs.empty())
        throw std::invalid_argument("no equations");
    int n = eqs.front().nvars();
    Matrix m;
    for (const auto& f : eqs) {
        if (f.degree() != 1)
            throw std::invalid_argument("line equations must be linear");
        std::vector<CycNum> row(n);
        for (const auto& t : f.terms())
            for (int i = 0; i < n; ++i)
                if (mono_exp(t.mono, i))
                    row[i] = t.coeff;
        m.push_back(row);
    }
    Matrix ker = matrix_nullspace(m);
    if (ker.size() != 2)
        throw math_error("equations do not cut out a line");
    return ProjLine(ProjPoint(ker[0]), ProjPoint(ker[1]));
}

ProjPoint ProjLine::point_at(const CycNum& s, const CycNum& t) const
{
    std::vector<CycNum> c(a_.dim());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = s * a_[i] + t * b_[i];
    return ProjPoint(std::move(c));
}

bool ProjLine::contains(const ProjPoint& p) const
{
    for (const auto& f : eqs_)
        if (!form_eval(f, p).is_zero())
            return false;
    return true;
}

std::string ProjLine::str() const { return a_.str() + " -- " + b_.str(); }

// ---------------------------------------------------------------------------

Rng::Rng(std::uint64_t seed) : state_(seed % 2147483646ULL + 1) {}

std::uint64_t Rng::next()
{
    std::minstd_rand eng(static_cast<std::minstd_rand::result_type>(state_));
    state_ = eng();
    return state_;
}

long Rng::range(long lo, long hi)
{
    if (hi < lo)
        throw std::invalid_argument("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t v = (next() << 31) ^ next();
    return lo + static_cast<long>(v % span);
}

mpq_class Rng::small_rational(long bound)
{
    long p = range(-bound, bound);
    long q = range(1, bound);
    mpq_class v(p, q);
    v.canonicalize();
    return v;
}

mpq_class Rng::nonzero_rational(long bound)
{
    for (;;) {
        mpq_class v = small_rational(bound);
        if (sgn(v) != 0)
            return v;
    }
}

CycNum Rng::small_cyc(long bound, int conductor)
{
    int c = conductor == 0 ? default_conductor() : conductor;
    int f = euler_phi(c);
    CycNum r(0L, c);
    for (int k = 0; k < f; ++k) {
        long v = range(-bound, bound);
        if (v)
            r += CycNum(v, c) * CycNum::zeta(c, k, c);
    }
    return r;
}

}  // namespace solidus
