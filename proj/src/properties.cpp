#include "solidus/properties.hpp"

#include "solidus/invariants.hpp"
#include "solidus/netlab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace solidus {

Form random_form(Rng& rng, int nvars, int d, long bound)
{
    Form f(nvars, d);
    for (const auto& m : monomials_of_degree(nvars, d))
        f += CycNum(rng.range(-bound, bound)) * m;
    if (f.is_zero())
        f = monomials_of_degree(nvars, d).front();
    return f;
}

std::vector<std::vector<std::string>> reduced_words(int length)
{
    static const std::vector<std::string> letters{"iota", "iota_prime", "iota_double_prime"};
    std::vector<std::vector<std::string>> out{{}};
    for (int k = 0; k < length; ++k) {
        std::vector<std::vector<std::string>> next;
        for (const auto& w : out)
            for (const auto& l : letters)
                if (w.empty() || w.back() != l) {
                    auto v = w;
                    v.push_back(l);
                    next.push_back(std::move(v));
                }
        out = std::move(next);
    }
    return out;
}

std::vector<LinearSystem> sampled_invariant_systems(std::uint64_t seed, int count)
{
    std::vector<LinearSystem> out;
    out.push_back(LinearSystem::hyperplanes());
    out.push_back(LinearSystem::of(load_system("M4").basis, "M4"));
    out.push_back(LinearSystem::of(load_system("M6").basis, "M6"));
    out.push_back(LinearSystem::of(load_system("psi_sextics").basis, "psi"));
    out.push_back(LinearSystem::of({load_surface("Q1")}, "Q1"));
    out.push_back(LinearSystem::of({load_surface("T")}, "T"));
    Rng rng(seed);
    std::vector<Form> sextics = invariant_basis(lifted_group("G_hat"), 6);
    for (int k = 0; static_cast<int>(out.size()) < count; ++k) {
        if (k % 2 == 0) {
            CycNum c = (k % 4 == 0) ? CycNum() : CycNum(rng.nonzero_rational(9));
            NetPoint p = net_point(CycNum(rng.nonzero_rational(9)), CycNum(rng.nonzero_rational(9)), c);
            out.push_back(LinearSystem::of({net_member(p)}, "net member " + p.str()));
        } else {
            Form f(4, 6);
            for (const auto& b : sextics)
                f += CycNum(rng.range(-3, 3)) * b;
            if (f.is_zero())
                f = sextics.front();
            out.push_back(LinearSystem::of({f}, "invariant sextic"));
        }
    }
    return out;
}

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why)
    {
        if (pass)
            detail << why;
        pass = false;
    }
};

using PropertyFn = std::function<void(std::uint64_t, Outcome&)>;

ProjPoint random_point(Rng& rng, long bound = 9)
{
    for (;;) {
        std::vector<CycNum> x;
        bool nz = false;
        for (int i = 0; i < 4; ++i) {
            x.emplace_back(rng.range(-bound, bound));
            nz = nz || !x.back().is_zero();
        }
        if (nz)
            return ProjPoint(x);
    }
}

Matrix random_matrix(Rng& rng)
{
    Matrix m(4, std::vector<CycNum>(4));
    for (auto& row : m)
        for (auto& x : row)
            x = CycNum(rng.range(-4, 4));
    return m;
}

// linear form vanishing at p
Form linear_through(Rng& rng, const ProjPoint& p)
{
    std::vector<CycNum> c(4);
    for (auto& x : c)
        x = CycNum(rng.range(-5, 5));
    int k = p.pivot();
    CycNum s;
    for (int i = 0; i < 4; ++i)
        if (i != k)
            s += c[i] * p[i];
    c[k] = -s / p[k];
    Form l(4, 1);
    for (int i = 0; i < 4; ++i)
        l += c[i] * Form::variable(4, i);
    return l;
}

std::vector<std::string> twelve_groups()
{
    return {"G_48_50",   "G_48_3",         "G_96_70",    "G_96_72",       "G_96_227",  "G_96_227prime",
            "G_192_955", "G_192_185",      "G_324_160",  "G_324_160prime", "G_648_704", "G_648_704prime"};
}

std::vector<ProjPoint> coordinate_points()
{
    return {ProjPoint::parse("1,0,0,0"), ProjPoint::parse("0,1,0,0"), ProjPoint::parse("0,0,1,0"),
            ProjPoint::parse("0,0,0,1")};
}

MatrixGroup shuffled_closure(const MatrixGroup& g, Rng& rng)
{
    auto gens = g.generators();
    for (std::size_t k = gens.size(); k > 1; --k)
        std::swap(gens[k - 1], gens[static_cast<std::size_t>(rng.range(0, static_cast<long>(k) - 1))]);
    return group_closure(gens);
}

// ---------------------------------------------------------------- exactmath

void field_axioms(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    for (int k = 0; k < 1000 && o.pass; ++k) {
        CycNum a = rng.small_cyc(3), b = rng.small_cyc(3), c = rng.small_cyc(3);
        if (!((a + b) + c == a + (b + c)) || !((a * b) * c == a * (b * c)))
            o.fail("associativity at triple " + std::to_string(k));
        if (!(a * (b + c) == a * b + a * c))
            o.fail("distributivity at triple " + std::to_string(k));
        if (!(a + b == b + a) || !(a * b == b * a))
            o.fail("commutativity at triple " + std::to_string(k));
        if (!a.is_zero() && !(a * a.inverse()).is_one())
            o.fail("inverse at triple " + std::to_string(k));
    }
    o.detail << "1000 triples";
}

void substitute_functorial(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    for (int k = 0; k < 10; ++k) {
        int d = 1 + k % 2;
        Form f = random_form(rng, 4, d);
        std::vector<Form> g, h;
        for (int i = 0; i < 4; ++i) {
            g.push_back(random_form(rng, 4, 1));
            h.push_back(random_form(rng, 4, 1));
        }
        std::vector<Form> gh;
        for (const auto& x : g)
            gh.push_back(form_substitute(x, h));
        if (form_substitute(form_substitute(f, g), h) != form_substitute(f, gh))
            o.fail("trial " + std::to_string(k));
    }
    o.detail << "10 trials";
}

void gcd_divides(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    for (int k = 0; k < 6; ++k) {
        Form h = random_form(rng, 4, 1 + k % 2, 3);
        std::vector<Form> fs{random_form(rng, 4, 2, 3) * h, random_form(rng, 4, 1, 3) * h, random_form(rng, 4, 2, 3) * h};
        Form d = form_gcd(fs);
        for (const auto& f : fs)
            if (!form_divide(f, d))
                o.fail("gcd does not divide input in trial " + std::to_string(k));
        if (d.degree() < h.degree())
            o.fail("gcd misses a planted factor in trial " + std::to_string(k));
    }
    o.detail << "6 trials";
}

void order_additive(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    for (int k = 0; k < 10; ++k) {
        ProjPoint p = k < 4 ? coordinate_points()[k] : random_point(rng);
        Form f = linear_through(rng, p).pow(k % 3) * random_form(rng, 4, 1);
        Form g = linear_through(rng, p).pow(1 + k % 2) * random_form(rng, 4, 2);
        int a = vanishing_order_at_point(f, p), b = vanishing_order_at_point(g, p);
        if (vanishing_order_at_point(f * g, p) != a + b)
            o.fail("trial " + std::to_string(k));
    }
    o.detail << "10 trials";
}

void line_swap(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    for (int k = 0; k < 8; ++k) {
        ProjPoint a = random_point(rng), b = random_point(rng);
        if (a == b)
            continue;
        ProjLine l(a, b);
        Form f = random_form(rng, 4, 1);
        for (int j = 0; j < 1 + k % 3; ++j)
            f = f * (CycNum(rng.range(1, 5)) * l.equations()[0] + CycNum(rng.range(1, 5)) * l.equations()[1]);
        if (vanishing_order_along_line(f, l, seed) != vanishing_order_along_line(f, l.swapped(), seed))
            o.fail("trial " + std::to_string(k));
    }
    o.detail << "8 lines";
}

// ---------------------------------------------------------------- projgroup

void orbit_stabilizer(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    for (const char* name : {"G_48_50", "G_192_185", "G_324_160prime"}) {
        const auto& g = load_group(name);
        std::vector<ProjPoint> pts{load_point("Sigma4").seed, load_point("Sigma12").seed, load_point("Sigma16").seed};
        for (int k = 0; k < 3; ++k)
            pts.push_back(random_point(rng));
        for (const auto& p : pts) {
            auto r = orbit(g, p);
            if (r.length * r.stabilizer_order != g.order() || stabilizer(g, p).order() != r.stabilizer_order)
                o.fail(std::string(name) + " at " + p.str());
        }
    }
    o.detail << "18 orbits";
}

void closure_shuffle(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    for (const auto& name : twelve_groups()) {
        const auto& g = load_group(name);
        MatrixGroup h = shuffled_closure(g, rng);
        bool same = h.order() == g.order() &&
                    std::all_of(h.elements().begin(), h.elements().end(), [&](const ProjMap& x) { return g.contains(x); });
        if (!same)
            o.fail(name);
    }
    o.detail << "12 groups";
}

void upsilon_homomorphism(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    auto base = coordinate_points();
    for (const char* name : {"G_648_704", "G_192_185", "G_48_3"}) {
        const auto& g = load_group(name);
        for (int k = 0; k < 30; ++k) {
            const auto& a = g.elements()[static_cast<std::size_t>(rng.range(0, static_cast<long>(g.order()) - 1))];
            const auto& b = g.elements()[static_cast<std::size_t>(rng.range(0, static_cast<long>(g.order()) - 1))];
            auto pa = point_permutation(a, base), pb = point_permutation(b, base), pab = point_permutation(a * b, base);
            for (int i = 0; i < 4; ++i)
                if (pab[i] != pa[pb[i]])
                    o.fail(std::string(name) + " pair " + std::to_string(k));
        }
    }
    o.detail << "90 pairs";
}

void kernel_normal(std::uint64_t, Outcome& o)
{
    auto base = coordinate_points();
    for (const auto& name : twelve_groups()) {
        const auto& g = load_group(name);
        auto act = sigma4_action(g, base);
        for (const auto& x : g.generators())
            for (const auto& t : act.kernel.elements())
                if (!act.kernel.contains(x * t * x.inverse()))
                    o.fail(name);
    }
    o.detail << "12 kernels";
}

void fingerprint_stable(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    for (const auto& name : twelve_groups()) {
        const auto& g = load_group(name);
        Fingerprint f = fingerprint(g);
        for (int k = 0; k < 3; ++k)
            if (!(fingerprint(shuffled_closure(g, rng)) == f))
                o.fail(name + " shuffle " + std::to_string(k));
    }
    if (!(fingerprint(load_group("G_96_227")) == fingerprint(load_group("G_96_227prime"))))
        o.fail("isomorphic pair has different fingerprints");
    if (fingerprint(load_group("G_48_50")) == fingerprint(load_group("G_48_3")))
        o.fail("G_48_50 and G_48_3 are not separated");
    o.detail << "36 shuffles";
}

void fingerprint_conjugation(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    for (const char* name : {"G_48_50", "G_96_227", "G_192_185"}) {
        const auto& g = load_group(name);
        Matrix m;
        do
            m = random_matrix(rng);
        while (matrix_det(m).is_zero());
        ProjMap c(m), ci = c.inverse();
        std::vector<ProjMap> gens;
        for (const auto& x : g.generators())
            gens.push_back(c * x * ci);
        if (!(fingerprint(group_closure(gens)) == fingerprint(g)))
            o.fail(name);
    }
    o.detail << "3 conjugates";
}

// ---------------------------------------------------------------- catalog

void orders_match_names(std::uint64_t, Outcome& o)
{
    for (const auto& k : catalog_keys()) {
        if (k.kind != Kind::group)
            continue;
        auto pos = k.name.find('_');
        auto end = k.name.find('_', pos + 1);
        std::size_t named = std::stoul(k.name.substr(pos + 1, end - pos - 1));
        if (load_group(k.name).order() != named)
            o.fail(k.name);
    }
}

void seed_orbits(std::uint64_t, Outcome& o)
{
    for (const auto& k : catalog_keys()) {
        if (k.kind != Kind::point)
            continue;
        const auto& p = load_point(k.name);
        if (!p.group.empty() && orbit(load_group(p.group), p.seed).length != p.expected_length)
            o.fail(k.name);
    }
}

void quadrics_h_invariant(std::uint64_t, Outcome& o)
{
    const auto& h = load_group("H_16");
    for (int q = 1; q <= 10; ++q)
        for (const auto& x : h.elements())
            if (!surface_invariant(load_surface("Q" + std::to_string(q)), x))
                o.fail("Q" + std::to_string(q));
}

void quadric_partition(std::uint64_t, Outcome& o)
{
    std::vector<Form> qs;
    for (int q = 1; q <= 10; ++q)
        qs.push_back(load_surface("Q" + std::to_string(q)));
    std::set<std::set<int>> classes;
    for (int q = 0; q < 10; ++q) {
        std::set<int> cls;
        for (const auto& g : load_group("G_48_50").elements())
            cls.insert(surface_image_index(qs[q], g, qs));
        classes.insert(cls);
    }
    std::set<std::set<int>> expected{{0}, {1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    if (classes != expected)
        o.fail("partition differs");
}

void c8_on_t_and_q1(std::uint64_t seed, Outcome& o)
{
    const auto& c = load_curve("C8_1");
    if (!curve_in_surface(c, load_surface("T"), seed) || !curve_in_surface(c, load_surface("Q1"), seed))
        o.fail("component off T or Q1");
}

// ---------------------------------------------------------------- invariants

void reynolds_idempotent(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    const auto& g = lifted_group("G_hat");
    for (int k = 0; k < 4; ++k) {
        Form f = random_form(rng, 4, 2 + k % 3, 3);
        Form p = reynolds(g, f);
        if (reynolds(g, p) != p)
            o.fail("trial " + std::to_string(k));
    }
}

void invariant_all_elements(std::uint64_t, Outcome& o)
{
    for (const char* name : {"H_hat", "G_hat", "G_144_184_hat"}) {
        const auto& g = lifted_group(name);
        for (const auto& f : invariant_basis(g, 4))
            for (std::size_t k = 0; k < g.order(); ++k)
                if (act_element(g, k, f) != f)
                    o.fail(name);
    }
}

void dimension_conservation(std::uint64_t, Outcome& o)
{
    for (int d = 2; d <= 4; ++d) {
        std::size_t total = static_cast<std::size_t>((d + 3) * (d + 2) * (d + 1) / 6);
        for (const char* name : {"G_hat", "G_96_227_hat", "G_144_184_hat"}) {
            const auto& g = lifted_group(name);
            std::size_t inv = invariant_basis(g, d).size();
            auto split = semi_invariant_split(g, d);
            std::size_t hdim = invariant_basis(lifted_group("H_hat"), d).size();
            if (inv > total || split.dimension() != hdim || split.ambient_dim != hdim)
                o.fail(std::string(name) + " degree " + std::to_string(d));
        }
    }
}

void contravariance(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    const auto& g = lifted_group("G_144_184_hat");
    for (int k = 0; k < 10; ++k) {
        std::size_t a = static_cast<std::size_t>(rng.range(0, static_cast<long>(g.order()) - 1));
        std::size_t b = static_cast<std::size_t>(rng.range(0, static_cast<long>(g.order()) - 1));
        Form f = random_form(rng, 4, 2, 3);
        Matrix gh = matrix_mul(g.elements()[a], g.elements()[b]);
        Form lhs = act(*matrix_inverse(gh), f);
        Form rhs = act_element(g, a, act_element(g, b, f));
        if (lhs != rhs)
            o.fail("triple " + std::to_string(k));
    }
}

// ---------------------------------------------------------------- netlab

void discriminant_loci(std::uint64_t seed, Outcome& o)
{
    for (const auto& r : table1_rows())
        if (!net_discriminant(r.parameter).is_zero())
            o.fail("row " + r.tag);
    Rng rng(seed);
    for (int k = 0; k < 20; ++k) {
        NetPoint p = net_point(CycNum(rng.small_rational(20)), CycNum(rng.small_rational(20)), CycNum(rng.nonzero_rational(20)));
        auto fs = net_discriminant_factors(p);
        if (std::any_of(fs.begin(), fs.end(), [](const CycNum& c) { return c.is_zero(); })) {
            --k;
            continue;
        }
        if (net_discriminant(p).is_zero())
            o.fail("random parameter " + p.str());
        auto all = standard_candidates();
        auto extra = named_orbits({"Sigma16", "Sigma16prime"});
        all.insert(all.end(), extra.begin(), extra.end());
        if (!singular_orbits(net_member(p), all).empty())
            o.fail("singular catalog point for " + p.str());
    }
}

void table1_exact(std::uint64_t, Outcome& o)
{
    for (const auto& r : verify_table1())
        if (!r.pass)
            o.fail(r.row.tag);
}

void t_family(std::uint64_t, Outcome& o)
{
    for (const char* t : {"2", "3", "1/2"}) {
        CycNum tv = parse_scalar(t);
        NetPoint p = net_t_family(tv);
        if (!net_discriminant(p).is_zero())
            o.fail(std::string("discriminant nonzero at t=") + t);
        auto cands = standard_candidates();
        cands.push_back({"Sigma16t", orbit(load_group("G_48_50"), sigma16_t(tv)).points});
        auto found = singular_orbits(net_member(p), cands);
        if (found != std::vector<std::string>{"Sigma16t"})
            o.fail(std::string("singular set at t=") + t);
    }
}

void euler_relation(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    for (int d = 1; d <= 5; ++d) {
        Form f = random_form(rng, 4, d, 4);
        Form s(4, d);
        for (int i = 0; i < 4; ++i)
            s += Form::variable(4, i) * f.derivative(i);
        if (s != f.scaled(CycNum(d)))
            o.fail("degree " + std::to_string(d));
    }
}

// ---------------------------------------------------------------- birational

void involutivity(std::uint64_t, Outcome& o)
{
    for (const char* l : {"iota", "iota_prime", "iota_double_prime"}) {
        auto m = involution(l);
        auto sq = map_compose(m, m).as_projective();
        if (!sq || !sq->is_identity())
            o.fail(l);
    }
}

void degree_law(std::uint64_t seed, Outcome& o)
{
    const auto& g = load_group("G_48_50");
    OrbitRecord s4 = orbit(g, load_point("Sigma4").seed);
    RationalMap iota = involution("iota");
    int k = 0;
    for (const auto& s : sampled_invariant_systems(seed)) {
        int m = system_mult_at_orbit(s, s4);
        int got = pullback_system(iota, s).degree;
        if (got != 3 * s.degree - 4 * m)
            o.fail(s.tag + ": degree " + std::to_string(got));
        ++k;
    }
    o.detail << k << " systems";
}

void free_product(std::uint64_t seed, Outcome& o)
{
    int words = 0;
    for (int len = 1; len <= 3; ++len) {
        for (const auto& w : reduced_words(len)) {
            RationalMap m = compose_letters(w);
            if (m.degree() <= 1) {
                o.fail("word collapses to degree 1");
                continue;
            }
            Decomposition d = sarkisov_decompose(m);
            std::vector<std::string> rev(w.rbegin(), w.rend());
            if (d.word.letters != rev || !d.word.tail.is_identity())
                o.fail("decomposition mismatch");
            for (const auto& l : d.ledgers)
                if (l.predicates_true() != 1)
                    o.fail("ledger predicate not unique");
            if (!maps_equal(word_map(d.word), m, 3, seed))
                o.fail("round trip differs");
            ++words;
        }
    }
    o.detail << words << " words";
}

void conjugation_all(std::uint64_t, Outcome& o)
{
    const auto& g = load_group("G_48_50");
    RationalMap iota = involution("iota");
    for (const auto& x : g.elements()) {
        auto c = map_compose(iota, map_compose(RationalMap::linear(x.matrix()), iota)).as_projective();
        if (!c || !g.contains(*c))
            o.fail("conjugate outside the group");
    }
}

void diagram(std::uint64_t seed, Outcome& o)
{
    auto r = verify_diagram_63(20, seed);
    if (!r.pass())
        o.fail(r.failures.empty() ? "mismatch" : r.failures.front());
}

void psi_planes(std::uint64_t seed, Outcome& o)
{
    for (int i = 0; i < 4; ++i)
        if (psi_contracts_plane(i, 5, seed) != 5)
            o.fail("plane " + std::to_string(i + 1));
}

void ledger_uniqueness(std::uint64_t seed, Outcome& o)
{
    Rng rng(seed);
    auto words = reduced_words(2);
    auto w3 = reduced_words(3);
    words.push_back(w3[static_cast<std::size_t>(rng.range(0, static_cast<long>(w3.size()) - 1))]);
    int n = 0;
    for (const auto& w : words) {
        // a linear tail does not change the ledger
        RationalMap m = map_compose(RationalMap::linear(load_group("G_48_50").elements()[7].matrix()), compose_letters(w));
        for (const auto& l : sarkisov_decompose(m).ledgers) {
            ++n;
            if (l.predicates_true() != 1)
                o.fail("ledger with " + std::to_string(l.predicates_true()) + " true predicates");
        }
    }
    o.detail << n << " ledgers";
}

const std::vector<std::pair<std::string, PropertyFn>>& registry()
{
    static const std::vector<std::pair<std::string, PropertyFn>> r{
        {"exactmath.field_axioms", field_axioms},
        {"exactmath.substitute_functorial", substitute_functorial},
        {"exactmath.gcd_divides", gcd_divides},
        {"exactmath.order_additive", order_additive},
        {"exactmath.line_order_swap", line_swap},
        {"projgroup.orbit_stabilizer", orbit_stabilizer},
        {"projgroup.closure_shuffle", closure_shuffle},
        {"projgroup.upsilon_homomorphism", upsilon_homomorphism},
        {"projgroup.kernel_normal", kernel_normal},
        {"projgroup.fingerprint_stable", fingerprint_stable},
        {"projgroup.fingerprint_conjugation", fingerprint_conjugation},
        {"catalog.orders_match_names", orders_match_names},
        {"catalog.seed_orbits", seed_orbits},
        {"catalog.quadrics_h_invariant", quadrics_h_invariant},
        {"catalog.quadric_partition", quadric_partition},
        {"catalog.c8_on_t_and_q1", c8_on_t_and_q1},
        {"invariants.reynolds_idempotent", reynolds_idempotent},
        {"invariants.all_elements", invariant_all_elements},
        {"invariants.dimension_conservation", dimension_conservation},
        {"invariants.contravariance", contravariance},
        {"netlab.discriminant_loci", discriminant_loci},
        {"netlab.table_rows", table1_exact},
        {"netlab.t_family", t_family},
        {"netlab.euler_relation", euler_relation},
        {"birational.involutivity", involutivity},
        {"birational.degree_law", degree_law},
        {"birational.free_product", free_product},
        {"birational.conjugation", conjugation_all},
        {"birational.diagram", diagram},
        {"birational.psi_planes", psi_planes},
        {"birational.ledger_uniqueness", ledger_uniqueness},
    };
    return r;
}

}  // namespace

std::vector<std::string> property_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry())
        out.push_back(name);
    return out;
}

PropertyResult run_property(const std::string& name, std::uint64_t seed)
{
    for (const auto& [n, fn] : registry()) {
        if (n != name)
            continue;
        PropertyResult r;
        r.module = n.substr(0, n.find('.'));
        r.name = n;
        Outcome o;
        try {
            fn(seed, o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        r.pass = o.pass;
        r.detail = o.detail.str();
        return r;
    }
    throw std::out_of_range("unknown property: " + name);
}

std::vector<PropertyResult> run_properties(std::uint64_t seed, const std::string& module)
{
    std::vector<PropertyResult> out;
    for (const auto& n : property_names())
        if (module.empty() || n.rfind(module + ".", 0) == 0)
            out.push_back(run_property(n, seed));
    return out;
}

}  // namespace solidus
