#include "solidus/suites.hpp"

#include "solidus/birational.hpp"
#include "solidus/invariants.hpp"
#include "solidus/modp.hpp"
#include "solidus/netlab.hpp"
#include "solidus/properties.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace solidus {

namespace {

CheckOutcome verdict(bool ok, std::string detail)
{
    return {ok ? Status::pass : Status::fail, std::move(detail)};
}

std::string join(const std::vector<std::string>& xs, const char* sep = ", ")
{
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k)
        out += (k ? sep : "") + xs[k];
    return out;
}

// ---------------------------------------------------------------- 01

CheckOutcome group_orders(const CheckContext&)
{
    static const std::vector<std::pair<std::string, std::size_t>> expected{
        {"G_48_50", 48},    {"G_48_3", 48},           {"G_96_70", 96},     {"G_96_72", 96},
        {"G_96_227", 96},   {"G_96_227prime", 96},    {"G_192_955", 192},  {"G_192_185", 192},
        {"G_324_160", 324}, {"G_324_160prime", 324},  {"G_648_704", 648},  {"G_648_704prime", 648},
        {"G_576_8654", 576}, {"G_144_184", 144},      {"G_288_1025", 288}};
    std::vector<std::string> bad;
    for (const auto& [name, n] : expected)
        if (load_group(name).order() != n)
            bad.push_back(name + "=" + std::to_string(load_group(name).order()));
    return verdict(bad.empty(), bad.empty() ? "15 closures match" : "wrong orders: " + join(bad));
}

CheckOutcome group_separation(const CheckContext&)
{
    bool ok = !(fingerprint(load_group("G_48_50")) == fingerprint(load_group("G_48_3")));
    return verdict(ok, ok ? "G_48_50 and G_48_3 have different fingerprints" : "fingerprints coincide");
}

// ---------------------------------------------------------------- 02

CheckOutcome orbit_census(const CheckContext&)
{
    static const std::vector<std::string> reps{"Sigma4",       "Sigma4prime",          "Sigma4primeprime",
                                               "Sigma12",      "Sigma12prime",         "Sigma12primeprime",
                                               "Sigma12primeprimeprime", "Sigma16", "Sigma16prime"};
    static const std::vector<std::size_t> expected{4, 4, 4, 12, 12, 12, 12, 16, 16};
    const auto& g = load_group("G_48_50");
    std::vector<std::string> got;
    bool ok = true;
    for (std::size_t k = 0; k < reps.size(); ++k) {
        std::size_t n = orbit(g, load_point(reps[k]).seed).length;
        got.push_back(std::to_string(n));
        ok = ok && n == expected[k];
    }
    return verdict(ok, "lengths (" + join(got, ",") + ")");
}

CheckOutcome sigma16_family(const CheckContext&)
{
    const auto& g = load_group("G_48_50");
    std::vector<std::string> got;
    bool ok = true;
    for (long t : {2L, 3L, -2L}) {
        std::size_t n = orbit(g, sigma16_t(CycNum(t))).length;
        got.push_back("t=" + std::to_string(t) + ":" + std::to_string(n));
        ok = ok && n == 16;
    }
    return verdict(ok, join(got));
}

// ---------------------------------------------------------------- 03

CheckOutcome sigma4_g192(const CheckContext&)
{
    std::size_t n = orbit(load_group("G_192_185"), load_point("Sigma4").seed).length;
    return verdict(n == 4, "length " + std::to_string(n));
}

CheckOutcome g192_probe(const CheckContext&)
{
    std::vector<ProjPoint> probes;
    for (const char* n : {"Sigma4prime", "Sigma4primeprime", "Sigma12", "Sigma12prime", "Sigma12primeprime",
                          "Sigma12primeprimeprime", "Sigma16", "Sigma16prime", "Sigma16_sqrt3i"})
        probes.push_back(load_point(n).seed);
    for (long t : {2L, 3L, -2L})
        probes.push_back(sigma16_t(CycNum(t)));
    const auto& g = load_group("G_192_185");
    std::size_t shortest = g.order();
    for (const auto& p : probes)
        shortest = std::min(shortest, orbit(g, p).length);
    return verdict(shortest >= 16, std::to_string(probes.size()) + " probes, shortest orbit " + std::to_string(shortest));
}

// ---------------------------------------------------------------- 04

CheckOutcome h_hat_quartics(const CheckContext&)
{
    std::size_t d = invariant_basis(lifted_group("H_hat"), 4).size();
    return verdict(d == 5, "dimension " + std::to_string(d));
}

CheckOutcome g_hat_split(const CheckContext&)
{
    auto s = semi_invariant_split(lifted_group("G_hat"), 4);
    std::size_t trivial = 0;
    std::vector<const CharacterBlock*> nontrivial;
    for (const auto& c : s.characters) {
        if (c.trivial())
            trivial += c.basis.size();
        else
            nontrivial.push_back(&c);
    }
    bool distinct = nontrivial.size() == 2 && nontrivial[0]->values != nontrivial[1]->values &&
                    nontrivial[0]->basis.size() == 1 && nontrivial[1]->basis.size() == 1;
    bool ok = trivial == 3 && distinct && s.blocks.empty();
    return verdict(ok, std::to_string(trivial) + " trivial + " + std::to_string(nontrivial.size()) +
                           " nontrivial characters");
}

CheckOutcome g144_characters(const CheckContext&)
{
    auto s = semi_invariant_split(lifted_group("G_144_184_hat"), 4);
    std::vector<Form> targets{load_surface("f1").pow(2), load_surface("f2"), load_surface("f3"), load_surface("f4"),
                              load_surface("f5")};
    bool ok = s.blocks.empty() && s.characters.size() == 5;
    std::set<int> hit;
    for (const auto& c : s.characters) {
        ok = ok && c.basis.size() == 1;
        if (c.basis.size() != 1)
            continue;
        int which = -1;
        for (int k = 0; k < 5; ++k)
            if (forms_rank({c.basis.front(), targets[k]}) == 1)
                which = k;
        ok = ok && which >= 0;
        hit.insert(which);
    }
    for (std::size_t a = 0; a < s.characters.size(); ++a)
        for (std::size_t b = a + 1; b < s.characters.size(); ++b)
            ok = ok && s.characters[a].values != s.characters[b].values;
    ok = ok && hit.size() == 5 && !hit.count(-1);
    return verdict(ok, std::to_string(s.characters.size()) + " one-dimensional characters, eigenforms match " +
                           std::to_string(hit.size() - hit.count(-1)) + " of f1^2, f2..f5");
}

// ---------------------------------------------------------------- 05

CheckOutcome table_rows(const CheckContext&)
{
    int pass = 0, total = 0;
    std::vector<std::string> bad;
    for (const auto& r : verify_table1()) {
        ++total;
        if (r.pass)
            ++pass;
        else
            bad.push_back(r.row.tag);
    }
    return verdict(bad.empty(), std::to_string(pass) + "/" + std::to_string(total) + " rows" +
                                    (bad.empty() ? "" : "; failing: " + join(bad)));
}

CheckOutcome t_family_params(const CheckContext&)
{
    std::vector<std::string> got;
    bool ok = true;
    for (const char* t : {"2", "3", "1/2"}) {
        CycNum tv = parse_scalar(t);
        NetPoint p = net_t_family(tv);
        auto cands = standard_candidates();
        cands.push_back({"Sigma16t", orbit(load_group("G_48_50"), sigma16_t(tv)).points});
        bool zero = net_discriminant(p).is_zero();
        auto found = singular_orbits(net_member(p), cands);
        ok = ok && zero && found == std::vector<std::string>{"Sigma16t"};
        got.push_back(std::string("t=") + t + (zero ? " disc 0" : " disc nonzero") + " singular {" + join(found) + "}");
    }
    return verdict(ok, join(got, "; "));
}

CheckOutcome off_locus(const CheckContext& ctx)
{
    Rng rng(ctx.seed);
    auto cands = standard_candidates();
    auto extra = named_orbits({"Sigma16", "Sigma16prime", "Sigma16_sqrt3i", "Sigma16_minus_sqrt3i"});
    cands.insert(cands.end(), extra.begin(), extra.end());
    int clean = 0;
    std::string first_bad;
    for (int k = 0; k < 20;) {
        NetPoint p = net_point(CycNum(rng.small_rational(20)), CycNum(rng.small_rational(20)), CycNum(rng.nonzero_rational(20)));
        if (net_discriminant(p).is_zero())
            continue;
        ++k;
        if (singular_orbits(net_member(p), cands).empty())
            ++clean;
        else if (first_bad.empty())
            first_bad = p.str();
    }
    return verdict(clean == 20, std::to_string(clean) + "/20 parameters without singular catalog points" +
                                    (first_bad.empty() ? "" : "; first failure " + first_bad));
}

// ---------------------------------------------------------------- 06

std::vector<ProjPoint> meets(const std::string& a, const std::string& b)
{
    std::set<ProjPoint> pts;
    for (const auto& x : load_curve(a).components)
        for (const auto& y : load_curve(b).components)
            if (auto p = line_intersect(*x.line, *y.line))
                pts.insert(*p);
    return {pts.begin(), pts.end()};
}

std::set<ProjPoint> orbit_union(const std::vector<std::string>& names)
{
    std::set<ProjPoint> out;
    for (const auto& n : names)
        for (const auto& p : orbit(load_group("G_48_50"), load_point(n).seed).points)
            out.insert(p);
    return out;
}

struct MeetEntry {
    std::string a, b;
    std::vector<std::string> expected;  // empty: no common point
};

CheckOutcome intersection_table(const CheckContext&)
{
    static const std::vector<MeetEntry> entries{
        {"L4", "L4prime", {}},
        {"L4", "L4primeprime", {"Sigma16_sqrt3i"}},
        {"L4", "L4primeprimeprime", {"Sigma16prime"}},
        {"L4", "L6primeprimeprime", {}},
        {"L4prime", "L4primeprime", {"Sigma16"}},
        {"L4prime", "L4primeprimeprime", {"Sigma16_minus_sqrt3i"}},
        {"L4prime", "L6primeprimeprime", {}},
        {"L4primeprime", "L4primeprimeprime", {}},
        {"L4primeprime", "L6primeprimeprimeprime", {}},
        {"L4primeprimeprime", "L6primeprimeprimeprime", {}},
        {"L6primeprimeprime", "L6primeprimeprimeprime", {"Sigma12prime", "Sigma12primeprime", "Sigma12primeprimeprime"}},
        {"L6", "L6prime", {"Sigma12"}},
        {"L6", "L6primeprime", {"Sigma12"}},
        {"L6prime", "L6primeprime", {"Sigma12"}},
    };
    int ok = 0;
    std::vector<std::string> bad;
    for (const auto& e : entries) {
        auto got = meets(e.a, e.b);
        std::set<ProjPoint> want = orbit_union(e.expected);
        if (std::set<ProjPoint>(got.begin(), got.end()) == want)
            ++ok;
        else
            bad.push_back(e.a + "/" + e.b + " (" + std::to_string(got.size()) + " points)");
    }
    return verdict(bad.empty(), std::to_string(ok) + "/" + std::to_string(entries.size()) + " entries" +
                                    (bad.empty() ? "" : "; failing: " + join(bad)));
}

// ---------------------------------------------------------------- 07

CheckOutcome psi_planes(const CheckContext& ctx)
{
    std::vector<std::string> got;
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
        int n = psi_contracts_plane(i, 5, ctx.seed);
        ok = ok && n == 5;
        got.push_back("F" + std::to_string(i + 1) + ":" + std::to_string(n) + "/5");
    }
    return verdict(ok, join(got));
}

CheckOutcome diagram(const CheckContext& ctx)
{
    int n = ctx.samples > 0 ? ctx.samples : 100;
    DiagramReport r = verify_diagram_63(n, ctx.seed);
    return verdict(r.pass() && r.samples == n && r.eta_checks >= 3 * std::min(n, 50),
                   std::to_string(r.matches) + "/" + std::to_string(r.samples) + " diagram samples, " +
                       std::to_string(r.eta_matches) + "/" + std::to_string(r.eta_checks) + " eta checks");
}

// ---------------------------------------------------------------- 08

CheckOutcome involutions(const CheckContext&)
{
    std::vector<std::string> bad;
    for (const char* l : {"iota", "iota_prime", "iota_double_prime"}) {
        RationalMap m = involution(l);
        auto sq = map_compose(m, m).as_projective();
        if (!sq || !sq->is_identity())
            bad.push_back(l);
        // the catalog formula squares to the identity as well
        RationalMap c = map_from_catalog(l);
        auto sc = map_compose(c, c).as_projective();
        if (!sc || !sc->is_identity())
            bad.push_back(std::string(l) + " (catalog)");
    }
    return verdict(bad.empty(), bad.empty() ? "3 involutions" : "not involutive: " + join(bad));
}

CheckOutcome r_conjugates(const CheckContext& ctx)
{
    bool p = maps_equal(involution("iota_prime"), map_from_catalog("iota_prime"), 20, ctx.seed);
    bool pp = maps_equal(involution("iota_double_prime"), map_from_catalog("iota_double_prime"), 20, ctx.seed + 1);
    return verdict(p && pp, std::string("R o iota o R^2 ") + (p ? "agrees" : "differs") + ", R^2 o iota o R " +
                                (pp ? "agrees" : "differs") + " on 20 samples");
}

CheckOutcome iota_normalizes(const CheckContext&)
{
    const auto& g = load_group("G_48_50");
    RationalMap iota = involution("iota");
    std::set<int> seen;
    for (const auto& x : g.elements()) {
        auto c = map_compose(iota, map_compose(RationalMap::linear(x.matrix()), iota)).as_projective();
        if (c && g.contains(*c))
            seen.insert(g.index_of(*c));
    }
    return verdict(seen.size() == g.order(), std::to_string(seen.size()) + " distinct conjugates in G_48_50");
}

CheckOutcome degree_law(const CheckContext& ctx)
{
    OrbitRecord s4 = orbit(load_group("G_48_50"), load_point("Sigma4").seed);
    RationalMap iota = involution("iota");
    int ok = 0, total = 0;
    std::string first_bad;
    for (const auto& s : sampled_invariant_systems(ctx.seed, 20)) {
        ++total;
        int expect = 3 * s.degree - 4 * system_mult_at_orbit(s, s4);
        if (pullback_system(iota, s).degree == expect)
            ++ok;
        else if (first_bad.empty())
            first_bad = s.tag;
    }
    return verdict(ok == total && total == 20, std::to_string(ok) + "/" + std::to_string(total) + " systems" +
                                                   (first_bad.empty() ? "" : "; first failure " + first_bad));
}

CheckOutcome ledger_unique(const CheckContext&)
{
    int n = 0, ok = 0;
    for (int len = 1; len <= 2; ++len)
        for (const auto& w : reduced_words(len))
            for (const auto& l : sarkisov_decompose(compose_letters(w)).ledgers) {
                ++n;
                ok += l.predicates_true() == 1;
            }
    return verdict(ok == n, std::to_string(ok) + "/" + std::to_string(n) + " ledgers with one true predicate");
}

// ---------------------------------------------------------------- 09

CheckOutcome word_check(const std::vector<std::vector<std::string>>& words, std::uint64_t seed)
{
    int ok = 0, ledgers = 0, ledgers_ok = 0;
    std::vector<std::string> bad;
    for (const auto& w : words) {
        RationalMap m = compose_letters(w);
        Decomposition d = sarkisov_decompose(m);
        std::vector<std::string> rev(w.rbegin(), w.rend());
        for (const auto& l : d.ledgers) {
            ++ledgers;
            ledgers_ok += l.predicates_true() == 1;
        }
        bool good = m.degree() > 1 && d.word.letters == rev && d.word.tail.is_identity() &&
                    maps_equal(word_map(d.word), m, 10, seed);
        if (good)
            ++ok;
        else
            bad.push_back(join(w, "*"));
    }
    return verdict(bad.empty() && ledgers_ok == ledgers,
                   std::to_string(ok) + "/" + std::to_string(words.size()) + " words recovered, " +
                       std::to_string(ledgers_ok) + "/" + std::to_string(ledgers) + " unique ledgers" +
                       (bad.empty() ? "" : "; failing: " + join(bad)));
}

CheckOutcome words_short(const CheckContext& ctx)
{
    auto words = reduced_words(1);
    auto two = reduced_words(2);
    words.insert(words.end(), two.begin(), two.end());
    return word_check(words, ctx.seed);
}

CheckOutcome words_three(const CheckContext& ctx)
{
    auto all = reduced_words(3);
    Rng rng(ctx.seed);
    for (std::size_t k = all.size(); k > 1; --k)
        std::swap(all[k - 1], all[static_cast<std::size_t>(rng.range(0, static_cast<long>(k) - 1))]);
    all.resize(6);
    return word_check(all, ctx.seed);
}

// ---------------------------------------------------------------- 10

// eight points on the component: exact for lines, over F_1009 for ideals
bool component_probe(const CurveComponent& image, const CurveComponent& target, std::uint64_t seed)
{
    auto eqs = target.equations();
    if (image.line) {
        for (int k = 0; k < 8; ++k) {
            ProjPoint p = k == 0 ? image.line->a() : image.line->point_at(CycNum(1), CycNum(k - 1));
            for (const auto& f : eqs)
                if (!form_eval(f, p).is_zero())
                    return false;
        }
        return true;
    }
    const auto& F = modp::Field::small();
    std::vector<modp::ModForm> gens;
    for (const auto& g : image.ideal)
        gens.push_back(modp::reduce_form(F, g));
    Rng rng(seed);
    auto pts = modp::sample_zeros(F, gens, 8, rng);
    if (pts.size() < 8)
        return false;
    for (const auto& f : eqs) {
        auto mf = modp::reduce_form(F, f);
        for (const auto& x : pts)
            if (modp::eval(F, mf, x) != 0)
                return false;
    }
    return true;
}

// every generator maps every component onto a listed component (exact key and point probe agree)
std::string curve_closed(const std::string& curve, const std::vector<ProjMap>& gens, std::uint64_t seed)
{
    const auto& c = load_curve(curve);
    for (std::size_t k = 0; k < c.components.size(); ++k)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            CurveComponent img = map_component(gens[j], c.components[k]);
            int idx = find_component(c.components, img);
            if (idx < 0)
                return "component " + std::to_string(k) + " leaves the set under generator " + std::to_string(j);
            if (!component_probe(img, c.components[static_cast<std::size_t>(idx)], seed + k))
                return "probe disagrees for component " + std::to_string(k);
        }
    return {};
}

CheckOutcome g192_curves(const CheckContext& ctx)
{
    const auto& gens = load_group("G_192_185").generators();
    std::vector<std::string> bad;
    int comps = 0;
    for (const char* n : {"C8", "SC8", "SC12", "SC12prime", "F12", "F12prime"}) {
        comps += static_cast<int>(load_curve(n).components.size());
        std::string why = curve_closed(n, gens, ctx.seed);
        if (!why.empty())
            bad.push_back(std::string(n) + ": " + why);
    }
    return verdict(bad.empty(), std::to_string(comps) + " components over 6 curves" +
                                    (bad.empty() ? "" : "; " + join(bad, "; ")));
}

CheckOutcome g324_curves(const CheckContext& ctx)
{
    const auto& gens = load_group("G_324_160prime").generators();
    const auto& lift = lifted_group("G_324_160prime");
    std::vector<std::string> bad;
    for (const char* n : {"curve51", "curve52"}) {
        std::string why = curve_closed(n, gens, ctx.seed);
        if (!why.empty())
            bad.push_back(std::string(n) + ": " + why);
    }
    for (const char* p : {"pencil51", "pencil52"})
        if (!span_preserved(lift, load_system(p).basis))
            bad.push_back(std::string(p) + " not preserved");
    return verdict(bad.empty(), bad.empty() ? "2 curves invariant, 2 pencils preserved" : join(bad, "; "));
}

// ---------------------------------------------------------------- 11

CheckOutcome properties_for(std::uint64_t seed)
{
    std::vector<std::string> bad;
    auto rs = run_properties(seed);
    for (const auto& r : rs)
        if (!r.pass)
            bad.push_back(r.name + (r.detail.empty() ? "" : " (" + r.detail + ")"));
    return verdict(bad.empty(), std::to_string(rs.size() - bad.size()) + "/" + std::to_string(rs.size()) +
                                    " properties" + (bad.empty() ? "" : "; failing: " + join(bad)));
}

std::vector<CheckDef> make_checks()
{
    std::vector<CheckDef> c{
        {"01.group-orders", "orders of the monomial groups and the normalizer chain", "groups", group_orders},
        {"01.group-separation", "the two order-48 groups are not isomorphic", "groups", group_separation},
        {"02.orbit-census", "short G_48_50 orbits of the listed representatives", "census", orbit_census},
        {"02.sigma16-family", "[1:1:1:t] orbits of length 16", "census", sigma16_family},
        {"03.sigma4-g192", "Sigma4 is a G_192_185 orbit", "probe192", sigma4_g192},
        {"03.g192-probe", "no other G_192_185 orbit shorter than 16", "probe192", g192_probe},
        {"04.h-hat-quartics", "invariant quartics of the lifted Heisenberg group", "lemma3.5", h_hat_quartics},
        {"04.g-hat-characters", "character split of quartic invariants for the lift of G_48_50", "lemma3.5", g_hat_split},
        {"04.g144-characters", "character split for the lift of G_144_184", "lemma3.5", g144_characters},
        {"05.table-rows", "singular loci of the invariant quartic net", "table1", table_rows},
        {"05.t-family", "quartics singular along Sigma16^t", "table1", t_family_params},
        {"05.off-locus", "generic net members avoid catalog points", "table1", off_locus},
        {"06.intersection-table", "intersections of the line configurations", "intersections", intersection_table},
        {"07.psi-planes", "psi contracts the coordinate planes", "diagram63", psi_planes},
        {"07.diagram", "commutative diagram through V2 and the eta projections", "diagram63", diagram},
        {"08.involutions", "iota, iota', iota'' are involutions", "cremona", involutions},
        {"08.r-conjugates", "iota' and iota'' are R-conjugates of iota", "cremona", r_conjugates},
        {"08.iota-normalizes", "iota normalizes G_48_50", "cremona", iota_normalizes},
        {"08.degree-law", "Cremona degree law on invariant systems", "cremona", degree_law},
        {"08.ledger-unique", "exactly one untwisting predicate per step", "cremona", ledger_unique},
        {"09.words-short", "reduced words of length 1 and 2 decompose", "words", words_short},
        {"09.words-three", "sampled reduced words of length 3 decompose", "words", words_three},
        {"10.g192-curves", "G_192_185-invariant curves", "curves", g192_curves},
        {"10.g324-curves", "G_324_160' invariant curves and cubic pencils", "curves", g324_curves},
    };
    for (std::uint64_t s = 0; s < 3; ++s)
        c.push_back({"11.properties-seed" + std::to_string(s), "module property suites", "properties",
                     [s](const CheckContext&) { return properties_for(s); }});
    return c;
}

}  // namespace

const std::vector<CheckDef>& all_checks()
{
    static const std::vector<CheckDef> c = make_checks();
    return c;
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& c : all_checks())
        if (std::find(out.begin(), out.end(), c.suite) == out.end())
            out.push_back(c.suite);
    return out;
}

int check_criterion(const std::string& id) { return std::stoi(id.substr(0, id.find('.'))); }

CheckResult run_check(const CheckDef& c, const CheckContext& ctx)
{
    CheckResult r;
    r.id = c.id;
    r.anchor = c.anchor;
    auto t0 = std::chrono::steady_clock::now();
    try {
        CheckOutcome o = c.run(ctx);
        r.status = o.status;
        r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
        r.status = Status::fail;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

VerificationReport run_checks(const std::vector<const CheckDef*>& checks, const CheckContext& ctx,
                              const std::string& suite_label)
{
    VerificationReport rep;
    rep.suite = suite_label;
    rep.seed = ctx.seed;
    rep.checks.resize(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < checks.size();)
            rep.checks[k] = run_check(*checks[k], ctx);
    };
    unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(checks.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    rep.sort();
    return rep;
}

VerificationReport run_suite(const std::string& suite, const CheckContext& ctx)
{
    std::vector<const CheckDef*> picked;
    for (const auto& c : all_checks())
        if (suite == "all" || c.suite == suite)
            picked.push_back(&c);
    if (picked.empty())
        throw std::invalid_argument("unknown suite: " + suite);
    return run_checks(picked, ctx, suite);
}

}  // namespace solidus
