#include "solidus/exactmath.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(SOLIDUS_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

const std::string data_dir = std::string(SOLIDUS_SOURCE_DIR) + "/data";

}  // namespace

TEST_CASE("orbit of [0:0:1:1] has length 12")
{
    Run r = run("orbits --group G_48_50 --point 0,0,1,1");
    CHECK(r.code == 0);
    CHECK(json_of(r)["length"] == 12);
}

TEST_CASE("quartic invariant suite reports dimension 5")
{
    Run r = run("verify --suite lemma3.5");
    CHECK(r.code == 0);
    auto j = json_of(r);
    bool found = false;
    for (const auto& c : j["checks"])
        if (c["id"] == "04.h-hat-quartics") {
            found = true;
            CHECK(c["status"] == "pass");
            CHECK(c["detail"] == "dimension 5");
        }
    CHECK(found);
}

TEST_CASE("decompose the shipped example")
{
    Run r = run("decompose --map " + data_dir + "/iota_prime_iota.json");
    CHECK(r.code == 0);
    auto j = json_of(r);
    CHECK(j["word"] == nlohmann::json({"iota", "iota_prime"}));
    CHECK(j["round_trip"] == "pass");
    CHECK(j["ledgers"].size() == 2);
    CHECK(j["tail"].size() == 4);
}

TEST_CASE("json output is byte-identical across runs")
{
    for (const char* args : {"--seed 1 verify --suite census", "verify --suite table1 --seed 2",
                             "net --abc 1,1,1", "invariants --group G_hat --degree 4 --characters"}) {
        Run a = run(args), b = run(args);
        INFO(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(!a.out.empty());
    }
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("orbits --group G_0_0 --point 1,0,0,0").code == 2);
    CHECK(run("orbits --group G_48_50 --point 1,0,0").code == 2);
    CHECK(run("orbits --group G_48_50 --point 1,x,0,0").code == 2);
    CHECK(run("--format xml catalog list").code == 2);
    CHECK(run("verify").code == 2);
    CHECK(run("verify --suite nonsense").code == 2);
    CHECK(run("decompose --map /nonexistent.json").code == 2);
    CHECK(run("net").code == 2);
    CHECK(run("catalog dump nothing_here").code == 2);
}

TEST_CASE("check failures exit with 1")
{
    CHECK(run("catalog check --corrupt").code == 1);
    CHECK(run("catalog check").code == 0);
}

TEST_CASE("catalog queries")
{
    Run l = run("catalog list --kind group");
    CHECK(l.code == 0);
    auto j = json_of(l);
    CHECK(std::find(j.begin(), j.end(), "group:G_48_50") != j.end());
    Run d = run("catalog dump surface:Q1");
    CHECK(d.code == 0);
    auto q = solidus::Form::parse(json_of(d)["form"].get<std::string>(), 4);
    CHECK(q == solidus::Form::parse("x0^2+x1^2+x2^2+x3^2", 4));
}

TEST_CASE("group, invariants and net")
{
    Run g = run("group --group G_648_704");
    CHECK(g.code == 0);
    CHECK(json_of(g)["order"] == 648);
    CHECK(json_of(g)["kernel_order"] == 27);
    Run i = run("invariants --group H_hat --degree 4");
    CHECK(i.code == 0);
    CHECK(json_of(i)["dimension"] == 5);
    Run n = run("net --abc 6,1,0");
    CHECK(n.code == 0);
    CHECK(json_of(n)["singular_orbits"] == nlohmann::json({"Sigma4", "Sigma4prime"}));
    Run t = run("net --table1");
    CHECK(t.code == 0);
    CHECK(json_of(t)["table1"].size() == 16);
}

TEST_CASE("diagram target and markdown output")
{
    Run r = run("verify diagram63 --samples 10");
    CHECK(r.code == 0);
    for (const auto& c : json_of(r)["checks"])
        CHECK(c["status"] == "pass");
    Run m = run("--format md verify --suite census");
    CHECK(m.code == 0);
    CHECK(m.out.rfind("# solidus verify: census", 0) == 0);
}

TEST_CASE("verify --list covers every acceptance criterion")
{
    Run r = run("verify --list");
    CHECK(r.code == 0);
    auto j = json_of(r);
    std::set<int> criteria;
    for (const auto& [suite, ids] : j.items())
        for (const auto& id : ids)
            criteria.insert(std::stoi(id.get<std::string>().substr(0, 2)));
    CHECK(criteria.size() == 11);
    CHECK(*criteria.begin() == 1);
    CHECK(*criteria.rbegin() == 11);
}
