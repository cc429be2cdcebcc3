#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "collatz/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "collatz");
    std::vector<char*> argv;
    for (auto& a : args) {
        argv.push_back(a.data());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = collatz::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& part)
{
    return s.find(part) != std::string::npos;
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("help and bad usage")
    {
        CHECK(run({"--help"}).code == 0);
        CHECK(has(run({"nodes", "--help"}).out, "--max-node"));
        CHECK(run({}).code == 2);
        CHECK(run({"nodes", "--bogus"}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({"--problem", "collatz", "--mapping", "x.json", "nodes"}).code == 2);
    }

    TEST_CASE("nodes")
    {
        const auto seeds = run({"nodes", "--problem", "collatz", "--max-node", "1", "--format", "csv"});
        CHECK(seeds.code == 0);
        CHECK(seeds.out == "main,secondary,side,delta,k1,k2,k,lnC,lnR,lnP,rs\n"
                           "1,1,PP,3.333333333333333333333333e-01,0,1,1,,,,\n"
                           "1,1,PG,3.333333333333333333333333e-01,1,0,1,,,,\n");

        const auto t = run({"nodes", "--problem", "3x1", "--max-node", "5", "--table2"});
        CHECK(t.code == 0);
        CHECK(has(t.out, "1.06787109375000"));

        const auto t2 = run({"nodes", "--table2"});
        CHECK(has(t2.out, "1.00001819475389"));
        CHECK(has(t2.out, "| 9 | 23 |"));
        CHECK_FALSE(has(t2.out, "| 10 | 1 |"));

        const auto t3 = run({"nodes", "--table3", "--max-node", "9", "--format", "json"});
        const auto doc = nlohmann::json::parse(t3.out);
        CHECK(doc.at("layout") == "table3");
        CHECK(doc.at("nodes")[0].at("main") == 7);

        const auto t5 = run({"nodes", "--table5", "--max-node", "5", "--format", "csv"});
        CHECK(has(t5.out, "\n5,2,"));
    }

    TEST_CASE("nodes errors")
    {
        CHECK(run({"nodes", "--precision", "5"}).code == 2);
        CHECK(run({"nodes", "--precision", "20", "--no-escalate"}).code == 3);
        CHECK(run({"nodes", "--precision", "20", "--max-digits", "30"}).code == 3);
        CHECK(run({"nodes", "--problem", "carnielli-t5"}).code == 2);
        CHECK(run({"nodes", "--problem", "carnielli-t5", "--par", "1/2", "--max-node", "4"}).code == 0);
        CHECK(run({"nodes", "--r-mode", "gamma"}).code == 2);
        CHECK(run({"nodes", "--format", "xml"}).code == 2);
    }

    TEST_CASE("cycles")
    {
        const auto u = run({"cycles", "--problem", "3x1", "--range", "3..3", "--max-steps", "5"});
        CHECK(u.code == 0);
        CHECK(has(u.out, "Undetermined starts (1): 3"));

        const auto g = run({"cycles", "--problem", "collatz", "--format", "json"});
        CHECK(g.code == 0);
        const auto doc = nlohmann::json::parse(g.out);
        CHECK(doc.at("cycles").size() == 9);

        const auto strict = run({"cycles", "--problem", "3x1", "--par", "1/12", "--format", "json"});
        const auto sdoc = nlohmann::json::parse(strict.out);
        bool some_fail = false;
        for (const auto& c : sdoc.at("cycles")) {
            some_fail = some_fail || !c.at("holds").get<bool>();
        }
        CHECK(some_fail);

        CHECK(run({"cycles", "--range", "5..1"}).code == 2);
        // determinism
        CHECK(run({"cycles", "--threads", "3"}).out == run({"cycles"}).out);
    }

    TEST_CASE("verify")
    {
        const auto p = run({"verify", "periodicity", "--problem", "collatz", "--k", "5"});
        CHECK(p.code == 0);
        CHECK(has(p.out, "| distinct_count | 243 |"));
        CHECK(has(p.out, "| all_distinct | true |"));
        const auto d = run({"verify", "distribution", "--problem", "collatz", "--k", "5"});
        CHECK(has(d.out, "match: true"));
        CHECK(has(d.out, "80"));
        CHECK(run({"verify", "periodicity", "--k", "20", "--limit", "1000"}).code == 2);
        CHECK(run({"verify", "sideways", "--k", "3"}).code == 2);
        CHECK(run({"verify", "periodicity"}).code == 2);
    }

    TEST_CASE("trajectories")
    {
        const auto all = run({"trajectories", "--problem", "collatz", "--k", "5", "--k1", "3", "--k2", "2"});
        CHECK(all.code == 0);
        CHECK(has(all.out, "| (2,3,2,3,2) | (1,0,1,0,1) |"));
        CHECK(has(all.out, "80 rows"));
        const auto cut = run({"trajectories", "--k", "5", "--k1", "3", "--k2", "2", "--head", "29", "--tail", "4"});
        CHECK(has(cut.out, "| ... | ... |"));
        CHECK(has(cut.out, "| (241,321,214,285,190) | (-1,0,-1,0,-1) |"));
        const auto one = run({"trajectories", "--k", "3", "--start", "5"});
        CHECK(has(one.out, "(1,-1,0)"));
        CHECK(run({"trajectories", "--k", "5", "--k1", "3", "--k2", "3"}).code == 2);
        CHECK(has(run({"trajectories", "--k", "5", "--k1", "3"}).out, "80 rows"));
    }

    TEST_CASE("gap")
    {
        const auto g = run({"gap", "--problem", "collatz", "--node", "9.23"});
        CHECK(g.code == 0);
        CHECK(has(g.out, "1,263"));
        const auto j = run({"gap", "--node", "9.23", "--format", "json"});
        CHECK(nlohmann::json::parse(j.out).at("total") == 1263);
        CHECK(run({"gap", "--node", "9.99"}).code == 2);
        CHECK(run({"gap", "--node", "nine"}).code == 2);
    }

    TEST_CASE("output file")
    {
        const auto path = std::filesystem::temp_directory_path() / "collatz_cli_out.csv";
        std::filesystem::remove(path);
        const auto r = run({"nodes", "--max-node", "3", "--format", "csv", "--out", path.string()});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream in(path);
        std::string first;
        std::getline(in, first);
        CHECK(first == "main,secondary,side,delta,k1,k2,k,lnC,lnR,lnP,rs");
        std::filesystem::remove(path);
    }

    TEST_CASE("custom mapping file")
    {
        const auto path = std::filesystem::temp_directory_path() / "collatz_cli_map.json";
        {
            std::ofstream f(path);
            f << R"({"name": "mine", "d": 2, "branches": [
                {"residue": 0, "multiplier": 1, "offset": 0},
                {"residue": 1, "multiplier": 3, "offset": -1}]})";
        }
        const auto r = run({"cycles", "--mapping", path.string(), "--range", "-20..20"});
        CHECK(r.code == 0);
        CHECK(has(r.out, "Cycles of mine"));
        CHECK(run({"cycles", "--mapping", "/nonexistent/map.json"}).code == 2);
        std::filesystem::remove(path);
    }
}
