#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out, err;
    std::vector<nlohmann::json> records() const {
        std::vector<nlohmann::json> r;
        std::istringstream in(out);
        for (std::string line; std::getline(in, line);)
            if (!line.empty() && line[0] == '{') r.push_back(nlohmann::json::parse(line));
        return r;
    }
    nlohmann::json quantity(const std::string& name) const {
        for (auto& r : records())
            if (r.value("name", "") == name) return r;
        return {};
    }
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = rooklab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze SR(3,2)") {
    auto r = run({"analyze", "--family", "sr", "-m", "3", "-n", "2", "--oracle", "all"});
    CHECK(r.code == 0);
    auto alpha = r.quantity("alpha");
    CHECK(alpha["oracle"] == 2);
    CHECK(alpha["verdict"] == "certified");
    auto recs = r.records();
    CHECK(recs.front()["record"] == "spec");
    CHECK(recs.back()["record"] == "summary");
    CHECK(recs.back()["discrepancies"] == 0);
}

TEST_CASE("analyze without oracles never certifies") {
    auto r = run({"analyze", "--family", "sr", "-m", "3", "-n", "4", "--oracle", "none"});
    CHECK(r.code == 0);
    for (auto& q : r.records())
        if (q["record"] == "quantity") CHECK(q["verdict"] != "certified");
}

TEST_CASE("strict analyze surfaces the CSR(3,2) gaps") {
    auto r = run({"analyze", "--family", "csr", "-m", "3", "-n", "2", "--oracle", "all", "--strict"});
    CHECK(r.code == rooklab::cli::kDiscrepancy);
    auto omega = r.quantity("omega");
    CHECK(omega["oracle"] == 4);
    CHECK(omega["verdict"] == "discrepancy");
    CHECK(r.quantity("chi").dump().find("NOT proper") != std::string::npos);
    auto lax = run({"analyze", "--family", "csr", "-m", "3", "-n", "2", "--oracle", "all"});
    CHECK(lax.code == 0);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"analyze", "--family", "csr", "-m", "4", "-n", "3", "--oracle", "all"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> gen{"generate", "--family", "sr", "-m", "4", "-n", "3"};
    CHECK(run(gen).out == run(gen).out);
}

TEST_CASE("json document") {
    const std::string path = "cli_test_report.json";
    auto r = run({"analyze", "--family", "sr", "-m", "3", "-n", "3", "--json", path});
    CHECK(r.code == 0);
    std::ifstream f(path);
    auto doc = nlohmann::json::parse(f);
    CHECK(doc["spec"]["family"] == "SR");
    CHECK(doc["quantities"].size() >= 6);
    std::remove(path.c_str());
}

TEST_CASE("distance example") {
    auto r = run({"distance", "--family", "csr", "-m", "4", "-n", "2", "--from", "0,0,0,0", "--to", "1,1,1,1", "--bfs"});
    CHECK(r.code == 0);
    auto rec = r.records().at(0);
    CHECK(rec["distance"] == 2);
    CHECK(rec["bfs"] == 2);
    CHECK(rec["witness"] == nlohmann::json::parse("[[1,2],[3,4]]"));
}

TEST_CASE("construct") {
    auto h = run({"construct", "hamiltonian-cycle", "-m", "2", "-n", "1"});
    CHECK(h.code == 1);
    CHECK(h.err.find("no Hamiltonian cycle") != std::string::npos);

    auto ok = run({"construct", "hamiltonian-cycle", "-m", "4", "-n", "3"});
    CHECK(ok.code == 0);
    CHECK(ok.records().at(0)["length"] == 20);
    CHECK(ok.records().at(0)["verified"] == true);

    auto d = run({"construct", "dominating-set", "-m", "3", "-n", "4"});
    CHECK(d.records().at(0)["size"] == 3);

    auto conj = run({"construct", "dominating-set", "--conjectured", "-n", "6", "--oracle", "--strict"});
    CHECK(conj.code == rooklab::cli::kDiscrepancy);
    CHECK(conj.records().at(0)["oracle_gamma"] == 3);

    auto c = run({"construct", "clique", "-m", "3", "-n", "5", "--oracle"});
    CHECK(c.code == 0);
    CHECK(c.records().at(0)["size"] == 5);

    auto col = run({"construct", "coloring", "--family", "csr", "-m", "3", "-n", "2", "--strict"});
    CHECK(col.code == rooklab::cli::kDiscrepancy);

    auto ind = run({"construct", "independent-set", "-m", "3", "-n", "3", "--p", "3"});
    CHECK(ind.code == 1);
}

TEST_CASE("aut") {
    auto r = run({"aut", "-m", "3", "-n", "3", "--count-only", "--oracle"});
    CHECK(r.code == 0);
    auto rec = r.records().at(0);
    CHECK(rec["enumerated"] == 108);  // 6 * 2 * 9
    CHECK(rec["within_hypothesis"] == false);
    auto dump = run({"aut", "-m", "2", "-n", "3"});
    CHECK(dump.records().size() == 2 * 2 * 3 + 1);
}

TEST_CASE("reduce-3partition") {
    const std::string path = "cli_test_instance.txt";
    {
        std::ofstream f(path);
        f << "2 20\n6 7 7 6 7 7\n";
    }
    auto r = run({"reduce-3partition", "--instance", path});
    CHECK(r.code == 0);
    auto rec = r.records().at(0);
    CHECK(rec["answer"] == true);
    CHECK(rec["solver_answer"] == true);
    CHECK(rec["distance"] == 4);
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"analyze", "--family", "sr", "-m", "3"}).code == 1);
    CHECK(run({"distance", "--family", "csr", "-m", "3", "-n", "3", "--from", "1,1", "--to", "0,0,0"}).code == 1);
    CHECK(run({"--enum-cap", "10", "generate", "--family", "sr", "-m", "3", "-n", "5"}).code == 2);
    CHECK(run({"generate", "--family", "sr", "-m", "3", "-n", "5", "--enum-cap", "10"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("analyze records skipped oracles") {
    auto r = run({"--search-cap", "5", "analyze", "--family", "sr", "-m", "3", "-n", "3"});
    CHECK(r.code == 0);
    auto alpha = r.quantity("alpha");
    CHECK(alpha["verdict"] != "certified");
    CHECK(alpha["oracle"].is_null());
    CHECK(alpha["notes"].dump().find("oracle skipped") != std::string::npos);
}

TEST_CASE("generate writes the edge-list format") {
    auto r = run({"generate", "--family", "csr", "-m", "4", "-n", "2"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "# family=CSR m=4 n=2");
    int lines = 0;
    for (std::string l; std::getline(in, l);) lines += !l.empty();
    CHECK(lines == 24);
}
