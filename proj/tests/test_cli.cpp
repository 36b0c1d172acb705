#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "grassq/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::initializer_list<const char*> args) {
    std::ostringstream out, err;
    std::vector<std::string> v(args.begin(), args.end());
    int code = grassq::cli::run(v, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gw command") {
    auto r = run({"gw", "--type", "C", "--m", "3", "--n", "5", "--d", "2", "4,2,2", "5,3,1",
                  "7,6,4"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("dual command") {
    auto r = run({"dual", "--type", "C", "--m", "4", "--n", "7", "7,4,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "10,6,3,2\n");
}

TEST_CASE("pieri text output follows the term grammar") {
    auto r = run({"pieri", "--type", "D", "--m", "5", "--n", "6", "--p", "2", "--primed",
                  "8,7,2,1,1:1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1*s[8,7,4,1,1] + 1*s[8,7,3,2,1:1]\n");

    auto rc = run({"pieri", "--type", "C", "--m", "4", "--n", "6", "--p", "4", "5,3,2,2"});
    CHECK(rc.code == 0);
    CHECK(rc.out ==
          "1*s[8,4,3,1] + 4*s[8,4,2,2] + 2*s[7,5,2,2] + 2*s[7,4,3,2] + 1*s[6,5,3,2]\n");
}

TEST_CASE("qpieri renders q powers") {
    auto r = run({"qpieri", "--type", "C", "--m", "3", "--n", "5", "--p", "4", "4,2,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("*q^1") != std::string::npos);
    auto rd = run({"qproduct", "--type", "Dmax", "--m", "2", "--n", "2", "3,2", "3,2"});
    CHECK(rd.code == 0);
    CHECK(rd.out.find("q1^") != std::string::npos);
}

TEST_CASE("oracle path is term-identical") {
    auto a = run({"pieri", "--type", "B", "--m", "4", "--n", "6", "--p", "4", "5,3,2,2"});
    auto b = run({"pieri", "--type", "B", "--m", "4", "--n", "6", "--p", "4", "--oracle",
                  "5,3,2,2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run({"product", "--type", "C", "--m", "2", "--n", "3", "2,1", "3,1"});
    auto d = run({"product", "--type", "C", "--m", "2", "--n", "3", "--oracle", "2,1", "3,1"});
    CHECK(c.out == d.out);
}

TEST_CASE("json output round-trips byte-identically") {
    for (auto args : {std::vector<const char*>{"qpieri", "--type", "B", "--m", "4", "--n", "6",
                                               "--p", "5", "--json", "8,4,1,1"},
                      std::vector<const char*>{"gw", "--type", "C", "--m", "3", "--n", "5",
                                               "--d", "2", "--json", "4,2,2", "5,3,1", "7,6,4"},
                      std::vector<const char*>{"basis", "--type", "D", "--m", "2", "--n", "2",
                                               "--json"}}) {
        std::ostringstream out, err;
        std::vector<std::string> v(args.begin(), args.end());
        int code = grassq::cli::run(v, out, err);
        CHECK(code == 0);
        auto parsed = nlohmann::json::parse(out.str());
        CHECK(parsed.dump() + "\n" == out.str());
    }
}

TEST_CASE("json terms carry decimal-string coefficients") {
    std::ostringstream out, err;
    int code = grassq::cli::run({"pieri", "--type", "C", "--m", "4", "--n", "6", "--p", "4",
                                 "--json", "5,3,2,2"},
                                out, err);
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["spec"]["k"] == 2);
    CHECK(j["spec"]["dim"] == 26);
    bool found = false;
    for (const auto& t : j["terms"]) {
        if (t["partition"] == std::vector<int>{8, 4, 2, 2}) {
            CHECK(t["coeff"] == "4");
            CHECK(t["q"] == std::vector<int>{0});
            CHECK(t["type"] == 0);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("convert both ways") {
    auto r = run({"convert", "--type", "C", "--m", "4", "--n", "7", "7,4,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "4,7,10,14\n");
    auto back = run({"convert", "--type", "C", "--m", "4", "--n", "7", "--index", "4,7,10,14"});
    CHECK(back.code == 0);
    CHECK(back.out == "7,4,2\n");
}

TEST_CASE("basis command lists labels in the fixed order") {
    auto r = run({"basis", "--type", "B", "--m", "1", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "-\n1\n2\n3\n");
}

TEST_CASE("errors exit with code 2 and a one-line diagnostic") {
    CHECK(run({"pieri", "--type", "C", "--m", "4", "--n", "6", "--p", "40", "5,3,2,2"}).code == 2);
    CHECK(run({"pieri", "--type", "Q", "--m", "4", "--n", "6", "--p", "4", "1"}).code == 2);
    CHECK(run({"gw", "--type", "C", "--m", "3", "--n", "5", "--d", "1", "4,2,2", "5,3,1",
               "7,6,4"}).code == 2);  // degree condition violated
    CHECK(run({"pieri", "--type", "D", "--m", "5", "--n", "6", "--p", "2", "8,7,2,1,1"}).code ==
          2);  // missing type marker
    CHECK(run({"nonsense"}).code == 2);
    auto r = run({"pieri", "--type", "C", "--m", "4", "--n", "6", "--p", "40", "5,3,2,2"});
    CHECK(r.err.find("error:") == 0);
    // n above the GRASSQ_MAX_N default of 8.
    CHECK(run({"basis", "--type", "C", "--m", "2", "--n", "9"}).code == 2);
}

TEST_CASE("verify command summarizes a spec") {
    auto r = run({"verify", "--type", "D", "--m", "2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(r.out.find("quantum: skipped") != std::string::npos);  // k = 1
    CHECK(r.out.find("FAIL") == std::string::npos);

    auto rq = run({"verify", "--type", "B", "--m", "2", "--n", "3", "--json"});
    CHECK(rq.code == 0);
    auto j = nlohmann::json::parse(rq.out);
    CHECK(j["pass"] == true);
    bool saw_quantum = false;
    for (const auto& chk : j["checks"])
        if (std::string(chk["name"]).find("quantum QR1''") != std::string::npos)
            saw_quantum = true;
    CHECK(saw_quantum);
}
