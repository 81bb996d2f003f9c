#include "prefdom/cli.hpp"
#include "prefdom/profile.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace prefdom;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kData = PREFDOM_TEST_DATA;

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_file(const std::string& name, const std::string& contents)
{
    const std::string path = "cli_test_" + name;
    std::ofstream(path) << contents;
    return path;
}

}  // namespace

TEST_CASE("recognize exit codes")
{
    CHECK(run({"recognize", "--property", "single-crossing", "--input", kData + "/four_voters.profile"}).code == 1);
    auto empty = temp_file("empty.profile", "0 0\n");
    for (auto name : {"single-peaked", "value-restricted", "beta-restricted", "single-crossing"})
        CHECK(run({"recognize", "--property", name, "--input", empty}).code == 0);

    auto rest = temp_file("path5_rest.profile", "12 3\n3 1 2 4 5 6 7 8 9 10 11 12\n"
                                               "1 2 3 5 6 4 9 7 8 10 11 12\n1 2 3 4 5 6 7 8 9 11 12 10\n");
    CHECK(run({"recognize", "--property", "single-peaked", "--input", rest}).code == 0);
}

TEST_CASE("recognize witness and json output")
{
    auto r = run({"recognize", "--property", "single-crossing", "--input", kData + "/four_voters.profile", "--witness"});
    CHECK(r.out.find("violation: gamma on voters v1 v3 v4") != std::string::npos);

    auto j = run({"recognize", "--property", "single-crossing", "--input", kData + "/four_voters.profile", "--json"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["property"] == "single-crossing");
    CHECK(doc["holds"] == false);
    CHECK(doc["violation"]["kind"] == "gamma");
    CHECK(doc["violation"]["voters"] == nlohmann::json({"v1", "v3", "v4"}));
    CHECK(doc["violation"]["roles"].size() == 6);
    CHECK(doc["certificate"].is_null());

    auto sc = temp_file("sc.profile", "3 2\n1 2 3\n2 1 3\n");
    auto ok = nlohmann::json::parse(
        run({"recognize", "--property", "single-crossing", "--input", sc, "--json"}).out);
    CHECK(ok["holds"] == true);
    CHECK(ok["violation"].is_null());
    CHECK(ok["certificate"].size() == 2);
}

TEST_CASE("distance decision and minimum")
{
    auto r = run({"distance", "--property", "value-restricted", "--mode", "voters", "--k", "2", "--input",
                  kData + "/path5_value_md.profile", "--json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["feasible"] == true);
    CHECK(doc["size"] == 2);
    CHECK(doc["mode"] == "voters");
    CHECK(doc["method"] == "fpt");
    CHECK(doc["elapsed_ms"] == 0);
    CHECK(doc["deleted"].size() == 2);

    CHECK(run({"distance", "--property", "value-restricted", "--mode", "voters", "--k", "1", "--input",
               kData + "/path5_value_md.profile"})
              .code == 1);

    auto sc = run({"distance", "--property", "single-crossing", "--mode", "voters", "--input",
                   kData + "/four_voters.profile"});
    CHECK(sc.code == 0);
    CHECK(sc.out.find("distance: 1") != std::string::npos);
    CHECK(sc.out.find("deleted: v3") != std::string::npos);

    auto poly = run({"distance", "--property", "single-crossing", "--mode", "alternatives", "--method", "poly",
                     "--input", kData + "/four_voters.profile"});
    CHECK(poly.code == 2);
}

TEST_CASE("distance output is deterministic")
{
    std::vector<std::string> args = {"distance", "--property", "single-peaked", "--mode", "alternatives",
                                     "--input", kData + "/path5_value_md.profile", "--json"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage errors and guards")
{
    CHECK(run({}).code == 2);
    CHECK(run({"recognize", "--property", "nonsense", "--input", kData + "/four_voters.profile"}).code == 2);
    CHECK(run({"recognize", "--property", "single-peaked"}).code == 2);
    CHECK(run({"recognize", "--property", "single-peaked", "--input", "missing.profile"}).code == 2);
    CHECK(run({"distance", "--property", "single-peaked", "--mode", "sideways", "--input", kData + "/four_voters.profile"})
              .code == 2);
    auto bad = temp_file("bad.profile", "3 1\n1 1 2\n");
    CHECK(run({"recognize", "--property", "single-peaked", "--input", bad}).code == 2);
    CHECK(run({"--help"}).code == 0);

    std::ostringstream wide;
    wide << "40 1\n";
    for (int i = 1; i <= 40; ++i)
        wide << i << (i == 40 ? "\n" : " ");
    auto big = temp_file("wide.profile", wide.str());
    CHECK(run({"distance", "--property", "single-peaked", "--mode", "alternatives", "--method", "brute", "--k",
               "12", "--input", big})
              .code == 3);
}

TEST_CASE("generate")
{
    auto r = run({"generate", "vc-value-md", "--graph", kData + "/path5.graph"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(kData + "/path5_value_md.profile"));

    const std::string path = "cli_test_generated.profile";
    CHECK(run({"generate", "vc-value-md", "--graph", kData + "/path5.graph", "--output", path}).code == 0);
    CHECK(slurp(path) == slurp(kData + "/path5_value_md.profile"));

    auto sat = run({"generate", "max2sat-sc-ad", "--max2sat", kData + "/four_clauses.max2sat", "--output", path});
    CHECK(sat.code == 0);
    CHECK(sat.out == "k=11\n");
    CHECK(read_profile_file(path).num_alternatives() == 86);

    auto disconnected = temp_file("split.graph", "4 2\n1 2\n3 4\n");
    CHECK(run({"generate", "vc-value-md", "--graph", disconnected}).code == 2);
    CHECK(run({"generate", "vc-value-md"}).code == 2);
    CHECK(run({"generate", "nonsense", "--graph", kData + "/path5.graph"}).code == 2);

    auto ad = run({"generate", "vc-value-ad", "--graph", kData + "/path5.graph"});
    CHECK(ad.out.rfind("# k=2\n", 0) == 0);
    CHECK(run({"generate", "vc-beta-md", "--graph", kData + "/path5.graph"}).code == 0);
    CHECK(run({"generate", "vc-beta-ad", "--graph", kData + "/path5.graph"}).code == 0);
}
