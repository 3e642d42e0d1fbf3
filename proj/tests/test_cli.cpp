#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqm/cli.hpp"
#include "hqm/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace hqm;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("phi prints the monomials")
{
    const Run r = run({"phi", "--m", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"m\":2,\"monomials\":[[[0,1],\"1/2\"]]}\n");
    const Run i = run({"phi", "--m", "3", "--method", "interpolate"});
    CHECK(i.code == 0);
    CHECK(Json::parse(i.out)["monomials"] == Json::parse(run({"phi", "--m", "3"}).out)["monomials"]);
}

TEST_CASE("genus one counts")
{
    const Run r = run({"counts", "--m", "2", "--g", "1", "--dmax", "4"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["coefficients"] == Json::array({"1", "3/2", "4/3", "7/4"}));
}

TEST_CASE("oracle and character print exact rationals")
{
    CHECK(run({"oracle", "--m", "2", "--d", "2", "--b", "2"}).out == "\"2\"\n");
    CHECK(run({"character", "--lambda", "3,1", "--m", "2"}).out == "\"2\"\n");
    CHECK(run({"character", "--lambda", "3,1", "--m", "2", "--route", "phi"}).out == "\"2\"\n");
    CHECK(run({"oracle", "--m", "2", "--d", "9", "--b", "2"}).code == 2);
    CHECK(run({"character", "--lambda", "1,3", "--m", "2"}).code == 2);
}

TEST_CASE("fit reports weights and surplus")
{
    const Run r = run({"fit", "--m", "2", "--g", "2", "--dmax", "30"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["weight_breakdown"] == Json{{"6", 3}});
    CHECK(j["surplus_verified"].get<long>() >= 8);
    CHECK(j["monomials"].size() == 3);
    const Run small = run({"fit", "--m", "2", "--g", "2", "--dmax", "10"});
    CHECK(small.code == 2);
    CHECK(small.err.find("underdetermined") != std::string::npos);
    CHECK(run({"fit", "--m", "2", "--g", "3", "--dmax", "40", "--wmax", "8"}).code == 3);
}

TEST_CASE("eisenstein series JSON round-trips")
{
    const Run r = run({"eisenstein", "--k", "4", "--dmax", "20"});
    REQUIRE(r.code == 0);
    const QSeries s = qseries_from_json(Json::parse(r.out));
    CHECK(s == eisenstein(4, 20));
    CHECK(run({"eisenstein", "--k", "8"}).code == 2);
}

TEST_CASE("Bloch-Okounkov commands")
{
    const Run r = run({"bo", "--K", "2", "--dmax", "30"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["expected_weight"] == 6);
    const Run odd = run({"bo", "--K", "1,1", "--dmax", "20"});
    CHECK(odd.code == 0);
    CHECK(Json::parse(odd.out)["vanishes"] == true);
    const Run z = run({"bo-ztest", "--m", "2", "--b", "2", "--dmax", "15"});
    CHECK(z.code == 0);
    CHECK(Json::parse(z.out)["result"] == "PASS");
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"counts", "--m", "2"}).code == 2);
    CHECK(run({"counts", "--m", "1", "--g", "2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic, float-free and can go to a file")
{
    const Run a = run({"counts", "--m", "3", "--g", "3", "--dmax", "12"});
    const Run b = run({"counts", "--m", "3", "--g", "3", "--dmax", "12"});
    CHECK(a.out == b.out);
    CHECK(a.out.find('.') == std::string::npos);
    CHECK(a.out.find("e+") == std::string::npos);
    CHECK(a.out.find("e-") == std::string::npos);
    const std::string path = "cli_output_test.json";
    CHECK(run({"--output", path, "phi", "--m", "4"}).code == 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == run({"phi", "--m", "4"}).out);
    std::remove(path.c_str());
}

TEST_CASE("markdown tables")
{
    const Run r = run({"--markdown", "counts", "--m", "2", "--g", "1", "--dmax", "3"});
    CHECK(r.out.find("| 2 | 3/2 |") != std::string::npos);
}
