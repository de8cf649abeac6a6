#include <doctest.h>

#include <sstream>

#include "gridwlp/field.hpp"
#include "gridwlp/report.hpp"

using namespace gridwlp;

namespace {

const PrimeField F(kDefaultPrime);

std::vector<std::string> csv_lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("grid specs") {
    const auto a = parse_grid_spec("u=1,2,3;v=4,5,6,7");
    CHECK(a.u == std::vector<std::int64_t>{1, 2, 3});
    CHECK(a.b() == 4);
    CHECK(a.prime == 0);
    const auto b = parse_grid_spec(R"({"a":3,"b":4,"u":[1,2,3],"v":[4,5,6,7],"prime":65521})");
    CHECK(b.u == a.u);
    CHECK(b.v == a.v);
    CHECK(b.prime == 65521);
    CHECK(parse_grid_spec(to_json(b).dump()).v == b.v);
    CHECK(parse_grid_spec(" u = -1, 2 ; v = 3 ").u == std::vector<std::int64_t>{-1, 2});

    CHECK_THROWS_AS(parse_grid_spec("u=1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid_spec("u=1,x;v=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid_spec("w=1;v=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid_spec(R"({"a":2,"u":[1,2,3],"v":[1]})"), std::invalid_argument);
    CHECK_THROWS(parse_grid_spec(R"({"u":[1,2],)"));
}

TEST_CASE("formats") {
    CHECK(parse_format("table") == OutputFormat::Table);
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("wlp renderings agree") {
    auto r = wlp_test(F, seeded_grid(F, 3, 3, RandomSeed{}), 3, 3, RandomSeed{});
    const Json j = to_json(r);
    CHECK(j["verdict"] == false);
    CHECK(j["failing"] == Json::array({3}));
    CHECK(j["grid"]["a"] == 3);
    CHECK(j["d"] == 3);

    const auto lines = csv_lines(to_csv(r));
    REQUIRE(lines.size() == r.degrees.size() + 1);
    CHECK(lines[0] == "t,dimFrom,dimTo,rank,ker,coker,maximal");
    for (std::size_t i = 0; i < r.degrees.size(); ++i) {
        const auto& m = j["degrees"][i];
        std::ostringstream row;
        row << m["t"].get<int>() << ',' << m["dimFrom"].get<long long>() << ',' << m["dimTo"].get<long long>() << ','
            << m["rank"].get<long long>() << ',' << m["ker"].get<long long>() << ',' << m["coker"].get<long long>()
            << ',' << (m["maximal"].get<bool>() ? "true" : "false");
        CHECK(lines[i + 1] == row.str());
    }

    const auto table = to_table(r);
    CHECK(table.find("WLP fails (failing degrees 3)") != std::string::npos);
    CHECK(table.find("3x3 grid") == 0);
}

TEST_CASE("probe and bx renderings") {
    const auto g = seeded_grid(F, 3, 3, RandomSeed{});
    const auto p = non_lefschetz_probe(F, g, 4, Locus::chord(0, 1, 1, 0), 3, RandomSeed{});
    const Json j = to_json(p);
    CHECK(j["inLocus"] == true);
    CHECK(j["locus"] == p.locus);
    CHECK(csv_lines(to_csv(p)).size() == p.degrees.size() + 1);
    CHECK(to_table(p).find("in the non-Lefschetz locus") != std::string::npos);

    const auto bx = bx_sequence(F, 3, 3, 6, 3, RandomSeed{});
    CHECK(to_json(bx).dump() == R"({"a":3,"b":3,"dMax":6,"bits":"110101"})");
}

TEST_CASE("hilbert renderings") {
    const auto q = powers_quotient(F, seeded_grid(F, 3, 3, RandomSeed{}), 2);
    const auto h = hilbert_table(*q);
    const Json j = to_json(h);
    CHECK(j["kind"] == "quotient");
    REQUIRE(j["rows"].size() == h.dims.size());
    CHECK(j["rows"][0]["dim"] == 1);
    CHECK(j["rows"][1]["delta"] == 3);
    CHECK(to_table(h).find("delta") != std::string::npos);
}

TEST_CASE("renderings are byte-identical across reruns") {
    const auto run = [] {
        const auto g = seeded_grid(F, 3, 4, RandomSeed{99});
        const auto r = wlp_test(F, g, 4, 3, RandomSeed{99});
        return to_json(r).dump() + to_csv(r) + to_table(r);
    };
    CHECK(run() == run());
}
