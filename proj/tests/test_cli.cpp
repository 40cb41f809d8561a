#include "doctest.h"

#include <sstream>

#include "cli.hpp"
#include "howe/errors.hpp"
#include "howe/json_io.hpp"
#include "howe/spec_grammar.hpp"

using namespace howe;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("grammar: partitions") {
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("2,1,1") == Partition{2, 1, 1});
    CHECK(parse_partition(" 3 , 1 ") == Partition{3, 1});
    CHECK_THROWS_AS(parse_partition("1,2"), ValidationError);
    CHECK_THROWS_AS(parse_partition("a"), ValidationError);
    CHECK_THROWS_AS(parse_partition("2,,1"), ValidationError);
}

TEST_CASE("grammar: orbits") {
    const auto s = parse_orbits("0^2,4^1", 3, 1);
    CHECK(s.dimension() == 3);
    CHECK(s.one_multiplicity() == 2);
    CHECK(parse_orbits("1", 3, 1).dimension() == 2);  // {1,5}
    CHECK_THROWS_AS(parse_orbits("z", 3, 1), ValidationError);
    CHECK_THROWS_AS(parse_orbits("1,5", 3, 1), ValidationError);  // same orbit twice
    CHECK_THROWS_AS(parse_orbits("4^0", 3, 1), ValidationError);
}

TEST_CASE("grammar: GL parts") {
    const auto g = parse_gl_part("1,2:sigma,1:1");
    REQUIRE(g.size() == 3);
    CHECK(g[0].is_trivial());
    CHECK(g[1] == GlCuspidal{2, "sigma"});
    CHECK(g[2].is_trivial());
    CHECK(parse_gl_part("").empty());
    CHECK_THROWS_AS(parse_gl_part("2:1"), ValidationError);
    CHECK_THROWS_AS(parse_gl_part("0:x"), ValidationError);
}

TEST_CASE("cli omega") {
    const auto r = call({"omega", "--m", "1", "--mp", "1", "--k", "0"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["entries"].size() == 3);
    CHECK(j["metadata"]["formula"] == "u1");
    CHECK(j["row_labels"][0] == json::parse("[[1],[]]"));

    const auto text = call({"--text", "omega", "--m", "1", "--mp", "1", "--k", "0"});
    CHECK(text.code == 0);
    CHECK(text.out.find("((1),())") != std::string::npos);
}

TEST_CASE("cli json round trip is byte-identical") {
    const auto r = call({"omega", "--m", "3", "--mp", "2", "--k", "1", "--parity-p", "1"});
    REQUIRE(r.code == 0);
    CHECK(dump(json::parse(r.out)) == r.out);

    const auto c = call({"centralizer", "--n", "5", "--orbits", "0^1,4^2,1"});
    REQUIRE(c.code == 0);
    CHECK(dump(json::parse(c.out)) == c.out);

    const auto s = parse_orbits("0^1,4^2,1", 3, 1);
    CHECK(dump(json(json(s).get<SemisimpleDescriptor>())) == dump(json(s)));
}

TEST_CASE("cli theta below first occurrence") {
    const auto r = call({"theta", "--m", "1", "--mp", "0", "--k", "0", "--beta", "1"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["zero"] == true);
    CHECK(j["images"].empty());
}

TEST_CASE("cli extremal and transport") {
    const auto e = call({"extremal", "--m", "1", "--mp", "1", "--alpha", "1"});
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["max"]["label"] == json::parse("[[1],[]]"));

    const auto t = call({"transport", "--support", "1,1,1:s", "--m", "3", "--mp", "1", "--k", "0"});
    REQUIRE(t.code == 0);
    CHECK(json::parse(t.out)["support"]["gl_part"].size() == 1);

    const auto under = call({"transport", "--support", "1:s", "--m", "1", "--mp", "0", "--k", "0"});
    CHECK(under.code == 1);
    CHECK(!under.err.empty());
}

TEST_CASE("cli omega-full") {
    const auto r = call({"omega-full", "--orbits", "4^2,0^2", "--m", "2", "--mp", "2"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["decomposition"]["l"] == 1);
    CHECK(j["decomposition"]["unipotent_table"]["entries"].size() == 3);
}

TEST_CASE("cli errors") {
    CHECK(call({}).code == 1);
    CHECK(call({"omega", "--m", "1"}).code == 1);
    CHECK(call({"omega", "--m", "0", "--mp", "0", "--k", "2"}).code == 1);
    CHECK(call({"centralizer", "--n", "1", "--orbits", "z"}).code == 1);
    CHECK(call({"--sgn", "nonsense", "omega", "--m", "0", "--mp", "0", "--k", "0"}).code == 1);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("cli verify") {
    const auto r = call({"--text", "verify", "--max-rank", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all properties passed") != std::string::npos);
    const auto j = json::parse(call({"verify", "--max-rank", "2"}).out);
    CHECK(j["all_passed"] == true);
}
