#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qsteer/state_io.hpp"
#include "test_support.hpp"

using namespace qsteer;
using namespace qsteer_test;

namespace {

std::string identity_json() {
    return R"({"convention": "spin",
               "rows": [[[0.25,0],[0,0],[0,0],[0,0]],
                        [[0,0],[0.25,0],[0,0],[0,0]],
                        [[0,0],[0,0],[0.25,0],[0,0]],
                        [[0,0],[0,0],[0,0],[0.25,0]]]})";
}

std::string position_of(const std::string& text) {
    try {
        parse_density_json(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    return "";
}

} // namespace

TEST_CASE("well-formed state parses") {
    const auto rho = parse_density_json(identity_json());
    CHECK(rho.convention() == IndexConvention::SpinProjection);
    for (int i = 0; i < 4; ++i) CHECK(rho.at(i, i) == Complex{0.25, 0.0});
    CHECK(rho.at(0, 1) == Complex{});
}

TEST_CASE("two_qubit convention is recognized") {
    std::string text = identity_json();
    text.replace(text.find("spin"), 4, "two_qubit");
    CHECK(parse_density_json(text).convention() == IndexConvention::TwoQubit);
}

TEST_CASE("shape errors carry the offending position") {
    CHECK(position_of(R"([1, 2])") == "$");
    CHECK(position_of(R"({"rows": []})") == "$.convention");
    CHECK(position_of(R"({"convention": 3, "rows": []})") == "$.convention");
    CHECK(position_of(R"({"convention": "spooky", "rows": []})") == "$.convention");
    CHECK(position_of(R"({"convention": "spin"})") == "$.rows");
    CHECK(position_of(R"({"convention": "spin", "rows": [[], [], []]})") == "$.rows");

    std::string three_entries = identity_json();
    three_entries.replace(three_entries.find(",[0,0],[0,0],[0,0]]"), 19, "]");
    CHECK(position_of(three_entries) == "$.rows[0]");

    std::string bad_pair = identity_json();
    bad_pair.replace(bad_pair.find("[0.25,0]"), 8, "[0.25]");
    CHECK(position_of(bad_pair) == "$.rows[0][0]");

    std::string bad_number = identity_json();
    bad_number.replace(bad_number.find("[0.25,0]"), 8, "[0.25,\"x\"]");
    CHECK(position_of(bad_number) == "$.rows[0][0][1]");
}

TEST_CASE("syntax errors report the byte offset") {
    try {
        parse_density_json("{\"convention\": \"spin\", ");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position().rfind("byte ", 0) == 0);
    }
}

TEST_CASE("write/parse round trip preserves every entry bit-exactly") {
    auto g = make_rng(31337);
    for (int rep = 0; rep < 20; ++rep) {
        const auto rho = random_density(g);
        const auto back = parse_density_json(density_to_json(rho));
        CHECK(back.convention() == rho.convention());
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(back.at(i, j) == rho.at(i, j));
    }
}

TEST_CASE("file io") {
    const auto dir = std::filesystem::temp_directory_path() / "qsteer_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "state.json";

    auto g = make_rng(555);
    const auto rho = random_density(g);
    write_density_json(path, rho);
    const auto back = read_density_json(path);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(back.at(i, j) == rho.at(i, j));

    CHECK_THROWS_AS(read_density_json(dir / "missing.json"), IoError);
    CHECK_THROWS_AS(write_density_json(dir / "no_dir" / "x.json", rho), IoError);
    std::filesystem::remove_all(dir);
}
