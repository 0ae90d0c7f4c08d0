#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <string>

#include "sincdens/config.hpp"
#include "sincdens/experiments.hpp"

using namespace sincdens;

namespace {

const std::string sample =
    "# comment\n"
    "density.family = gaussian\n"
    "density.weights = 0.5, 0.5\n"
    "smoother.R = 3.0\n"
    "run.seed = 42\n"
    "prior.truncate = true\n";

}  // namespace

TEST_CASE("parse and access") {
    const auto cfg = Config::parse_string(sample);
    CHECK(cfg.get("density.family") == "gaussian");
    CHECK(cfg.get_double("smoother.R") == 3.0);
    CHECK(cfg.get_seed("run.seed") == 42);
    CHECK(cfg.get_bool_or("prior.truncate", false));
    CHECK(cfg.get_bool_or("prior.absent", false) == false);
    CHECK(cfg.get_double_or("grid.step", 0.005) == 0.005);
    const auto ws = cfg.get_double_list("density.weights");
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == 0.5);
    CHECK(cfg.keys().size() == 5);
}

TEST_CASE("round trip is the identity") {
    const auto cfg = Config::parse_string(sample);
    const auto again = Config::parse_string(cfg.serialize());
    CHECK(again.serialize() == cfg.serialize());
    CHECK(again.hash() == cfg.hash());
}

TEST_CASE("hash ignores key order") {
    const auto a = Config::parse_string("x = 1\ny = 2\n");
    const auto b = Config::parse_string("y = 2\nx = 1\n");
    CHECK(a.hash() == b.hash());
    const auto c = Config::parse_string("y = 2\nx = 3\n");
    CHECK(a.hash() != c.hash());
}

TEST_CASE("diagnostics name the key and line") {
    const auto cfg = Config::parse_string(sample, "sample.cfg");
    try {
        cfg.get("missing.key");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find("missing.key") != std::string::npos);
    }
    try {
        (void)Config::parse_string("a = 1\nb = oops\n", "bad.cfg").get_double("b");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("bad.cfg:2") != std::string::npos);
        CHECK(msg.find("'b'") != std::string::npos);
    }
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(Config::parse_string("a = 1\na = 2\n"), config_error);
    CHECK_THROWS_AS(Config::parse_string("no equals sign\n"), config_error);
    CHECK_THROWS_AS(Config::parse_string("= 1\n"), config_error);
    CHECK_THROWS_AS(Config::parse_string("n = 1\n").get_double("n.z"), config_error);
    CHECK_THROWS_AS(Config::parse_string("n = 1.5\n").get_int("n"), config_error);
    CHECK_THROWS_AS(Config::parse_string("n = -3\n").get_seed("n"), config_error);
    CHECK_THROWS_AS(Config::parse_string("b = maybe\n").get_bool_or("b", true), config_error);
    CHECK_THROWS_AS(Config::parse_string("xs = 1, two\n").get_double_list("xs"), config_error);
    CHECK_THROWS_AS(Config::parse_string("ns = 1, -2\n").get_count_list("ns"), config_error);
}

TEST_CASE("unknown keys are rejected") {
    const auto cfg = Config::parse_string("a = 1\nb = 2\n");
    CHECK_THROWS_AS(cfg.require_known({"a"}), config_error);
    CHECK_NOTHROW(cfg.require_known({"a", "b", "c"}));
    CHECK_THROWS_AS(cfg.require_present({"a", "z"}), config_error);
}

TEST_CASE("shipped configs parse and round trip") {
    namespace fs = std::filesystem;
    std::size_t seen = 0;
    for (const auto& entry : fs::directory_iterator(SINCDENS_CONFIGS_DIR)) {
        if (entry.path().extension() != ".cfg") continue;
        ++seen;
        const auto cfg = Config::parse_file(entry.path().string());
        CHECK(!cfg.keys().empty());
        const auto again = Config::parse_string(cfg.serialize());
        CHECK(again.hash() == cfg.hash());
    }
    CHECK(seen >= 5);
}

TEST_CASE("format_value uses 12 significant digits") {
    CHECK(experiments::format_value(0.5) == "0.5");
    CHECK(experiments::format_value(1.0 / 3.0) == "0.333333333333");
    CHECK(experiments::format_value(1e-300) == "1e-300");
}
