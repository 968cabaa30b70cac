#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rellich/config.hpp"
#include "rellich/errors.hpp"
#include "rellich/report.hpp"
#include "rellich/scan.hpp"

using namespace rellich;

TEST_SUITE("config_report") {
  TEST_CASE("config parsing") {
    std::istringstream in("# comment\nL = 50\nN=2000  # inline\n\nk_max = 2\ntol_bound = 1e-4\n");
    const Config c = parse_config(in);
    CHECK(c.L == 50.0);
    CHECK(c.N == 2000);
    CHECK(c.k_max == 2);
    CHECK(c.tol_bound == 1e-4);
    CHECK(c.m_max == 8);

    Config d;
    CHECK_THROWS_AS(d.set("bogus", "1"), InvalidArgument);
    CHECK_THROWS_AS(d.set("N", "abc"), InvalidArgument);
    CHECK_THROWS_AS(d.set("N", "2"), InvalidArgument);
    CHECK_THROWS_AS(d.set("L", "-1"), InvalidArgument);
    std::istringstream bad("L 50\n");
    CHECK_THROWS_AS(parse_config(bad), InvalidArgument);
  }

  TEST_CASE("config precedence: explicit path, then environment, then defaults") {
    const std::string a = "rellich_cfg_a.txt", b = "rellich_cfg_b.txt";
    std::ofstream(a) << "L = 30\n";
    std::ofstream(b) << "L = 40\n";
    unsetenv(kConfigEnv);
    CHECK(resolve_config(std::nullopt).L == 100.0);
    setenv(kConfigEnv, b.c_str(), 1);
    CHECK(resolve_config(std::nullopt).L == 40.0);
    CHECK(resolve_config(a).L == 30.0);
    unsetenv(kConfigEnv);
    std::remove(a.c_str());
    std::remove(b.c_str());
    CHECK_THROWS_AS(load_config("/nonexistent/cfg"), InvalidArgument);
  }

  TEST_CASE("seventeen-digit numbers round-trip") {
    for (double v : {0.1, 1.0 / 3.0, 25.0 / 36.0, -1e-300, 6.02214076e23, 0.0}) {
      CHECK(std::strtod(format_real(v).c_str(), nullptr) == v);
    }
    CHECK(format_real(0.0) == "0");
    CHECK(json_real(std::nullopt) == "null");
    CHECK(json_real(NAN) == "null");
    CHECK(json_string("a\"b\n") == "\"a\\\"b\\n\"");
  }

  TEST_CASE("formats") {
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK(parse_format("table") == OutputFormat::Table);
    CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
  }

  TEST_CASE("constant summary renders as valid json") {
    const ConstantSummary s = summarize_constant(3, Rational(0), full_sphere_spectrum(3, 16));
    CHECK(s.M_exact == "25/36");
    CHECK(s.delta_rad_exact == "9/4");
    const auto j = nlohmann::json::parse(render_constant(s, OutputFormat::Json));
    CHECK(j["M"].get<double>() == 25.0 / 36.0);
    CHECK(render_constant(s, OutputFormat::Json) == render_constant(s, OutputFormat::Json));
  }

  TEST_CASE("scan output") {
    Config c;
    const auto alphas = alpha_grid(Rational(-1), Rational(1), parse_rational("0.5"));
    REQUIRE(alphas.size() == 5);
    CHECK(alphas[1] == Rational(-1, 2));
    const ScanResult r = run_scan(3, alphas, full_sphere_spectrum(3, 16), false, c);
    CHECK_FALSE(r.error.has_value());
    const std::string csv = render_scan(r.rows, OutputFormat::Csv);
    CHECK(csv.rfind("alpha,delta_rad,M,numeric_delta,regime,certified\n", 0) == 0);
    CHECK(csv == render_scan(run_scan(3, alphas, full_sphere_spectrum(3, 16), false, c).rows,
                             OutputFormat::Csv));
    const auto j = nlohmann::json::parse(render_scan(r.rows, OutputFormat::Json));
    REQUIRE(j.size() == 5);
    CHECK(j[1]["alpha"].get<double>() == -0.5);
    CHECK_THROWS_AS(alpha_grid(Rational(0), Rational(1), Rational(0)), InvalidArgument);
    CHECK_THROWS_AS(alpha_grid(Rational(1), Rational(0), Rational(1)), InvalidArgument);
  }

  TEST_CASE("spectrum json") {
    const auto j = nlohmann::json::parse(render_spectrum(full_sphere_spectrum(3, 4), 4, OutputFormat::Json));
    CHECK(j.dump().find("12") != std::string::npos);
  }
}
