#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "sdirac/errors.hpp"
#include "sdirac/io.hpp"

using namespace sdirac;

TEST_CASE("format_sci is fixed-width scientific") {
    CHECK(format_sci(1.0) == "1.000000000000e+00");
    CHECK(format_sci(-0.5) == "-5.000000000000e-01");
    CHECK(format_sci(2.2360679774997896) == "2.236067977500e+00");
}

TEST_CASE("json writer: ordered keys, parseable, deterministic") {
    auto build = [] {
        JsonWriter w;
        w.begin_object();
        w.key("name");
        w.value_string(R"(a "quoted" name)");
        w.key("value");
        w.value_number(0.1 + 0.2);
        w.key("n");
        w.value_int(42);
        w.key("ok");
        w.value_bool(true);
        w.key("z");
        w.value_complex({1.5, -2.5});
        w.key("list");
        w.begin_array();
        w.value_number(1.0);
        w.value_number(2.0);
        w.end_array();
        w.end_object();
        return w.str();
    };
    const std::string a = build(), b = build();
    CHECK(a == b); // byte-identical on identical input
    const nlohmann::json parsed = nlohmann::json::parse(a);
    CHECK(parsed["n"] == 42);
    CHECK(parsed["ok"] == true);
    CHECK(parsed["z"]["im"] == doctest::Approx(-2.5));
    CHECK(parsed["list"].size() == 2);
    CHECK(parsed["name"] == "a \"quoted\" name");
}

TEST_CASE("half-integer parsing") {
    CHECK(parse_half_integer_doubled("1/2") == 1);
    CHECK(parse_half_integer_doubled("3/2") == 3);
    CHECK(parse_half_integer_doubled("-5/2") == -5);
    CHECK(parse_half_integer_doubled("0.5") == 1);
    CHECK(parse_half_integer_doubled("2") == 4);
    CHECK(parse_half_integer_doubled("2.5") == 5);
    CHECK_THROWS_AS(parse_half_integer_doubled("1/3"), DomainError);
    CHECK_THROWS_AS(parse_half_integer_doubled("0.3"), DomainError);
    CHECK_THROWS_AS(parse_half_integer_doubled("abc"), DomainError);
}

TEST_CASE("complex literal parsing") {
    CHECK(parse_complex("0.3+0.4i") == Complex{0.3, 0.4});
    CHECK(parse_complex("0.3-0.4i") == Complex{0.3, -0.4});
    CHECK(parse_complex("-1.5+2i") == Complex{-1.5, 2.0});
    CHECK(parse_complex("2.5") == Complex{2.5, 0.0});
    CHECK(parse_complex("1e-3+2e-4i") == Complex{1e-3, 2e-4});
    CHECK(parse_complex("i") == Complex{0.0, 1.0});
    CHECK(parse_complex("-i") == Complex{0.0, -1.0});
    CHECK_THROWS_AS(parse_complex("1+2j"), DomainError);
    CHECK_THROWS_AS(parse_complex(""), DomainError);
    // round trip through the emitter
    const Complex z{0.123456789, -9.87654321e-3};
    CHECK(std::abs(parse_complex(format_complex(z)) - z) < 1e-12);
}

TEST_CASE("vec3 parsing") {
    const Vec3 v = parse_vec3("0.5,-1,2e-1");
    CHECK(v[0] == 0.5);
    CHECK(v[1] == -1.0);
    CHECK(v[2] == 0.2);
    CHECK_THROWS_AS(parse_vec3("1,2"), DomainError);
    CHECK_THROWS_AS(parse_vec3("1,2,3,4"), DomainError);
}

TEST_CASE("config file: key=value with comments, errors") {
    const char* path = "test_io_config.tmp";
    {
        std::ofstream out(path);
        out << "# comment line\n"
            << "model = dirac-oscillator\n"
            << "omega=2.5   # trailing comment\n"
            << "\n"
            << "jmax = 5/2\n";
    }
    const auto kv = parse_config_file(path);
    CHECK(kv.at("model") == "dirac-oscillator");
    CHECK(kv.at("omega") == "2.5");
    CHECK(kv.at("jmax") == "5/2");
    std::remove(path);

    {
        std::ofstream out(path);
        out << "not a pair\n";
    }
    CHECK_THROWS_AS(parse_config_file(path), DomainError);
    std::remove(path);
    CHECK_THROWS_AS(parse_config_file("missing_file.cfg"), DomainError);
}

TEST_CASE("csv table: well-formed and reparsable") {
    const std::string csv = csv_table({"r", "re", "im"}, {{format_sci(0.5), format_sci(1.0),
                                                           format_sci(0.0)},
                                                          {format_sci(1.0), format_sci(0.5),
                                                           format_sci(-0.25)}});
    // header + 2 rows, 3 columns each
    int lines = 0, commas = 0;
    for (char c : csv) {
        if (c == '\n') ++lines;
        if (c == ',') ++commas;
    }
    CHECK(lines == 3);
    CHECK(commas == 6);
    CHECK(csv.rfind("r,re,im\n", 0) == 0);
}
