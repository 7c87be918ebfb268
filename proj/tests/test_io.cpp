#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmw/io.hpp"

using namespace hmw;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("doubles are printed with seventeen significant digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(0.0) == "0");
    for (double v : {3.141592653589793, -1e-300, 6.02214076e23, 1.0 / 3.0,
                     5e-324, 1.7976931348623157e308}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v); // round-trip exact
        CHECK(s.find(',') == std::string::npos);     // locale-proof
    }
}

TEST_CASE("csv assembly") {
    CsvWriter w({"rho", "value"});
    w.add_row({0.5, 1.0});
    w.add_row({1.5, -0.25});
    CHECK(w.text() == "rho,value\n0.5,1\n1.5,-0.25\n");
    CHECK_THROWS_AS(w.add_row({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(w.add_row({1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(CsvWriter({}), std::invalid_argument);
}

TEST_CASE("csv files are written byte-for-byte") {
    const std::string path = "/tmp/hmw_test_io.csv";
    CsvWriter w({"a", "b"});
    w.add_row({0.1, 2.0});
    w.write_file(path);
    CHECK(slurp(path) == "a,b\n0.10000000000000001,2\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(w.write_file("/nonexistent_dir_hmw/x.csv"), std::runtime_error);
}

TEST_CASE("json files have a stable layout") {
    const std::string path = "/tmp/hmw_test_io.json";
    nlohmann::json j;
    j["zeta"] = 1.5;
    j["alpha"] = "text";
    j["nested"]["k"] = 2;
    write_json_file(path, j);
    const std::string first = slurp(path);
    // keys are emitted in sorted order with two-space indent, newline-terminated
    CHECK(first ==
          "{\n  \"alpha\": \"text\",\n  \"nested\": {\n    \"k\": 2\n  },\n"
          "  \"zeta\": 1.5\n}\n");
    // writing the same document again produces identical bytes
    nlohmann::json k;
    k["nested"]["k"] = 2;
    k["alpha"] = "text";
    k["zeta"] = 1.5;
    write_json_file(path, k);
    CHECK(slurp(path) == first);
    std::remove(path.c_str());
    CHECK_THROWS_AS(write_json_file("/nonexistent_dir_hmw/x.json", j),
                    std::runtime_error);
}
