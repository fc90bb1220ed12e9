#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kk/oracle.hpp"
#include "kk/serialize.hpp"

#include <cstdio>
#include <sstream>
#include <string>

using namespace kk;

namespace {

std::string dump_pointset(const PointSet& ps) {
  std::ostringstream os;
  write_pointset(os, ps);
  return os.str();
}

PointSet parse_pointset(const std::string& bytes) {
  std::istringstream is(bytes);
  return read_pointset(is);
}

const std::string kPointsetK1 =
    "kk-pointset v1 k=1 m=4 w=6 n=3\n"
    "1e\n"
    "2d\n"
    "33\n";

}  // namespace

TEST_CASE("pointset files round-trip bytes and structure, k = 1..4") {
  for (std::uint64_t k = 1; k <= 4; ++k) {
    const PointSet original = enumerate_points(make_params(k));
    const std::string bytes = dump_pointset(original);
    const PointSet reread = parse_pointset(bytes);
    CHECK(reread.params.k == k);
    CHECK(reread.blocks == original.blocks);
    CHECK(reread.points == original.points);
    CHECK(dump_pointset(reread) == bytes);
  }
}

TEST_CASE("the k=1 file is byte-for-byte pinned") {
  CHECK(dump_pointset(enumerate_points(make_params(1))) == kPointsetK1);
}

TEST_CASE("file round trip through the filesystem") {
  const std::string path = "kk_test_pointset_k2.txt";
  const PointSet original = enumerate_points(make_params(2));
  write_pointset_file(path, original);
  const PointSet reread = read_pointset_file(path);
  CHECK(reread.points == original.points);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_pointset_file(path), PointsetError);
}

TEST_CASE("write_pointset rejects inconsistent inputs") {
  PointSet ps = enumerate_points(make_params(1));
  ps.points.pop_back();
  CHECK_THROWS_AS(dump_pointset(ps), std::invalid_argument);
}

TEST_CASE("every corruption of a valid file is rejected with a reason") {
  auto mutated = [](const std::string& from, const std::string& to) {
    std::string bytes = kPointsetK1;
    const auto at = bytes.find(from);
    REQUIRE(at != std::string::npos);
    bytes.replace(at, from.size(), to);
    return bytes;
  };

  // Wrong popcount (1f has five bits, a point must have 4k^2 = 4).
  CHECK_THROWS_WITH(parse_pointset(mutated("1e\n", "1f\n")),
                    doctest::Contains("popcount"));
  // Right popcount but not the cross set of any block.
  CHECK_THROWS_WITH(parse_pointset(mutated("1e\n", "0f\n")),
                    doctest::Contains("not the cross set"));
  // Out of order.
  CHECK_THROWS_WITH(parse_pointset(mutated("1e\n2d\n", "2d\n1e\n")),
                    doctest::Contains("out of enumeration order"));
  // Uppercase hex is not accepted.
  CHECK_THROWS_WITH(parse_pointset(mutated("1e\n", "1E\n")),
                    doctest::Contains("invalid hex digit"));
  // Wrong line width.
  CHECK_THROWS_WITH(parse_pointset(mutated("1e\n", "01e\n")),
                    doctest::Contains("expected 2 hex digits"));
  // A bit beyond wSize = 6 (0x7e sets bit 6).
  CHECK_THROWS_WITH(parse_pointset(mutated("1e\n", "7e\n")),
                    doctest::Contains("beyond wSize"));
  // Truncation.
  CHECK_THROWS_WITH(parse_pointset(mutated("33\n", "")),
                    doctest::Contains("unexpected end of file"));
  // Trailing garbage; blank trailing lines stay legal.
  CHECK_THROWS_WITH(parse_pointset(kPointsetK1 + "ff\n"),
                    doctest::Contains("trailing data"));
  CHECK_NOTHROW(parse_pointset(kPointsetK1 + "\n\n"));

  // Header corruption.
  CHECK_THROWS_WITH(parse_pointset(mutated("kk-pointset", "xx-pointset")),
                    doctest::Contains("bad header"));
  CHECK_THROWS_WITH(parse_pointset(mutated(" v1 ", " v2 ")),
                    doctest::Contains("bad header"));
  CHECK_THROWS_WITH(parse_pointset(mutated("m=4", "m=8")),
                    doctest::Contains("inconsistent"));
  CHECK_THROWS_WITH(parse_pointset(mutated("w=6", "w=7")),
                    doctest::Contains("inconsistent"));
  CHECK_THROWS_WITH(parse_pointset(mutated("n=3", "n=4")),
                    doctest::Contains("C(m,2k)/2"));
  CHECK_THROWS_WITH(parse_pointset(mutated("k=1", "k=0")),
                    doctest::Contains("bad k"));
  CHECK_THROWS_WITH(parse_pointset(mutated("k=1", "k=x")),
                    doctest::Contains("malformed header field"));
  CHECK_THROWS_WITH(parse_pointset("kk-pointset v1 k=17 m=68 w=2278 n=1\n"),
                    doctest::Contains("too large"));
  CHECK_THROWS_WITH(parse_pointset(""), doctest::Contains("missing header"));
}

TEST_CASE("the k=13 range report renders to a pinned JSON document") {
  const std::string expected =
      "{\n"
      "  \"type\": \"range-report\",\n"
      "  \"k\": \"13\",\n"
      "  \"d\": \"1325\",\n"
      "  \"q\": \"898101/575\",\n"
      "  \"is-counterexample\": true,\n"
      "  \"d-low\": \"1325\",\n"
      "  \"d-high\": \"1560\",\n"
      "  \"warnings\": []\n"
      "}\n";
  CHECK(render_json(to_json(counterexample_range(13))) == expected);
  // Determinism: rendering twice gives identical bytes.
  CHECK(render_json(to_json(counterexample_range(13))) == expected);
}

TEST_CASE("JSON fields mirror the structs, with every number a string") {
  const Json r11 = to_json(counterexample_range(11));
  CHECK(r11["is-counterexample"] == false);
  CHECK(r11["d-low"].is_null());
  CHECK(r11["d-high"].is_null());
  CHECK(r11["warnings"].empty());  // 11 is prime, so the premiss holds
  REQUIRE(to_json(counterexample_range(12))["warnings"].size() == 1);

  const Json q13 = to_json(q_exact(13));
  CHECK(q13["q"] == "898101/575");
  CHECK(q13["decimal"] == "1561.91");
  REQUIRE(q13["formulas"].size() == 4);
  for (const char* name : kQFormulaNames) {
    CHECK(q13["formulas"][name] == "898101/575");
  }

  const Json p13 = to_json(make_params(13));
  CHECK(p13["m"] == "52");
  CHECK(p13["w-size"] == "1326");
  CHECK(p13["d"] == "1325");
  CHECK(p13["prime-power"]["base"] == "13");
  CHECK(p13["prime-power"]["exponent"] == "1");
  CHECK(to_json(make_params(16))["prime-power"]["base"] == "2");
  CHECK(to_json(make_params(16))["prime-power"]["exponent"] == "4");
  CHECK(to_json(make_params(12))["prime-power"].is_null());

  const Json plan = to_json(plan_cover(1325));
  CHECK(plan["chosen-k"] == "13");
  CHECK(plan["certifying-range"]["low"] == "1325");
  CHECK(plan["certifying-range"]["high"] == "1560");
  const Json no_plan = to_json(plan_cover(1000));
  CHECK(no_plan["chosen-k"].is_null());
  CHECK(no_plan["certifying-range"].is_null());

  const Json chain = to_json(verify_chain());
  CHECK(chain["pass"] == true);
  CHECK(chain["ks"][0] == "16");
  CHECK(chain["links"][0]["certificate"] == "q-exact");
  CHECK(chain["links"][2]["certificate"] == "lower-bound");
  CHECK(chain["ratio-checks"][0]["increased"] == true);

  const Json spectrum = spectrum_to_json(2, spectrum_analytic(2));
  CHECK(spectrum["total"] == "595");
  REQUIRE(spectrum["entries"].size() == 2);
  CHECK(spectrum["entries"][1]["p-low"] == "2");
  CHECK(spectrum["entries"][1]["dist-sq"] == "16");
  CHECK(spectrum["entries"][1]["count"] == "315");
}

TEST_CASE("verification reports serialize without timing noise") {
  VerificationReport rep;
  rep.suite = "demo";
  rep.k = 2;
  rep.pass = true;
  rep.counters.emplace_back("z-first", "1");
  rep.counters.emplace_back("a-second", "2");
  rep.elapsed_seconds = 123.0;

  const Json j = to_json(rep);
  CHECK_FALSE(j.contains("elapsed"));
  CHECK_FALSE(j.contains("elapsed-seconds"));

  // Counter order is insertion order, not alphabetical.
  const std::string text = render_json(j);
  CHECK(text.find("z-first") < text.find("a-second"));
  CHECK(text.find("elapsed") == std::string::npos);

  const Json real = to_json(verify_identities(1));
  CHECK(real["pass"] == true);
  CHECK(real["counters"]["ordered-pairs"] == "36");
}
