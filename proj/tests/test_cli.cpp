#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "mexcl/errors.hpp"
#include "mexcl/json_io.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace mexcl;
using io::Json;

namespace {

const std::string cli = MEXCL_CLI;
const std::string data = MEXCL_DATA;

std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/mexcl_test_" + name;
}

int run(const std::string& args) {
  std::string cmd = cli + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Json run_json(const std::string& args, int& code) {
  auto out = temp_path("report.json");
  code = run("--json-out " + out + " " + args);
  auto j = io::read_file(out);
  std::remove(out.c_str());
  return j;
}

void check_monoid_round_trip(const MonoidExpr& s, const Window& w) {
  auto back = io::monoid_from_json(io::parse_text(io::monoid_to_json(s).dump()), s.group());
  CHECK_FALSE(first_difference(s, back, w));
  CHECK(io::monoid_to_json(back).dump() == io::monoid_to_json(s).dump());
}

}  // namespace

TEST_CASE("group and element round trips") {
  auto g = catalog::z_plus_zsqrt2();
  auto j = io::group_to_json(*g);
  CHECK(j.dump() == R"({"components":[{"kind":"Z"},{"d":2,"kind":"Zsqrt"}]})");
  CHECK(same_group(io::group_from_json(j), g));
  GroupElement x(g, {Coord(3), Coord(Rat(-1), Int(2))});
  CHECK(io::element_from_json(io::element_to_json(x), g) == x);
  auto q = make_group({RankOneSpec::Q()});
  GroupElement r(q, {Coord(Rat(-7, 3))});
  CHECK(io::element_to_json(r).dump() == R"(["-7/3"])");
  CHECK(io::element_from_json(io::element_to_json(r), q) == r);
  CHECK_THROWS(io::element_from_json(Json::parse("[1]"), g));
  CHECK_THROWS(io::element_from_json(Json::parse(R"([1, {"p": "1/2", "q": 0}])"), g));
  CHECK_THROWS(io::group_from_json(Json::parse(R"({"components":[{"kind":"R"}]})")));
}

TEST_CASE("monoid round trips") {
  auto w = catalog::plane_window(-1, 3, -6, 6);
  for (const auto& s : {catalog::plane_chain(), catalog::plane_dual(), catalog::plane_explicit(),
                        catalog::plane_chain_by_shifts(3), monoids::toggle(catalog::plane_chain(), GroupElement::of(catalog::integer_plane(), {1, 0})),
                        monoids::points(catalog::integer_plane(), {GroupElement::of(catalog::integer_plane(), {0, 2})}),
                        monoids::root_closure(catalog::plane_dual(), catalog::plane_window(0, 2, -3, 3), 3)})
    check_monoid_round_trip(s, w);
  for (const auto& s : {catalog::gap(7), catalog::semigroup23(), monoids::half_line(GroupElement::of(catalog::integers(), {3}), 1)})
    check_monoid_round_trip(s, catalog::integer_window(-2, 20));
  check_monoid_round_trip(catalog::quadrant_lift(), Window::cube(catalog::z_plus_zsqrt2(), -3, 3));
  auto stratum = monoids::slice(catalog::plane_chain());
  check_monoid_round_trip(stratum, catalog::integer_window(-5, 5));
}

TEST_CASE("series, ring and rational function round trips") {
  std::mt19937_64 rng(64);
  for (int k = 0; k < 50; ++k) {
    auto f = support::random_plane_series(rng, 8);
    CHECK(io::series_from_json(io::series_to_json(f), f.group()) == f);
  }
  auto g = catalog::integer_plane();
  for (const auto& r : {rings::monomial(catalog::plane_chain()), rings::full_valuation(g), rings::localized(g, 1),
                        rings::pullback(rings::localized(g, 1), rings::monomial(catalog::gap(5)))}) {
    auto back = io::ring_from_json(io::ring_to_json(*r), g);
    CHECK(io::ring_to_json(*back).dump() == io::ring_to_json(*r).dump());
  }
  auto phi = linear_fraction(GroupElement::of(g, {1, -2}));
  auto back = io::ratfunc_from_json(io::ratfunc_to_json(phi), g);
  CHECK(io::ratfunc_to_json(back).dump() == io::ratfunc_to_json(phi).dump());
  auto v = MonomialValuation(g, {1, 0}, 1);
  CHECK(io::valuation_to_json(io::valuation_from_json(io::valuation_to_json(v), g)).dump() == io::valuation_to_json(v).dump());
}

TEST_CASE("window strings") {
  auto w = io::parse_window("0:3,-6:6", catalog::integer_plane());
  CHECK(w == catalog::plane_window(0, 3, -6, 6));
  CHECK(io::parse_window("-2:2", catalog::integer_plane()) == Window::cube(catalog::integer_plane(), -2, 2));
  auto q = io::parse_window("0:1/-2:2", make_group({RankOneSpec::Zsqrt(2)}));
  CHECK(q.bounds()[0].qlo == -2);
  CHECK(q.bounds()[0].hi == 1);
  auto rational = io::parse_window("0:1@3", make_group({RankOneSpec::Q()}));
  CHECK(rational.size() == 4);
  CHECK_THROWS_AS(io::parse_window("0:3,1:2,4:5", catalog::integer_plane()), ParseError);
  CHECK_THROWS_AS(io::parse_window("zero", catalog::integers()), ParseError);
}

TEST_CASE("malformed JSON reports the byte offset") {
  CHECK_THROWS_WITH_AS(io::parse_text("{\"a\": [1, 2", "doc"), doctest::Contains("malformed JSON at byte"), ParseError);
  CHECK_THROWS_AS(io::monoid_from_json(Json::parse(R"({"kind":"Nope"})"), catalog::integers()), ParseError);
}

TEST_CASE("digest is stable") {
  CHECK(io::digest("") == "cbf29ce484222325");
  CHECK(io::digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("check-maxexcl exit codes") {
  CHECK(run("check-maxexcl " + data + "/gap5.json --a '[5]'") == 0);
  CHECK(run("check-maxexcl " + data + "/plane_chain.json --a '[1,0]'") == 0);
  CHECK(run("check-maxexcl " + data + "/plane_chain_explicit.json --a '[1,0]'") == 3);
  CHECK(run("check-maxexcl " + data + "/plane_chain.json --a '[0,1]'") == 64);
  CHECK(run("check-maxexcl " + data + "/malformed.json --a '[5]'") == 64);
  CHECK(run("check-maxexcl " + data + "/gap5.json --a '[4]'") == 64);
  CHECK(run("check-maxexcl " + data + "/missing.json --a '[5]'") == 64);
  CHECK(run("no-such-command") == 64);
}

TEST_CASE("refutation report carries the witness") {
  auto spec = temp_path("all_but.json");
  std::ofstream(spec) << R"({"group":{"components":[{"kind":"Z"}]},"monoid":{"kind":"Region","constraints":[{"op":"!=","value":5}]}})";
  int code = 0;
  auto r = run_json("check-maxexcl " + spec + " --a '[5]'", code);
  std::remove(spec.c_str());
  CHECK(code == 2);
  CHECK(r["verdict"] == "refuted");
  CHECK(r["witness"] == Json::parse("[1]"));
  CHECK(r["exit_code"] == 2);
  CHECK_FALSE(r.contains("wall_time_ms"));
}

TEST_CASE("construct-s1") {
  auto out = temp_path("constructed.json");
  CHECK(run("construct-s1 --a '[1,0]' " + data + "/quadrant_components.json --out " + out) == 0);
  CHECK(run("check-maxexcl " + out + " --a '[1,{\"p\":0,\"q\":0}]'") == 0);
  auto spec = io::read_file(out);
  auto s = io::monoid_from_json(spec.at("monoid"), io::group_from_json(spec.at("group")));
  CHECK_FALSE(first_difference(s, catalog::quadrant_lift(), Window::cube(catalog::z_plus_zsqrt2(), -4, 4)));
  std::remove(out.c_str());

  auto empty = temp_path("empty_components.json");
  std::ofstream(empty) << R"({"group":{"components":[{"kind":"Z"},{"kind":"Z"}]},"components":[{"kind":"Empty"}]})";
  CHECK(run("construct-s1 --a '[1,0]' " + empty) == 0);
  std::remove(empty.c_str());

  int code = 0;
  auto bad = run_json("construct-s1 --a '[1,0]' " + data + "/bad_components.json", code);
  CHECK(code == 2);
  CHECK(bad["witness"]["g"] == Json::parse("[0,1]"));
}

TEST_CASE("closure, member, series and kron-member") {
  int code = 0;
  auto c = run_json("--window 0:3,-6:6 --nmax 6 closure " + data + "/plane_dual.json", code);
  CHECK(code == 0);
  CHECK(c["added_in_window"] == Json::parse("[[1,0]]"));

  CHECK(run("member " + data + "/gap5.json --g '[4]'") == 0);
  CHECK(run("member " + data + "/gap5.json --g '[2]'") == 2);

  auto inv = run_json("series " + data + "/unit_series.json --op invert --trunc '[10]'", code);
  CHECK(code == 0);
  CHECK(inv["result"]["terms"].size() == 4);
  auto lex = run_json("series " + data + "/lex_unit.json --op invert --trunc '[1,0]'", code);
  CHECK(code == 3);
  CHECK(lex["error"].get<std::string>().find("infinite expansion") != std::string::npos);
  auto f7 = run_json("--field F_7 series " + data + "/unit_series.json --op invert --trunc '[7]'", code);
  CHECK(code == 0);
  CHECK(f7["result"]["field"] == "F_7");

  auto k = run_json("kron-member " + data + "/linear_fraction.json", code);
  CHECK(code == 3);
  CHECK(k["in_family"] == true);
  CHECK(k["status"] == "not_certified");
}

TEST_CASE("reports are byte-identical across runs") {
  for (const std::string& args : {"check-maxexcl " + data + "/gap5.json --a '[5]'",
                                  "--window 0:3,-6:6 closure " + data + "/plane_dual.json", std::string("repro ex38")}) {
    int a = 0, b = 0;
    auto x = run_json(args, a).dump(), y = run_json(args, b).dump();
    CHECK(a == b);
    CHECK(x == y);
  }
  int code = 0;
  auto timed = run_json("--timing member " + data + "/gap5.json --g '[4]'", code);
  CHECK(timed.contains("wall_time_ms"));
}

TEST_CASE("repro") {
  CHECK(run("repro all") == 0);
  CHECK(run("repro nope") == 64);
}
