#include "support.hpp"

#include <sstream>

#include "acw/io.hpp"
#include "acw/random.hpp"
#include "acw/scenario.hpp"

using namespace acw;
using namespace acw::test;

TEST_SUITE("io") {
  TEST_CASE("groups round trip") {
    const auto g = group_from_json(json::parse(R"({"moduli": [4, 6, 5]})"));
    CHECK(g.order() == 120);
    CHECK(group_from_json(group_to_json(g)) == g);
    CHECK(error_kind_of([] { group_from_json(json::parse(R"({"mods": [4]})")); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { group_from_json(json::parse(R"({"moduli": [4.5]})")); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([] { group_from_json(json::parse(R"({"moduli": [0]})")); }) == ErrorKind::ZeroModulus);
    CHECK(error_kind_of([] { read_group_file("/nonexistent/group.json"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("elements and sets") {
    const auto g = make_group({4, 6});
    CHECK(parse_element(g, "3, 5") == el(g, {3, 5}));
    CHECK(parse_element(g, "-1,7") == el(g, {3, 1}));
    CHECK(format_element(g, el(g, {2, 4})) == "2,4");
    CHECK(error_kind_of([&] { parse_element(g, "1"); }) == ErrorKind::DimensionMismatch);
    CHECK(error_kind_of([&] { parse_element(g, "1,x"); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([&] { parse_element(g, "1,,2"); }) == ErrorKind::ParseError);
    std::istringstream in("# a set\n0,0\n1,2  # trailing\n\n0,0\n3,5\n");
    const auto s = parse_set(g, in);
    CHECK(s == std::vector<Index>{el(g, {0, 0}), el(g, {1, 2}), el(g, {3, 5})});
    std::ostringstream out;
    write_set(g, s, out);
    std::istringstream back(out.str());
    CHECK(parse_set(g, back) == s);
    CHECK(elements_to_json(g, s).dump() == "[[0,0],[1,2],[3,5]]");
  }

  TEST_CASE("distributions round trip") {
    const auto g = make_group({7});
    std::istringstream in("0 : 1\n3 : 2\n6 : 1  # weights are normalized\n");
    const Dist p = parse_dist(g, in);
    CHECK(p.mass(3) == doctest::Approx(0.5));
    CHECK(p.mass(6) == doctest::Approx(0.25));
    Rng rng(1);
    for (int trial = 0; trial < 10; ++trial) {
      const auto h = random_group(rng, 500, 3);
      const Dist q = random_dist(rng, h, 9);
      std::ostringstream out;
      write_dist(q, out);
      std::istringstream back(out.str());
      const Dist r = parse_dist(h, back);
      CHECK(l1_distance(q, r) < 1e-15);
    }
    std::istringstream bad1("0 0.5\n"), bad2("0 : -1\n"), bad3("# nothing\n"), bad4("0 : 1x\n");
    CHECK(error_kind_of([&] { parse_dist(g, bad1); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([&] { parse_dist(g, bad2); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([&] { parse_dist(g, bad3); }) == ErrorKind::ParseError);
    CHECK(error_kind_of([&] { parse_dist(g, bad4); }) == ErrorKind::ParseError);
    const auto j = dist_to_json(p);
    CHECK(j["atoms"].size() == 3);
    CHECK(j["group"]["moduli"][0] == 7);
  }

  TEST_CASE("bohr descriptors") {
    const auto g = make_group({64, 64});
    const auto b = bohr_from_json(g, json::parse(R"({"chars": [[1, 0], [0, 1]], "radius": 0.5})"));
    CHECK(b.rank() == 2);
    const auto j = bohr_to_json(b);
    CHECK(j["size"] == b.size());
    CHECK(j["members"].size() == b.size());
    CHECK_FALSE(bohr_to_json(b, false).contains("members"));
    const auto again = bohr_from_json(g, j);
    CHECK(again.members == b.members);
    CHECK(error_kind_of([&] { bohr_from_json(g, json::parse(R"({"chars": [[1]], "radius": 0.5})")); }) ==
          ErrorKind::DimensionMismatch);
    CHECK(error_kind_of([&] { bohr_from_json(g, json::parse(R"({"radius": 0.5})")); }) == ErrorKind::ParseError);
  }

  TEST_CASE("certificate schema") {
    const auto sc = ap_scenario(512, 16);
    CoverOptions o;
    o.tau.n_hi = 2;
    const auto c = freiman_cover(sc.group, sc.set, o);
    const auto j = certificate_to_json(c);
    CHECK(j["schema"] == "acw-cert/1");
    for (const char* key : {"group", "A", "K", "X_terminal", "d_hat", "d_used", "params", "growth", "S", "B_small",
                            "B_large", "progression", "translates", "cover_valid", "hypotheses", "notes", "trace"})
      CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["A"].size() == 16);
    CHECK(j["cover_valid"] == c.cover_valid);
    CHECK(j["hypotheses"].size() == c.hypotheses.size());
    CHECK(j["params"]["checks"].size() == 4);
    CHECK(json::parse(j.dump()) == j);
  }
}
