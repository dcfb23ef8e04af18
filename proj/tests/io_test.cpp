#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "ipd/bijection.hpp"
#include "ipd/enumeration.hpp"
#include "ipd/error.hpp"
#include "ipd/io.hpp"

namespace {

using namespace ipd;

std::string fixture_text(const char *name) {
  return read_file(std::string(IPD_FIXTURES "/") + name);
}

std::size_t count_of(const std::string &s, std::string_view needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
    ++n;
  return n;
}

TEST(Json, PosetFormat) {
  const auto Q = build_poset(parse_permutation("213"));
  EXPECT_EQ(poset_to_json(Q), "{\"n\":3,\"intervals\":[[1,1],[1,2],[1,3],[2,2],[3,3]]}\n");
  EXPECT_EQ(poset_from_json(poset_to_json(Q)), Q);
}

TEST(Json, DissectionFormat) {
  const Dissection D(5, {{2, 5}, {1, 3}});
  EXPECT_EQ(dissection_to_json(D), "{\"m\":5,\"diagonals\":[[1,3],[2,5]]}\n");
  EXPECT_EQ(dissection_from_json(dissection_to_json(D)), D);
}

TEST(Json, FixturesAreCanonical) {
  for (auto name : {"eight_realizations_poset.json", "dual_claw_4.json", "tengon_poset.json",
                    "tengon_poset_missing_1_6.json", "tengon_poset_missing_1_8.json"}) {
    const auto text = fixture_text(name);
    EXPECT_EQ(poset_to_json(poset_from_json(text)), text) << name;
  }
  for (auto name : {"empty_pentagon.json", "octagon_components.json", "separable_12gon_faces.json",
                    "square_crossing.json", "tengon_dissection.json"}) {
    const auto text = fixture_text(name);
    EXPECT_EQ(dissection_to_json(dissection_from_json(text)), text) << name;
  }
}

TEST(Json, RoundTripOnEveryPosetUpToSix) {
  for (int n = 1; n <= 6; ++n)
    for (const auto &[key, perms] : tally_posets(n)) {
      const auto Q = poset_from_key(n, key);
      ASSERT_EQ(poset_from_json(poset_to_json(Q)), Q);
      const auto D = phi(Q);
      ASSERT_EQ(dissection_from_json(dissection_to_json(D)), D);
    }
}

TEST(Json, Errors) {
  auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::OutOfDomain;
  };
  EXPECT_EQ(code_of([] { poset_from_json("{"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { poset_from_json("{\"n\":3}"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { poset_from_json("{\"n\":2,\"intervals\":[[1,2,3]]}"); }),
            ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { poset_from_json("{\"n\":2,\"intervals\":[[1,1],[2,2]]}"); }),
            ErrorCode::MissingTrivial);
  EXPECT_EQ(code_of([] { dissection_from_json("{\"m\":\"five\",\"diagonals\":[]}"); }),
            ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { dissection_from_json("{\"m\":5,\"diagonals\":[[1,2]]}"); }),
            ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { read_file("/nonexistent/ipd.json"); }), ErrorCode::MalformedInput);
}

TEST(Svg, Layout) {
  const auto svg = render_svg(dissection_from_json(fixture_text("tengon_dissection.json")));
  EXPECT_EQ(svg.rfind("<svg ", 0), 0u);
  EXPECT_EQ(count_of(svg, "class=\"outer\""), 10u);
  EXPECT_EQ(count_of(svg, "class=\"diagonal\""), 6u);
  EXPECT_EQ(count_of(svg, "<circle"), 10u);
  EXPECT_EQ(count_of(svg, "<text"), 10u);
  // Vertex 1 sits at the top of the circle.
  EXPECT_NE(svg.find("cx=\"256.000\" cy=\"56.000\""), std::string::npos);
  EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
}

TEST(Svg, Square) {
  const auto svg = render_svg(Dissection(4, {{1, 3}}));
  // Vertices at 90, 0, -90, 180 degrees.
  EXPECT_NE(svg.find("x1=\"256.000\" y1=\"56.000\" x2=\"456.000\" y2=\"256.000\""),
            std::string::npos);
  EXPECT_NE(svg.find("<line class=\"diagonal\" x1=\"256.000\" y1=\"56.000\" x2=\"256.000\" "
                     "y2=\"456.000\"/>"),
            std::string::npos);
}

TEST(Output, ByteStable) {
  const auto D = dissection_from_json(fixture_text("tengon_dissection.json"));
  const auto Q = poset_from_json(fixture_text("eight_realizations_poset.json"));
  const auto svg = render_svg(D), dot = to_dot(Q), json = poset_to_json(Q);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(render_svg(D), svg);
    EXPECT_EQ(to_dot(Q), dot);
    EXPECT_EQ(poset_to_json(Q), json);
  }
}

TEST(Files, WriteThenRead) {
  const auto path = (std::filesystem::temp_directory_path() / "ipd_io_test.json").string();
  write_file(path, "{\"m\":3,\"diagonals\":[]}\n");
  EXPECT_EQ(dissection_from_json(read_file(path)), Dissection(3));
  std::remove(path.c_str());
}

} // namespace
