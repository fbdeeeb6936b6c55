#include "support.hpp"

#include <gtest/gtest.h>

namespace toric {
namespace {

using namespace toric::testing;

struct Caught {
  Errc code;
  std::size_t line;
  std::size_t column;
};

Caught parse_error_of(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return {e.code(), e.line(), e.column()};
  }
  ADD_FAILURE() << "no parse error for: " << text;
  return {Errc::InvalidArgument, 0, 0};
}

std::size_t occurrences(const std::string& hay, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++count;
  return count;
}

TEST(Parse, TeardropInterval) {
  const auto doc = parse("dim 1\nfacet -1 ; 0\nfacet 1 ; 1 ; 3\n");
  EXPECT_EQ(doc.dim, 1u);
  EXPECT_TRUE(doc.warnings.empty());
  const auto I = to_polytope(doc);
  EXPECT_EQ(I, interval(1, 3));
  EXPECT_EQ(classify_vertex(I, I.vertices()[*I.find_vertex(pt({1}))]), VertexClass::orbifold({3}));
}

TEST(Parse, SimplexWithCommentsAndName) {
  const auto doc = parse(
      "# the standard triangle\n"
      "dim 2\n"
      "name standard simplex\n"
      "\n"
      "facet -1 0 ; 0   # x >= 0\n"
      "facet 0 -1 ; 0\r\n"
      "facet 1 1 ; 1\n");
  ASSERT_TRUE(doc.name);
  EXPECT_EQ(*doc.name, "standard simplex");
  EXPECT_EQ(to_polytope(doc), simplex2());
}

TEST(Parse, RationalOffsets) {
  const auto doc = parse("dim 1\nfacet -1 ; 1/2\nfacet 1 ; -3/6\n");
  EXPECT_EQ(doc.facets[0].offset, q(1, 2));
  EXPECT_EQ(doc.facets[1].offset, q(-1, 2));
}

TEST(Parse, NonPrimitiveNormalIsRescaledWithWarning) {
  const auto doc = parse("dim 2\nfacet -1 0 ; 0\nfacet 0 -1 ; 0\nfacet 2 2 ; 2\n");
  ASSERT_EQ(doc.warnings.size(), 1u);
  EXPECT_EQ(doc.warnings[0].kind, "NonPrimitiveNormalWarning");
  EXPECT_EQ(doc.warnings[0].line, 4u);
  EXPECT_EQ(doc.facets[2], hs({1, 1}, 1));
}

TEST(Parse, Errors) {
  auto e = parse_error_of("facet 1 ; 1\n");
  EXPECT_EQ(e.code, Errc::SyntaxError);
  EXPECT_EQ(e.line, 1u);
  EXPECT_EQ(e.column, 1u);

  e = parse_error_of("dim 2\nfacet 1 0 ; 1\nfacet 1 ; 1\n");
  EXPECT_EQ(e.code, Errc::DimensionMismatch);
  EXPECT_EQ(e.line, 3u);
  EXPECT_EQ(e.column, 7u);

  e = parse_error_of("dim 1\nfacet 1 x ; 1\n");
  EXPECT_EQ(e.code, Errc::SyntaxError);
  EXPECT_EQ(e.line, 2u);
  EXPECT_EQ(e.column, 9u);

  e = parse_error_of("dim 1\nfacet 1 1\n");
  EXPECT_EQ(e.code, Errc::SyntaxError);

  e = parse_error_of("dim 1\nfacet 1 ; 1 ; 0\n");
  EXPECT_EQ(e.code, Errc::SyntaxError);
  EXPECT_EQ(e.column, 15u);

  e = parse_error_of("dim 1\nfacet 1 ; 1/0\n");
  EXPECT_EQ(e.code, Errc::SyntaxError);

  e = parse_error_of("dim 2\ndim 2\n");
  EXPECT_EQ(e.line, 2u);

  e = parse_error_of("dim 2\nfacet 0 0 ; 1\n");
  EXPECT_EQ(e.code, Errc::SyntaxError);

  e = parse_error_of("dim 2\n");
  EXPECT_EQ(e.code, Errc::SyntaxError);

  e = parse_error_of("dim 1\nvertex 1\n");
  EXPECT_EQ(e.column, 1u);
}

TEST(Parse, MessageCarriesPosition) {
  try {
    parse("dim 1\n  facet 1 ; q\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("SyntaxError: line 2, column 13: ", 0), 0u) << e.what();
  }
}

TEST(EmitPoly, RoundTrips) {
  std::mt19937 rng(909);
  std::vector<LabeledPolytope> corpus{cube(), octahedron(), simplex2(), interval(2, 7),
                                      desingularize(octahedron())};
  for (int i = 0; i < 20; ++i) corpus.push_back(random_polytope(rng, 2 + i % 3, true));
  for (auto& P : corpus) {
    const auto text = emit_poly(P, "round trip");
    const auto doc = parse(text);
    EXPECT_TRUE(doc.warnings.empty());
    EXPECT_EQ(*doc.name, "round trip");
    EXPECT_EQ(to_polytope(doc), P);
    EXPECT_EQ(emit_poly(to_polytope(doc), "round trip"), text);
  }
}

TEST(Json, PolytopeRoundTripIsByteStable) {
  std::mt19937 rng(111);
  std::vector<LabeledPolytope> corpus{cube(), desingularize(octahedron())};
  for (int i = 0; i < 10; ++i) corpus.push_back(random_polytope(rng, 3, true));
  for (auto& P : corpus) {
    const auto first = dump(polytope_json(P));
    const auto Q = polytope_from_json(Json::parse(first));
    EXPECT_EQ(Q, P);
    EXPECT_EQ(dump(polytope_json(Q)), first);
  }
}

TEST(Json, LargeIntegersBecomeStrings) {
  const Integer big = Integer(1) << 80;
  EXPECT_TRUE(to_json(big).is_string());
  EXPECT_TRUE(to_json(Integer(-5)).is_number_integer());
  EXPECT_EQ(to_json(q(-3, 6)), "-1/2");
  EXPECT_EQ(to_json(q(4, 2)), "2");
}

TEST(Json, ClassificationDocuments) {
  const auto octa = dump(classify_document(octahedron()));
  EXPECT_EQ(occurrences(octa, "\"class\": \"singular\""), 6u);
  EXPECT_EQ(octa.rfind("{\n  \"format-version\": 1,\n  \"command\": \"classify\"", 0), 0u);

  const auto cube_doc = classify_document(cube());
  EXPECT_EQ(cube_doc["vertices"].size(), 8u);
  for (auto& v : cube_doc["vertices"]) EXPECT_EQ(v["class"], "smooth");
  EXPECT_EQ(cube_doc["summary"]["smooth"], 8);
}

TEST(Json, DelzantDocument) {
  const auto j = delzant_document(octahedron(), synthesize(octahedron()));
  EXPECT_EQ(j["torus_rank"], 5);
  EXPECT_EQ(j["ambient_dimension"], 8);
  EXPECT_EQ(j["finite_invariant_factors"], Json::parse("[2, 2]"));
  EXPECT_EQ(j["classification"]["summary"]["singular"], 6);
}

TEST(Json, Deterministic) {
  const auto P = desingularize(octahedron());
  EXPECT_EQ(dump(classify_document(P)), dump(classify_document(P)));
  EXPECT_EQ(dump(desingularize_document(octahedron(), P)), dump(desingularize_document(octahedron(), P)));
}

TEST(Text, Formatters) {
  const auto t = classification_text(octahedron());
  EXPECT_NE(t.find("singular"), std::string::npos);
  const auto v = validate_text(octahedron());
  EXPECT_FALSE(v.empty());
  const auto d = delzant_text(simplex2(), synthesize(simplex2()));
  EXPECT_NE(d.find("torus"), std::string::npos);
}

}  // namespace
}  // namespace toric
