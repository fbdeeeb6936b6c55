#pragma once

// The `.poly` text format and the JSON report schema.
//
// .poly grammar (line oriented, '#' starts a comment, blank lines ignored):
//
//   dim <n>                                  exactly once, before any facet
//   name <free text>                         optional
//   facet <a1> ... <an> ; <offset> [; <label>]
//
// Normal entries are integers, the offset is an integer or p/q, the label a
// positive integer (default 1). Each facet is {x : <a, x> <= offset}.
//
// JSON documents carry "format-version", use a fixed key order, write
// rationals as "p/q" strings and integer vectors as arrays.

#include "toric/cuts.hpp"
#include "toric/delzant.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

inline constexpr int kFormatVersion = 1;

struct ParseWarning {
  std::size_t line = 0;
  std::string kind;  // "NonPrimitiveNormalWarning"
  std::string message;
};

struct PolytopeDocument {
  std::size_t dim = 0;
  std::optional<std::string> name;
  std::vector<Halfspace> facets;
  std::vector<ParseWarning> warnings;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == ';') {
      out.push_back({";", i + 1});
      ++i;
    } else {
      const std::size_t start = i;
      while (i < line.size() && line[i] != ';' && !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
  }
  return out;
}

inline bool is_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

inline std::optional<Integer> parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!is_digits(digits)) return std::nullopt;
  Integer value{std::string(digits)};
  return s.front() == '-' ? Integer(-value) : value;
}

inline std::optional<Rational> parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto v = parse_integer(s);
    if (!v) return std::nullopt;
    return Rational(*v);
  }
  auto num = parse_integer(s.substr(0, slash));
  const auto den_text = s.substr(slash + 1);
  if (!num || !is_digits(den_text)) return std::nullopt;
  const Integer den(std::string{den_text});
  if (den == 0) return std::nullopt;
  return Rational(*num) / Rational(den);
}

}  // namespace detail

inline PolytopeDocument parse(std::string_view text) {
  PolytopeDocument doc;
  bool have_dim = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    auto fail = [&](std::size_t column, const std::string& msg) -> ParseError {
      return ParseError(Errc::SyntaxError, line_no, column, msg);
    };
    const auto& kw = toks[0];

    if (kw.text == "dim") {
      if (have_dim) throw fail(kw.column, "duplicate dim declaration");
      if (toks.size() != 2) throw fail(kw.column, "expected 'dim <n>'");
      auto n = detail::parse_integer(toks[1].text);
      if (!n || *n < 1 || *n > 64) throw fail(toks[1].column, "dimension must be an integer in 1..64");
      doc.dim = n->convert_to<std::size_t>();
      have_dim = true;
    } else if (kw.text == "name") {
      const auto rest = line.substr(kw.column - 1 + kw.text.size());
      const auto first = rest.find_first_not_of(" \t");
      const auto last = rest.find_last_not_of(" \t");
      if (first == std::string_view::npos) throw fail(kw.column, "empty name");
      doc.name = std::string(rest.substr(first, last - first + 1));
    } else if (kw.text == "facet") {
      if (!have_dim) throw fail(kw.column, "facet before 'dim' declaration");
      std::size_t i = 1;
      LatticeVector normal;
      const std::size_t normal_column = toks.size() > 1 ? toks[1].column : kw.column;
      for (; i < toks.size() && toks[i].text != ";"; ++i) {
        auto v = detail::parse_integer(toks[i].text);
        if (!v) throw fail(toks[i].column, "expected an integer normal entry, got '" + toks[i].text + "'");
        normal.push_back(*v);
      }
      if (i == toks.size()) throw fail(kw.column + kw.text.size(), "missing ';' before offset");
      if (normal.size() != doc.dim)
        throw ParseError(Errc::DimensionMismatch, line_no, normal_column,
                         "facet normal has " + std::to_string(normal.size()) + " entries, dim is " +
                             std::to_string(doc.dim));
      ++i;
      if (i == toks.size() || toks[i].text == ";") throw fail(toks[i - 1].column, "missing offset");
      auto offset = detail::parse_rational(toks[i].text);
      if (!offset) throw fail(toks[i].column, "expected an integer or p/q offset, got '" + toks[i].text + "'");
      ++i;
      Integer label = 1;
      if (i < toks.size()) {
        if (toks[i].text != ";") throw fail(toks[i].column, "unexpected '" + toks[i].text + "'");
        ++i;
        if (i == toks.size()) throw fail(toks[i - 1].column, "missing label after ';'");
        auto l = detail::parse_integer(toks[i].text);
        if (!l || *l < 1) throw fail(toks[i].column, "label must be a positive integer");
        label = *l;
        ++i;
      }
      if (i < toks.size()) throw fail(toks[i].column, "unexpected '" + toks[i].text + "'");

      const Integer g = gcd_of(normal);
      if (g == 0) throw fail(normal_column, "facet normal is zero");
      if (g != 1) {
        for (auto& x : normal) x /= g;
        *offset /= Rational(g);
        doc.warnings.push_back({line_no, "NonPrimitiveNormalWarning",
                                "normal divided by " + g.str() + ", offset rescaled"});
      }
      doc.facets.push_back({std::move(normal), *offset, label});
    } else {
      throw fail(kw.column, "unknown keyword '" + kw.text + "'");
    }
  }
  if (!have_dim) throw ParseError(Errc::SyntaxError, line_no, 1, "missing 'dim' declaration");
  if (doc.facets.empty()) throw ParseError(Errc::SyntaxError, line_no, 1, "no facets");
  return doc;
}

inline LabeledPolytope to_polytope(const PolytopeDocument& doc) { return canonicalize(doc.facets); }

/// The .poly form of P. Labels are always written.
inline std::string emit_poly(const LabeledPolytope& P, const std::optional<std::string>& name = {}) {
  std::ostringstream out;
  out << "dim " << P.dim() << "\n";
  if (name) out << "name " << *name << "\n";
  for (auto& h : P.halfspaces()) {
    out << "facet";
    for (auto& x : h.normal) out << ' ' << x;
    out << " ; " << to_string(h.offset) << " ; " << h.label << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

inline Json to_json(const Rational& x) { return to_string(x); }

inline Json to_json(const LatticeVector& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const std::vector<LatticeVector>& vs) {
  Json a = Json::array();
  for (auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline Json to_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

inline Json polytope_json(const LabeledPolytope& P) {
  Json facets = Json::array();
  for (auto& h : P.halfspaces())
    facets.push_back(Json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}, {"label", to_json(h.label)}});
  return Json{{"dim", P.dim()}, {"facets", std::move(facets)}};
}

namespace detail {

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    if (auto v = parse_integer(j.get<std::string>())) return *v;
  }
  throw Error(Errc::SyntaxError, "expected an integer in JSON, got " + j.dump());
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    if (auto v = parse_rational(j.get<std::string>())) return *v;
  }
  throw Error(Errc::SyntaxError, "expected a rational in JSON, got " + j.dump());
}

}  // namespace detail

/// Reads the object written by polytope_json back into a polytope.
inline LabeledPolytope polytope_from_json(const Json& j) {
  try {
    const auto n = j.at("dim").get<std::size_t>();
    std::vector<Halfspace> hs;
    for (auto& f : j.at("facets")) {
      Halfspace h;
      for (auto& x : f.at("normal")) h.normal.push_back(detail::integer_from_json(x));
      if (h.normal.size() != n) throw Error(Errc::DimensionMismatch, "facet normal length differs from dim");
      h.offset = detail::rational_from_json(f.at("offset"));
      h.label = f.contains("label") ? detail::integer_from_json(f.at("label")) : Integer(1);
      hs.push_back(std::move(h));
    }
    return canonicalize(std::move(hs));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::SyntaxError, e.what());
  }
}

inline Json header(std::string_view command) {
  return Json{{"format-version", kFormatVersion}, {"command", command}};
}

inline Json vertex_json(const LabeledPolytope& P, std::size_t index) {
  const auto& v = P.vertices()[index];
  const auto cls = classify_vertex(P, v);
  Json j{{"index", index},
         {"point", to_json(v.point)},
         {"incident_facets", to_json(v.incident_facets)},
         {"edge_directions", to_json(v.edge_directions)},
         {"class", kind_name(cls.kind)}};
  j["invariant_factors"] = to_json(cls.invariant_factors);
  j["group_order"] = is_simple_at_vertex(P, v) ? to_json(orbifold_group_order(P, v)) : Json(nullptr);
  return j;
}

inline Json face_json(const Face& f) {
  return Json{{"dim", f.dim}, {"vertices", to_json(f.vertices)}, {"facets", to_json(f.facets)}};
}

inline Json classification_json(const LabeledPolytope& P, const ClassificationReport& report) {
  Json facets = Json::array();
  for (std::size_t i = 0; i < P.facet_count(); ++i) {
    const auto& h = P.facet(i);
    facets.push_back(Json{{"index", i},
                          {"normal", to_json(h.normal)},
                          {"offset", to_json(h.offset)},
                          {"label", to_json(h.label)}});
  }
  Json vertices = Json::array();
  for (std::size_t i = 0; i < P.vertices().size(); ++i) vertices.push_back(vertex_json(P, i));
  return Json{{"dim", report.dim},
              {"valid", report.valid()},
              {"facets", std::move(facets)},
              {"vertices", std::move(vertices)},
              {"summary",
               Json{{"smooth", report.count(VertexClass::Kind::Smooth)},
                    {"orbifold", report.count(VertexClass::Kind::Orbifold)},
                    {"singular", report.count(VertexClass::Kind::Singular)}}}};
}

inline Json classify_document(const LabeledPolytope& P) {
  Json j = header("classify");
  j.update(classification_json(P, classify(P)));
  return j;
}

inline Json validate_document(const LabeledPolytope& P) {
  const auto verdict = validate_simple_away_from_vertices(P);
  Json j = header("validate");
  j["valid"] = verdict.valid;
  j["dim"] = P.dim();
  j["facet_count"] = P.facet_count();
  j["vertex_count"] = P.vertices().size();
  j["offending_face"] = verdict.offending ? face_json(*verdict.offending) : Json(nullptr);
  return j;
}

inline Json cut_document(const CutResult& result) {
  Json j = header("cut");
  j["trivial"] = result.trivial;
  j["polytope"] = polytope_json(result.polytope);
  return j;
}

inline Json desingularize_document(const LabeledPolytope& input, const LabeledPolytope& output) {
  Json excised = Json::array();
  for (auto& v : input.vertices())
    if (!is_simple_at_vertex(input, v)) excised.push_back(to_json(v.point));
  Json j = header("desingularize");
  j["excised_vertices"] = std::move(excised);
  j["facet_count"] = output.facet_count();
  j["vertex_count"] = output.vertices().size();
  j["polytope"] = polytope_json(output);
  return j;
}

inline Json link_document(std::size_t vertex_index, const Vertex& v, const LinkPolytope& link) {
  Json lifted = Json::array();
  Json slice = Json::array();
  for (auto& w : link.polytope.vertices()) {
    slice.push_back(to_json(w.point));
    lifted.push_back(to_json(link.lift(w.point)));
  }
  Json j = header("link");
  j["vertex"] = Json{{"index", vertex_index}, {"point", to_json(v.point)}};
  j["reeb"] = to_json(link.reeb);
  j["height"] = to_json(link.height);
  j["basis"] = to_json(link.basis);
  j["origin"] = to_json(link.origin);
  j["simplex"] = link.polytope.vertices().size() == link.polytope.dim() + 1;
  j["slice_vertices"] = std::move(slice);
  j["directions"] = std::move(lifted);
  j["polytope"] = polytope_json(link.polytope);
  return j;
}

inline Json delzant_document(const LabeledPolytope& P, const SynthesisReport& r) {
  Json facets = Json::array();
  for (auto& f : r.facets)
    facets.push_back(Json{{"index", f.facet},
                          {"weight", to_json(f.weight)},
                          {"label", to_json(f.label)},
                          {"offset", to_json(f.offset)},
                          {"scaled_offset", to_json(f.scaled_offset)}});
  Json j = header("delzant");
  j["dim"] = P.dim();
  j["ambient_dimension"] = r.ambient_dimension;
  j["facets_minus_dim"] = r.facets_minus_dim;
  j["weight_matrix"] = to_json(r.weights.matrix);
  j["torus_rank"] = r.group.torus_rank;
  j["finite_invariant_factors"] = to_json(r.group.finite_invariant_factors);
  j["kernel_basis"] = to_json(r.group.kernel_basis);
  j["level"] = to_json(r.group.level);
  j["facets"] = std::move(facets);
  j["classification"] = classification_json(P, r.classification);
  return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Human-readable text

namespace detail {

inline std::string tuple_text(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

inline std::string tuple_text(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

inline std::string list_text(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::string factors_text(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

}  // namespace detail

inline std::string classification_text(const LabeledPolytope& P) {
  const auto report = classify(P);
  std::ostringstream out;
  out << "dim " << P.dim() << ", " << P.facet_count() << " facets, " << P.vertices().size()
      << " vertices\n";
  out << "simple away from vertices: " << (report.valid() ? "yes" : "no") << "\n\n";
  out << "facets\n";
  out << std::left << std::setw(5) << "  #" << std::setw(20) << "normal" << std::setw(10) << "offset"
      << "label\n";
  for (std::size_t i = 0; i < P.facet_count(); ++i) {
    const auto& h = P.facet(i);
    out << "  " << std::setw(3) << i << std::setw(20) << detail::tuple_text(h.normal) << std::setw(10)
        << to_string(h.offset) << h.label << "\n";
  }
  out << "\nvertices\n";
  out << std::setw(5) << "  #" << std::setw(20) << "point" << std::setw(16) << "facets" << "class\n";
  for (std::size_t i = 0; i < P.vertices().size(); ++i) {
    const auto& v = P.vertices()[i];
    const auto& cls = report.classes[i];
    out << "  " << std::setw(3) << i << std::setw(20) << detail::tuple_text(v.point) << std::setw(16)
        << detail::list_text(v.incident_facets) << kind_name(cls.kind);
    if (cls.kind == VertexClass::Kind::Orbifold) out << ' ' << detail::factors_text(cls.invariant_factors);
    out << "\n";
  }
  out << "\nsummary: " << report.count(VertexClass::Kind::Smooth) << " smooth, "
      << report.count(VertexClass::Kind::Orbifold) << " orbifold, "
      << report.count(VertexClass::Kind::Singular) << " singular\n";
  return out.str();
}

inline std::string validate_text(const LabeledPolytope& P) {
  const auto verdict = validate_simple_away_from_vertices(P);
  std::ostringstream out;
  out << "dim " << P.dim() << ", " << P.facet_count() << " facets, " << P.vertices().size()
      << " vertices\n";
  if (verdict.valid) {
    out << "valid: rational and simple away from the vertices\n";
  } else {
    const auto& f = *verdict.offending;
    out << "invalid: face of dimension " << f.dim << " (vertices " << detail::list_text(f.vertices)
        << ") lies on " << f.facets.size() << " facets, expected " << P.dim() - f.dim << "\n";
  }
  return out.str();
}

inline std::string link_text(std::size_t vertex_index, const Vertex& v, const LinkPolytope& link) {
  std::ostringstream out;
  out << "# link of vertex " << vertex_index << " at " << detail::tuple_text(v.point) << "\n";
  out << "# reeb " << detail::tuple_text(link.reeb) << ", height " << to_string(link.height) << "\n";
  out << "# slice origin " << detail::tuple_text(link.origin) << ", basis columns";
  for (std::size_t j = 0; j < link.basis.cols(); ++j) out << ' ' << detail::tuple_text(link.basis.column(j));
  out << "\n# " << link.polytope.vertices().size() << " vertices";
  for (auto& w : link.polytope.vertices()) out << ' ' << detail::tuple_text(w.point);
  out << "\n";
  out << emit_poly(link.polytope);
  return out.str();
}

inline std::string delzant_text(const LabeledPolytope& P, const SynthesisReport& r) {
  std::ostringstream out;
  out << "dim " << P.dim() << ", " << r.ambient_dimension << " facets (quotient of C^"
      << r.ambient_dimension << ")\n";
  out << "facets minus dim: " << r.facets_minus_dim << "\n\n";
  out << "weight matrix (column j = label_j * normal_j)\n";
  for (std::size_t i = 0; i < r.weights.matrix.rows(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < r.weights.matrix.cols(); ++j)
      out << std::right << std::setw(4) << r.weights.matrix(i, j);
    out << "\n";
  }
  out << std::left;
  out << "\nreduction group: torus rank " << r.group.torus_rank << ", finite part "
      << detail::factors_text(r.group.finite_invariant_factors) << "\n";
  out << "kernel basis\n";
  for (std::size_t i = 0; i < r.group.kernel_basis.size(); ++i)
    out << "  " << detail::tuple_text(r.group.kernel_basis[i]) << "  level " << to_string(r.group.level[i])
        << "\n";
  out << "\nvertices: " << r.classification.count(VertexClass::Kind::Smooth) << " smooth, "
      << r.classification.count(VertexClass::Kind::Orbifold) << " orbifold, "
      << r.classification.count(VertexClass::Kind::Singular) << " singular\n";
  return out.str();
}

}  // namespace toric
