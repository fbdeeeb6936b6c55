// toricpoly: command-line front end for labeled rational polytopes.
//
// Exit codes: 0 success, 1 domain error (empty, unbounded, invalid, ...),
// 2 usage or parse error. Results go to stdout (or --output), diagnostics
// to stderr.

#include "toric/toric.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

toric::PolytopeDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  auto doc = toric::parse(buf.str());
  for (auto& w : doc.warnings)
    std::cerr << path << ":" << w.line << ": warning: " << w.kind << ": " << w.message << "\n";
  return doc;
}

toric::Rational parse_rational_arg(const std::string& text, const char* what) {
  auto v = toric::detail::parse_rational(text);
  if (!v) throw UsageError(std::string(what) + ": expected an integer or p/q, got '" + text + "'");
  return *v;
}

toric::LatticeVector parse_normal_arg(const std::string& text) {
  toric::LatticeVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto v = toric::detail::parse_integer(item);
    if (!v) throw UsageError("--normal: expected comma-separated integers, got '" + text + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw UsageError("--normal: empty vector");
  return out;
}

struct Options {
  std::string format = "text";
  std::string output;
  std::string file;
  std::string normal;
  std::string level;
  std::string keep;
  std::string epsilon;
  std::size_t vertex = 0;
  std::string height = "1";
};

void write_result(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + opt.output + "'");
  out << text;
}

bool json(const Options& opt) { return opt.format == "json"; }

int run_validate(const Options& opt) {
  const auto P = toric::to_polytope(read_document(opt.file));
  write_result(opt, json(opt) ? toric::dump(toric::validate_document(P)) : toric::validate_text(P));
  if (!toric::validate_simple_away_from_vertices(P).valid) {
    std::cerr << "error: NotValid: polytope is not simple away from its vertices\n";
    return kExitDomain;
  }
  return kExitOk;
}

int run_classify(const Options& opt) {
  const auto P = toric::to_polytope(read_document(opt.file));
  write_result(opt, json(opt) ? toric::dump(toric::classify_document(P)) : toric::classification_text(P));
  return kExitOk;
}

int run_cut(const Options& opt) {
  const auto doc = read_document(opt.file);
  const auto P = toric::to_polytope(doc);
  toric::KeepSide keep;
  if (opt.keep == "ge") {
    keep = toric::KeepSide::AtLeast;
  } else if (opt.keep == "le") {
    keep = toric::KeepSide::AtMost;
  } else {
    throw UsageError("--keep must be 'ge' or 'le'");
  }
  const auto normal = parse_normal_arg(opt.normal);
  if (normal.size() != P.dim())
    throw UsageError("--normal has " + std::to_string(normal.size()) + " entries, polytope dim is " +
                     std::to_string(P.dim()));
  const toric::CutSpec spec(normal, parse_rational_arg(opt.level, "--level"), keep);
  const auto result = toric::cut(P, spec);
  if (result.trivial) std::cerr << "warning: TrivialCut: the halfspace contains the polytope\n";
  if (json(opt)) {
    write_result(opt, toric::dump(toric::cut_document(result)));
  } else {
    std::string text = result.trivial ? "# trivial cut\n" : "";
    write_result(opt, text + toric::emit_poly(result.polytope, doc.name));
  }
  return kExitOk;
}

int run_desingularize(const Options& opt) {
  const auto doc = read_document(opt.file);
  const auto P = toric::to_polytope(doc);
  toric::EpsilonPolicy policy;
  if (!opt.epsilon.empty()) policy.epsilon = parse_rational_arg(opt.epsilon, "--epsilon");
  const auto Q = toric::desingularize(P, policy);
  write_result(opt, json(opt) ? toric::dump(toric::desingularize_document(P, Q)) : toric::emit_poly(Q, doc.name));
  return kExitOk;
}

int run_link(const Options& opt) {
  const auto P = toric::to_polytope(read_document(opt.file));
  if (opt.vertex >= P.vertices().size())
    throw UsageError("--vertex " + std::to_string(opt.vertex) + " out of range (polytope has " +
                     std::to_string(P.vertices().size()) + " vertices)");
  const auto& v = P.vertices()[opt.vertex];
  const auto reeb = toric::find_reeb_covector(P, v);
  const auto link = toric::link_polytope(P, v, reeb.y, parse_rational_arg(opt.height, "--height"));
  write_result(opt, json(opt) ? toric::dump(toric::link_document(opt.vertex, v, link))
                              : toric::link_text(opt.vertex, v, link));
  return kExitOk;
}

int run_delzant(const Options& opt) {
  const auto P = toric::to_polytope(read_document(opt.file));
  const auto report = toric::synthesize(P);
  write_result(opt, json(opt) ? toric::dump(toric::delzant_document(P, report)) : toric::delzant_text(P, report));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toricpoly: classify, cut and desingularize labeled rational polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", opt.output, "Write the result to this path instead of stdout");

  auto* validate = app.add_subcommand("validate", "Check that the polytope is simple away from its vertices");
  auto* classify = app.add_subcommand("classify", "Classify every vertex as smooth, orbifold or singular");
  auto* cut = app.add_subcommand("cut", "Intersect with a rational halfspace; the new facet gets label 1");
  auto* desing = app.add_subcommand("desingularize", "Replace every singular vertex by a label-1 facet");
  auto* link = app.add_subcommand(
      "link", "Link polytope at a vertex. Vertices are indexed from 0 in lexicographic order of "
              "their coordinates, the order used by 'classify'");
  auto* delzant = app.add_subcommand("delzant", "Weight matrix and reduction group of the quotient presentation");

  for (auto* sub : {validate, classify, cut, desing, link, delzant})
    sub->add_option("file", opt.file, "Input .poly file")->required();
  cut->add_option("--normal", opt.normal, "Cut direction a1,..,an")->required();
  cut->add_option("--level", opt.level, "Cut level p/q")->required();
  cut->add_option("--keep", opt.keep, "Kept side: ge keeps <x,a> >= level, le keeps <x,a> <= level")->required();
  desing->add_option("--epsilon", opt.epsilon, "Cut depth p/q (default: half the gap to the nearest vertex, halved until no two cuts meet)");
  link->add_option("--vertex", opt.vertex, "Vertex index")->required();
  link->add_option("--height", opt.height, "Slice height p/q (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(opt);
    if (classify->parsed()) return run_classify(opt);
    if (cut->parsed()) return run_cut(opt);
    if (desing->parsed()) return run_desingularize(opt);
    if (link->parsed()) return run_link(opt);
    if (delzant->parsed()) return run_delzant(opt);
  } catch (const toric::ParseError& e) {
    std::cerr << opt.file << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const toric::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
