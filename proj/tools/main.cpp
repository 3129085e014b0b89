// assoc: generate, parse, verify and export associahedra, multiplihedra and
// bar complexes.
//
// Exit codes: 0 ok, 1 failed check, 2 bad flags, 3 size limit, 4 parse
// error, 5 bad monoid table.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "assoc/barcx.hpp"
#include "assoc/errors.hpp"
#include "assoc/export.hpp"
#include "assoc/trees.hpp"
#include "assoc/verify.hpp"

namespace {

using namespace assoc;

constexpr int kExitFail = 1, kExitFlags = 2, kExitSize = 3, kExitParse = 4, kExitMonoid = 5;

struct PolytopeArgs {
  std::string family;
  std::size_t n = 0;
  std::string a = "1/2";
  std::string format;
  bool vertices = false, hrep = false;
};

struct TreesArgs {
  std::string action;
  std::size_t n = 0;
  bool bearded = false, unicode = false;
  std::string word;
};

struct BarArgs {
  std::string monoid;
  std::size_t n = 0;
  std::string model = "strict";
  std::string ends = "*x*";
  bool json = false;
};

void print_halfspace(std::ostream& os, const Halfspace& h, const char* rel) {
  os << str(h.normal) << " . x " << rel << " " << str(h.offset) << "\n";
}

int run_polytope(const PolytopeArgs& p) {
  if (p.n == 0) throw DomainError("--n must be at least 1");
  Rat a = p.family == "j" ? parse_rat(p.a) : Rat(0);
  PolytopeData d = polytope_data(p.family, p.n, a);
  if (p.format == "json") {
    std::cout << to_json(d) << "\n";
    return 0;
  }
  if (p.format == "off") {
    std::cout << to_off(d);
    return 0;
  }
  if (!p.vertices && !p.hrep) {
    std::cout << (p.family == "k" ? "K(" : "J(") << p.n << ")";
    if (d.a) std::cout << " a=" << str(*d.a);
    std::cout << "\nvertices: " << d.vertices.size() << "\ninequalities: " << d.hrep.inequalities.size()
              << "\nequalities: " << d.hrep.equalities.size() << "\n";
    return 0;
  }
  if (p.vertices)
    for (const auto& v : d.vertices) std::cout << str(v) << "\n";
  if (p.hrep) {
    for (const auto& h : d.hrep.equalities) print_halfspace(std::cout, h, "=");
    for (const auto& h : d.hrep.inequalities) print_halfspace(std::cout, h, "<=");
  }
  return 0;
}

int run_trees(const TreesArgs& t) {
  const bool needs_n = t.action == "enum" || t.action == "word" || t.action == "coords";
  if (needs_n && t.n == 0) throw DomainError("--n must be at least 1");
  if (t.action == "parse") {
    if (t.word.empty()) throw DomainError("parse needs --word");
    if (t.bearded) {
      BeardedTree b = t.word.find('@') == 0 || t.word.rfind("x", 0) != 0 ? parse_bearded_primed(t.word) : parse_bearded(t.word);
      std::cout << "tree: " << bracketed(b.tree()) << "\nword: " << bearded_word(b, t.unicode)
                << "\nprimed: " << bearded_word_primed(b, t.unicode) << "\nv: " << str(v_coords(b))
                << "\nu: " << str(u_coords(b)) << "\n";
      return 0;
    }
    TrivalentTree tr = t.word.rfind("x", 0) == 0 ? parse_word(t.word) : parse_word_primed(t.word);
    std::cout << "tree: " << bracketed(tr) << "\nword: " << word(tr) << "\nprimed: " << word_primed(tr)
              << "\na: " << str(shadow_a(tr)) << "\nb: " << str(shadow_b(tr)) << "\n";
    return 0;
  }
  if (t.bearded) {
    for (const auto& b : enum_bearded(t.n)) {
      if (t.action == "enum") std::cout << bearded_word(b, t.unicode) << "\n";
      if (t.action == "word") std::cout << bearded_word(b, t.unicode) << "  " << bearded_word_primed(b, t.unicode) << "\n";
      if (t.action == "coords") std::cout << bearded_word(b, t.unicode) << "  " << str(v_coords(b)) << "\n";
    }
    return 0;
  }
  for (const auto& tr : enum_trivalent(t.n)) {
    if (t.action == "enum") std::cout << word(tr) << "\n";
    if (t.action == "word") std::cout << word(tr) << "  " << word_primed(tr) << "  " << bracketed(tr) << "\n";
    if (t.action == "coords") std::cout << word(tr) << "  " << str(shadow_a(tr)) << "  " << str(shadow_b(tr)) << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& o) {
  if (o.n_max == 0) throw DomainError("--n-max must be at least 1");
  auto reports = run_suites(suite, o);
  std::cout << format_report(reports, o);
  if (suite == "bar" || suite == "all") {
    FiniteMonoid c2 = FiniteMonoid::builtin("c2");
    BarContext ctx(c2, parse_ends("*x*"), BarModel::Strict);
    std::cout << "euler characteristic of P^n over C2:";
    for (std::size_t n = 0; n <= std::min(o.n_max, kMaxBarRank); ++n) std::cout << " " << euler(build_bar(ctx, n));
    std::cout << "\n";
  }
  for (const auto& r : reports)
    if (!r.ok()) return kExitFail;
  return 0;
}

FiniteMonoid load_monoid(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return FiniteMonoid::builtin(source.substr(8));
  std::ifstream in(source);
  if (!in) throw DomainError("cannot read monoid file '" + source + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return FiniteMonoid::parse(ss.str());
}

int run_bar(const BarArgs& b) {
  FiniteMonoid x = load_monoid(b.monoid);
  BarContext ctx(x, parse_ends(b.ends), b.model == "hopf" ? BarModel::Hopf : BarModel::Strict);
  BarComplex bc = build_bar(ctx, b.n);
  if (b.json) {
    std::cout << to_json(bc, x) << "\n";
    return 0;
  }
  std::cout << "counts:";
  for (std::size_t r = 0; r <= b.n; ++r) std::cout << " " << bc.count(r);
  std::cout << "\neuler: " << euler(bc) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact associahedra, multiplihedra and bar constructions"};
  app.require_subcommand(1);

  PolytopeArgs pa;
  auto* poly = app.add_subcommand("polytope", "Vertices, inequalities and exports of K(n) and J(n)");
  poly->add_option("family", pa.family, "k or j")->required()->check(CLI::IsMember({"k", "j"}));
  poly->add_option("--n", pa.n, "arity")->required();
  poly->add_option("--a", pa.a, "parameter of J, as p/q");
  poly->add_option("--format", pa.format, "json or off")->check(CLI::IsMember({"json", "off"}));
  poly->add_flag("--vertices", pa.vertices, "list lattice vertices");
  poly->add_flag("--hrep", pa.hrep, "list the inequality system");

  TreesArgs ta;
  auto* trees = app.add_subcommand("trees", "Tree enumeration, words and coordinates");
  trees->add_option("action", ta.action, "enum, word, parse or coords")
      ->required()
      ->check(CLI::IsMember({"enum", "word", "parse", "coords"}));
  trees->add_option("--n", ta.n, "number of leaves");
  trees->add_flag("--bearded", ta.bearded, "bearded trees");
  trees->add_flag("--unicode", ta.unicode, "print sharp, flat and natural signs");
  trees->add_option("--word", ta.word, "word to parse");

  std::string suite;
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run the exact property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--n-max", vo.n_max, "largest arity")->required();
  verify->add_option("--cases", vo.cases, "random cases per check");
  verify->add_option("--seed", vo.seed, "random seed");

  BarArgs ba;
  auto* bar = app.add_subcommand("bar", "Bar construction cell complexes");
  bar->add_option("--monoid", ba.monoid, "table file or builtin:c2|c3|triv")->required();
  bar->add_option("--n", ba.n, "top rank")->required();
  bar->add_option("--model", ba.model, "strict or hopf")->check(CLI::IsMember({"strict", "hopf"}));
  bar->add_option("--ends", ba.ends, "yxz, *x*, xx* or *xx")->check(CLI::IsMember({"yxz", "*x*", "xx*", "*xx"}));
  bar->add_flag("--json", ba.json, "export the complex as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitFlags;
  }

  try {
    if (*poly) return run_polytope(pa);
    if (*trees) return run_trees(ta);
    if (*verify) return run_verify(suite, vo);
    if (*bar) return run_bar(ba);
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitSize;
  } catch (const ParseError& e) {
    std::cerr << "parse error at token " << e.token_index << ", offset " << e.char_offset << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const MonoidError& e) {
    std::cerr << "monoid error: " << e.what() << "\n";
    return kExitMonoid;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlags;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitFlags;
}
