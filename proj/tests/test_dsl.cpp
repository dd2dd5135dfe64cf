#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "random_kb.hpp"
#include "refclass/dsl.hpp"
#include "refclass/errors.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace refclass;

namespace {

const std::filesystem::path fixtures = REFCLASS_FIXTURES;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<dsl::Diagnostic> diagnostics_of(std::string_view text) {
  try {
    dsl::parse_kb(text);
  } catch (const dsl::ParseError& e) {
    return e.diagnostics();
  }
  return {};
}

const Stat* only_stat(const KbBuilder& kb) {
  const Stat* found = nullptr;
  for (const auto& s : kb.statements()) {
    if (const auto* st = std::get_if<Stat>(&s)) {
      if (found) return nullptr;
      found = st;
    }
  }
  return found;
}

bool same_vocabulary(const KbBuilder& a, const KbBuilder& b) {
  for (auto kind : {AtomKind::class_atom, AtomKind::property_atom, AtomKind::individual, AtomKind::sentence}) {
    if (a.vocabulary().names(kind) != b.vocabulary().names(kind)) return false;
  }
  return true;
}

// Grammar-driven generator: random declarations and statements with random
// spacing, comments, redundant parentheses and number spellings.
class TextGenerator {
 public:
  explicit TextGenerator(std::mt19937_64& rng) : rng_(rng) {}

  std::string document() {
    classes_ = names("c", pick(1, 3));
    props_ = names("p", pick(1, 3));
    inds_ = names("i", pick(1, 2));
    sentences_.clear();

    std::vector<std::string> decls;
    for (const auto& c : classes_) decls.push_back("class" + space() + c);
    for (const auto& p : props_) decls.push_back("property" + space() + p);
    for (const auto& i : inds_) decls.push_back("individual" + space() + i);
    std::shuffle(decls.begin(), decls.end(), rng_);
    for (int k = pick(0, 3); k > 0; --k) {
      std::string label = "S" + std::to_string(k);
      sentences_.push_back(label);
      decls.push_back("sentence " + label + " iff" + space() + prop(2) + space(0) + "(" + one(inds_) + ")");
    }

    std::vector<std::string> stmts;
    for (int k = pick(0, 6); k > 0; --k) stmts.push_back(stat());
    for (int k = pick(0, 3); k > 0; --k) stmts.push_back("member " + one(inds_) + " in" + space() + cls());
    for (int k = pick(0, 2); k > 0; --k) stmts.push_back("subset " + cls() + space() + "<" + space() + cls());
    if (sentences_.size() >= 2 && pick(0, 1)) stmts.push_back("equiv " + sentences_[0] + " " + sentences_[1]);
    std::shuffle(stmts.begin(), stmts.end(), rng_);

    std::string out;
    for (const auto& line : decls) out += decorate(line);
    for (const auto& line : stmts) out += decorate(line);
    return out;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  const std::string& one(const std::vector<std::string>& v) { return v[pick(0, static_cast<int>(v.size()) - 1)]; }

  static std::vector<std::string> names(const std::string& prefix, int n) {
    std::vector<std::string> v;
    for (int k = 0; k < n; ++k) v.push_back(prefix + std::to_string(k));
    return v;
  }

  std::string space(int min = 1) { return std::string(pick(min, 2), ' '); }

  std::string decorate(const std::string& line) {
    std::string out;
    if (pick(0, 5) == 0) out += "# note\n";
    if (pick(0, 5) == 0) out += "\n";
    out += std::string(pick(0, 1), ' ') + line + std::string(pick(0, 1), ' ');
    if (pick(0, 6) == 0) out += " # trailing";
    return out + "\n";
  }

  std::string cls() {
    std::string out = one(classes_);
    for (int k = pick(0, 2); k > 0; --k) out += space(0) + "&" + space(0) + one(classes_);
    return out;
  }

  std::string prop(int depth) {
    int choice = depth == 0 ? 0 : pick(0, 3);
    switch (choice) {
      case 0: return one(props_);
      case 1: return "!" + prop(depth - 1);
      case 2: return "(" + prop(depth - 1) + space(0) + "&" + space(0) + prop(depth - 1) + ")";
      default: return prop(depth - 1) + " & " + (pick(0, 1) ? "!" : "") + one(props_);
    }
  }

  std::string number(int tenths) {
    switch (pick(0, 2)) {
      case 0: return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
      case 1: return std::to_string(tenths) + "/10";
      default: return tenths == 10 ? "1" : tenths == 0 ? "0" : "0." + std::to_string(tenths) + "0";
    }
  }

  std::string stat() {
    std::string head = "stat %(" + cls() + "," + space() + prop(2) + ")";
    int a = pick(0, 10), b = pick(0, 10);
    if (pick(0, 1)) return head + " = " + number(a);
    return head + " in [" + number(std::min(a, b)) + "," + space() + number(std::max(a, b)) + "]";
  }

  std::mt19937_64& rng_;
  std::vector<std::string> classes_, props_, inds_, sentences_;
};

}  // namespace

TEST_CASE("parse_kb examples") {
  auto kb = dsl::parse_kb("class tosses\nproperty heads\nstat %(tosses, heads) = 0.5\n");
  const Stat* st = only_stat(kb);
  REQUIRE(st);
  CHECK(st->cls == CanonicalClass({"tosses"}));
  CHECK(st->prop == CanonicalProperty::atom("heads"));
  CHECK(st->interval == Interval::point(Rational(1, 2)));

  auto approx = dsl::parse_kb("class r\nproperty p\nstat %(r, p) in [0.4, 0.6]\n");
  REQUIRE(only_stat(approx));
  CHECK(only_stat(approx)->interval == Interval(Rational(2, 5), Rational(3, 5)));

  auto fraction = dsl::parse_kb("class r\nproperty p\nstat %(r, p) = 19/118\n");
  CHECK(only_stat(fraction)->interval == Interval::point(Rational(19, 118)));

  // U is built in and carries only default knowledge.
  CHECK_THROWS_AS(dsl::parse_kb("class r\nproperty p\nstat %(U, p) = 0.1\n"), dsl::ParseError);
}

TEST_CASE("parse_kb diagnostics") {
  const std::string text =
      "class tosses\nproperty heads\nindividual t14\n"
      "member t14 in tosses & by_sam\n";
  auto d = diagnostics_of(text);
  REQUIRE(d.size() == 1);
  CHECK(d[0].line == 4);
  CHECK(d[0].column == text.substr(text.find("member")).find("by_sam") + 1);
  CHECK(d[0].message.find("by_sam") != std::string::npos);

  SUBCASE("every bad line is reported") {
    auto all = diagnostics_of("class a\nclass a\nproperty p\nstat %(a, p) = 1.5\nstat %(a, p) in [0.6, 0.2]\nfrobnicate\n");
    REQUIRE(all.size() == 4);
    CHECK(all[0].line == 2);
    CHECK(all[1].line == 4);
    CHECK(all[1].column == 16);
    CHECK(all[2].line == 5);
    CHECK(all[2].message.find("malformed interval") != std::string::npos);
    CHECK(all[3] == dsl::Diagnostic{6, 1, "unknown keyword 'frobnicate'"});
  }
  SUBCASE("syntax errors") {
    CHECK(diagnostics_of("class a\nproperty p\nstat %(a p) = 0.1\n").at(0).column == 10);
    CHECK(diagnostics_of("class a\nproperty p\nstat %(a, p) = 0.1 extra\n").at(0).column == 20);
    CHECK(diagnostics_of("class class\n").at(0).column == 7);
    CHECK(diagnostics_of("class U\n").at(0).line == 1);
    CHECK(diagnostics_of("class a\nsubset a < a\n").at(0).line == 2);
    CHECK(diagnostics_of("property p\nindividual i\nsentence S iff p(i)\nsentence S iff p(i)\n").at(0).line == 4);
  }
  SUBCASE("diagnostics print as line:column") {
    CHECK(dsl::Diagnostic{3, 7, "oops"}.to_string() == "3:7: oops");
  }
}

TEST_CASE("parse_query") {
  auto kb = dsl::parse_kb_file(fixtures / "coin.rck");
  CHECK(dsl::parse_query("S14", kb) == "S14");

  std::string label = dsl::parse_query("heads(t14)", kb);
  CHECK(kb.anonymous_sentences().contains(label));
  CHECK(dsl::parse_query("heads (t14)", kb) == label);  // reused
  auto forms = close(kb).forms(label);
  REQUIRE(forms.size() == 1);
  CHECK(forms[0] == Form{CanonicalProperty::atom("heads"), "t14"});

  std::string bottom = dsl::parse_query("!heads & heads (t14)", kb);
  CHECK(close(kb).forms(bottom).at(0).prop == CanonicalProperty::bottom());

  CHECK_THROWS_AS(dsl::parse_query("tails(t14)", kb), dsl::ParseError);
  CHECK_THROWS_AS(dsl::parse_query("heads(t14", kb), dsl::ParseError);
  CHECK_THROWS_AS(dsl::parse_query("", kb), dsl::ParseError);
}

TEST_CASE("render") {
  auto coin = dsl::parse_kb_file(fixtures / "coin.rck");
  const auto golden = fixtures / "coin.golden.rck";
  if (std::getenv("REFCLASS_UPDATE_GOLDEN")) std::ofstream(golden, std::ios::binary) << dsl::render(coin);
  CHECK(dsl::render(coin) == read_file(golden));

  auto meet = dsl::parse_kb("class zeta\nclass alpha\nproperty p\nstat %(zeta & alpha, p) = 0.2\n");
  CHECK(dsl::render(meet).find("stat %(alpha & zeta, p) = 0.2\n") != std::string::npos);

  CHECK(dsl::render(dsl::parse_kb("")).empty());
  CHECK(dsl::render(dsl::parse_kb_file(fixtures / "empty.rck")).empty());

  // Anonymous query sentences are not part of the document.
  std::string before = dsl::render(coin);
  dsl::parse_query("!heads(t14)", coin);
  CHECK(dsl::render(coin) == before);

  SUBCASE("constant properties survive a round trip") {
    auto k = dsl::parse_kb("class r\nproperty p\nindividual i\nsentence T iff !(p & !p)(i)\nstat %(r, p & !p) = 0\n");
    auto again = dsl::parse_kb(dsl::render(k));
    CHECK(again.statements() == k.statements());
  }
}

TEST_CASE("fixtures survive a round trip") {
  for (const char* name : {"coin", "conflict", "subset", "nested", "bayes", "cyclic_subset", "empty"}) {
    CAPTURE(name);
    auto kb = dsl::parse_kb_file(fixtures / (std::string(name) + ".rck"));
    auto again = dsl::parse_kb(dsl::render(kb));
    CHECK(again.statements() == kb.statements());
    CHECK(same_vocabulary(again, kb));
  }
}

TEST_CASE("parse(render(parse(text))) = parse(text) on generated documents") {
  std::mt19937_64 rng(99);
  TextGenerator gen(rng);
  int parsed = 0, closed = 0;
  for (int k = 0; k < 400; ++k) {
    std::string text = gen.document();
    CAPTURE(text);
    KbBuilder first;
    try {
      first = dsl::parse_kb(text);
    } catch (const dsl::ParseError& e) {
      // Only semantic rejections are expected, e.g. a class below itself.
      for (const auto& d : e.diagnostics()) {
        CAPTURE(d.message);
        CHECK(d.message.find("itself") != std::string::npos);
      }
      continue;
    }
    ++parsed;
    std::string rendered = dsl::render(first);
    KbBuilder second = dsl::parse_kb(rendered);
    CHECK(second.statements() == first.statements());
    CHECK(same_vocabulary(second, first));
    CHECK(dsl::render(second) == rendered);
    std::optional<ClosedKB> a, b;
    try {
      a = close(first);
    } catch (const KbError&) {
    }
    try {
      b = close(second);
    } catch (const KbError&) {
    }
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      CHECK(same_closure(*a, *b));
      ++closed;
    }
  }
  CHECK(parsed > 200);
  CHECK(closed > 100);
}

TEST_CASE("random builders survive a round trip") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    auto g = testing::random_kb(rng, {});
    auto again = dsl::parse_kb(dsl::render(g.builder));
    CHECK(again.statements() == g.builder.statements());
  }
}

TEST_CASE("every mutated line is reported at its position") {
  std::mt19937_64 rng(11);
  TextGenerator gen(rng);
  const std::vector<std::string> junk = {"@", "stat", "%(", "member", "]", "0.5"};
  for (int k = 0; k < 200; ++k) {
    std::string text = gen.document();
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    std::size_t target = std::uniform_int_distribution<std::size_t>(0, lines.size() - 1)(rng);
    lines[target] = "class junk" + std::to_string(k) + " " + junk[k % junk.size()];
    std::string mutated;
    for (const auto& l : lines) mutated += l + "\n";
    auto d = diagnostics_of(mutated);
    CAPTURE(mutated);
    bool found = false;
    for (const auto& x : d) {
      CHECK(x.line >= 1);
      CHECK(x.column >= 1);
      if (x.line == target + 1) {
        found = true;
        CHECK(x.column == std::string("class junk" + std::to_string(k) + " ").size() + 1);
      }
    }
    CHECK(found);
  }
}
