#include "refclass/dsl.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace refclass::dsl {

std::string Diagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

namespace {

std::string join(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += "\n";
    out += d.to_string();
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace {

enum class Tok { ident, number, percent, lparen, rparen, comma, equals, lbracket, rbracket, amp, bang, less, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

// Raised inside a line; carries its own position.
struct LineError {
  std::size_t column;
  std::string message;
};

std::vector<Token> lex(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = i + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.' || line[j] == '/')) ++j;
      out.push_back({Tok::number, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '%': kind = Tok::percent; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      case '=': kind = Tok::equals; break;
      case '[': kind = Tok::lbracket; break;
      case ']': kind = Tok::rbracket; break;
      case '&': kind = Tok::amp; break;
      case '!': kind = Tok::bang; break;
      case '<': kind = Tok::less; break;
      default: throw LineError{col, "unexpected character '" + std::string(1, c) + "'"};
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::end, "", line.size() + 1});
  return out;
}

const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> k{"class", "property", "individual", "sentence", "iff",
                                                      "stat",  "member",   "in",         "subset",   "equiv"};
  return k;
}

std::string describe(const Token& t) { return t.kind == Tok::end ? "end of line" : "'" + t.text + "'"; }

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, KbBuilder& kb) : toks_(std::move(tokens)), kb_(kb) {}

  void statement() {
    if (peek().kind == Tok::end) return;
    const Token head = expect_ident("a declaration or statement");
    if (head.text == "class") {
      declare(AtomKind::class_atom);
    } else if (head.text == "property") {
      declare(AtomKind::property_atom);
    } else if (head.text == "individual") {
      declare(AtomKind::individual);
    } else if (head.text == "sentence") {
      sentence();
    } else if (head.text == "stat") {
      stat();
    } else if (head.text == "member") {
      const Token ind = name(AtomKind::individual);
      keyword("in");
      auto cls = class_expr();
      kb_.assert_statement(Member{ind.text, cls});
    } else if (head.text == "subset") {
      const std::size_t col = peek().column;
      auto sub = class_expr();
      expect(Tok::less, "'<'");
      auto super = class_expr();
      if (sub == super) throw LineError{col, "subset of a class with itself: " + sub.to_string()};
      kb_.assert_statement(Subset{sub, super});
    } else if (head.text == "equiv") {
      const Token a = name(AtomKind::sentence);
      const Token b = name(AtomKind::sentence);
      kb_.assert_statement(SentenceEquiv{a.text, b.text});
    } else {
      throw LineError{head.column, "unknown keyword '" + head.text + "'"};
    }
    finish();
  }

  // Query: a sentence label, or propexpr "(" individual ")".
  std::string query() {
    if (peek().kind == Tok::ident && toks_[pos_ + 1].kind == Tok::end) {
      const Token t = name(AtomKind::sentence);
      return t.text;
    }
    auto [prop, ind] = form();
    finish();
    return kb_.anonymous_sentence(prop, ind);
  }

  void finish() {
    if (peek().kind != Tok::end) throw LineError{peek().column, "unexpected " + describe(peek())};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw LineError{peek().column, "expected " + what + ", found " + describe(peek())};
    return next();
  }

  Token expect_ident(const std::string& what) { return expect(Tok::ident, what); }

  void keyword(std::string_view kw) {
    if (peek().kind != Tok::ident || peek().text != kw) {
      throw LineError{peek().column, "expected '" + std::string(kw) + "', found " + describe(peek())};
    }
    next();
  }

  // An identifier that must be declared with `kind`.
  Token name(AtomKind kind) {
    Token t = expect_ident(std::string(kind_name(kind)) + " name");
    if (keywords().contains(t.text)) throw LineError{t.column, "keyword '" + t.text + "' used as a name"};
    if (!kb_.vocabulary().has(kind, t.text)) {
      throw LineError{t.column, "undeclared " + std::string(kind_name(kind)) + " '" + t.text + "'"};
    }
    return t;
  }

  void declare(AtomKind kind) {
    Token t = expect_ident(std::string(kind_name(kind)) + " name");
    if (keywords().contains(t.text)) throw LineError{t.column, "keyword '" + t.text + "' cannot be declared"};
    try {
      kb_.declare(kind, t.text);
    } catch (const DeclarationError& e) {
      throw LineError{t.column, e.what()};
    }
  }

  void sentence() {
    Token label = expect_ident("sentence name");
    if (keywords().contains(label.text)) throw LineError{label.column, "keyword '" + label.text + "' cannot be declared"};
    if (kb_.vocabulary().has(AtomKind::sentence, label.text)) {
      throw LineError{label.column, "duplicate sentence '" + label.text + "'"};
    }
    keyword("iff");
    auto [prop, ind] = form();
    finish();
    kb_.declare_sentence(label.text, prop, ind);
  }

  std::pair<CanonicalProperty, std::string> form() {
    PropExpr e = prop_expr();
    expect(Tok::lparen, "'(' before the individual");
    const Token ind = name(AtomKind::individual);
    expect(Tok::rparen, "')'");
    return {canonicalize_property(e, kb_.vocabulary()), ind.text};
  }

  void stat() {
    expect(Tok::percent, "'%'");
    expect(Tok::lparen, "'('");
    auto cls = class_expr();
    expect(Tok::comma, "','");
    auto prop = canonicalize_property(prop_expr(), kb_.vocabulary());
    expect(Tok::rparen, "')'");
    if (peek().kind == Tok::equals) {
      next();
      auto x = number();
      kb_.assert_statement(Stat{cls, prop, Interval::point(x)});
      return;
    }
    keyword("in");
    const Token open = expect(Tok::lbracket, "'['");
    auto lo = number();
    expect(Tok::comma, "','");
    auto hi = number();
    expect(Tok::rbracket, "']'");
    if (lo > hi) {
      throw LineError{open.column, "malformed interval [" + to_string(lo) + ", " + to_string(hi) + "]: lower bound exceeds upper"};
    }
    kb_.assert_statement(Stat{cls, prop, Interval(lo, hi)});
  }

  Rational number() {
    const Token t = expect(Tok::number, "a number");
    Rational x;
    try {
      x = parse_rational(t.text);
    } catch (const std::invalid_argument& e) {
      throw LineError{t.column, e.what()};
    }
    if (x > 1) throw LineError{t.column, "number " + t.text + " is outside [0, 1]"};
    return x;
  }

  CanonicalClass class_expr() {
    std::vector<std::string> atoms{name(AtomKind::class_atom).text};
    while (peek().kind == Tok::amp) {
      next();
      atoms.push_back(name(AtomKind::class_atom).text);
    }
    return CanonicalClass(std::move(atoms));
  }

  PropExpr prop_expr() {
    PropExpr e = unary();
    while (peek().kind == Tok::amp) {
      next();
      e = PropExpr::conjunction(std::move(e), unary());
    }
    return e;
  }

  PropExpr unary() {
    if (peek().kind == Tok::bang) {
      next();
      return PropExpr::negation(unary());
    }
    if (peek().kind == Tok::lparen) {
      next();
      PropExpr e = prop_expr();
      expect(Tok::rparen, "')'");
      return e;
    }
    return PropExpr::leaf(name(AtomKind::property_atom).text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  KbBuilder& kb_;
};

}  // namespace

KbBuilder parse_kb(std::string_view text) {
  KbBuilder kb;
  std::vector<Diagnostic> errors;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    auto line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    try {
      LineParser(lex(line), kb).statement();
    } catch (const LineError& e) {
      errors.push_back({line_no, e.column, e.message});
    } catch (const KbError& e) {
      errors.push_back({line_no, 1, e.what()});
    } catch (const std::invalid_argument& e) {
      errors.push_back({line_no, 1, e.what()});
    }
    start = stop + 1;
  }
  if (!errors.empty()) throw ParseError(std::move(errors));
  return kb;
}

KbBuilder parse_kb_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kb(buf.str());
}

std::string parse_query(std::string_view text, KbBuilder& kb) {
  if (text.find('\n') != std::string_view::npos) throw ParseError({{1, text.find('\n') + 1, "query must be one line"}});
  try {
    return LineParser(lex(text), kb).query();
  } catch (const LineError& e) {
    throw ParseError({{1, e.column, e.message}});
  } catch (const KbError& e) {
    throw ParseError({{1, 1, e.what()}});
  } catch (const std::invalid_argument& e) {
    throw ParseError({{1, 1, e.what()}});
  }
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string render_number(const Rational& x) { return to_decimal_or_fraction(x); }

}  // namespace

std::string render(const KbBuilder& kb) {
  const auto& vocab = kb.vocabulary();
  const auto& props = vocab.names(AtomKind::property_atom);
  const std::string filler = props.empty() ? std::string() : *props.begin();
  auto prop_text = [&](const CanonicalProperty& p) {
    if (p.atoms().empty() && filler.empty()) {
      throw std::logic_error("cannot render a constant property without any declared property atom");
    }
    return p.to_expression(filler);
  };
  const auto& anon = kb.anonymous_sentences();

  std::ostringstream out;
  for (const auto& n : vocab.names(AtomKind::class_atom)) out << "class " << n << "\n";
  for (const auto& n : props) out << "property " << n << "\n";
  for (const auto& n : vocab.names(AtomKind::individual)) out << "individual " << n << "\n";

  std::set<std::string> with_form;
  for (const auto& s : kb.statements()) {
    const auto* f = std::get_if<SentenceForm>(&s);
    if (!f || anon.contains(f->sentence)) continue;
    with_form.insert(f->sentence);
    std::string expr = prop_text(f->prop);
    if (f->prop.atoms().size() != 1 || !f->prop.table()[1]) expr = "(" + expr + ")";
    out << "sentence " << f->sentence << " iff " << expr << "(" << f->individual << ")\n";
  }
  for (const auto& n : vocab.names(AtomKind::sentence)) {
    if (!anon.contains(n) && !with_form.contains(n)) {
      throw std::logic_error("sentence '" + n + "' has no form and cannot be rendered");
    }
  }

  for (const auto& s : kb.statements()) {
    if (const auto* st = std::get_if<Stat>(&s)) {
      out << "stat %(" << st->cls.to_string() << ", " << prop_text(st->prop) << ")";
      if (st->interval.is_point()) {
        out << " = " << render_number(st->interval.lo()) << "\n";
      } else {
        out << " in [" << render_number(st->interval.lo()) << ", " << render_number(st->interval.hi()) << "]\n";
      }
    } else if (const auto* m = std::get_if<Member>(&s)) {
      out << "member " << m->individual << " in " << m->cls.to_string() << "\n";
    } else if (const auto* sub = std::get_if<Subset>(&s)) {
      out << "subset " << sub->sub.to_string() << " < " << sub->super.to_string() << "\n";
    } else if (const auto* e = std::get_if<SentenceEquiv>(&s)) {
      if (anon.contains(e->first) || anon.contains(e->second)) continue;
      out << "equiv " << e->first << " " << e->second << "\n";
    }
  }
  return out.str();
}

}  // namespace refclass::dsl
