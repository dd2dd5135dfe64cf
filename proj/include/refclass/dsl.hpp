#pragma once

// Text format for knowledge bases (.rck):
//
//   file      := line*            line := decl | stmt | comment ('#' ...)
//   decl      := "class" ID | "property" ID | "individual" ID
//              | "sentence" ID "iff" propexpr "(" ID ")"
//   stmt      := "stat" "%(" classexpr "," propexpr ")" ("=" NUM | "in" "[" NUM "," NUM "]")
//              | "member" ID "in" classexpr
//              | "subset" classexpr "<" classexpr
//              | "equiv" ID ID
//   classexpr := ID ("&" ID)*
//   propexpr  := unary ("&" unary)*     unary := "!" unary | ID | "(" propexpr ")"
//   NUM       := decimal in [0,1], or a fraction "n/d"
//
// Identifiers must be declared before use.

#include "refclass/kb.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace refclass::dsl {

struct Diagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;

  std::string to_string() const;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Parses a whole document. Every bad line contributes a diagnostic; any
// diagnostic makes the parse fail with ParseError.
KbBuilder parse_kb(std::string_view text);
// Throws std::runtime_error when the file cannot be read.
KbBuilder parse_kb_file(const std::filesystem::path& path);

// A declared sentence label, or an inline form such as "heads(t14)", which
// resolves to an anonymous sentence added to `kb`. Returns the label.
std::string parse_query(std::string_view text, KbBuilder& kb);

// Canonical document: declarations, then statements, each group sorted.
// Anonymous sentences are omitted.
std::string render(const KbBuilder& kb);

}  // namespace refclass::dsl
