#include "refclass/vocabulary.hpp"

#include "refclass/errors.hpp"

#include <cctype>

namespace refclass {

std::string_view kind_name(AtomKind kind) {
  switch (kind) {
    case AtomKind::class_atom: return "class";
    case AtomKind::property_atom: return "property";
    case AtomKind::individual: return "individual";
    case AtomKind::sentence: return "sentence";
  }
  return "?";
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : name.substr(1)) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

void Vocabulary::declare(AtomKind kind, const std::string& name) {
  if (name.empty()) throw DeclarationError(name, "empty identifier");
  if (kind == AtomKind::class_atom && name == "U") {
    throw DeclarationError(name, "class name 'U' is reserved for the universal class");
  }
  if (!slot(kind).insert(name).second) {
    throw DeclarationError(name, "duplicate " + std::string(kind_name(kind)) + " '" + name + "'");
  }
}

bool Vocabulary::has(AtomKind kind, std::string_view name) const { return names(kind).contains(name); }

void Vocabulary::require(AtomKind kind, std::string_view name) const {
  if (!has(kind, name)) {
    throw DeclarationError(std::string(name),
                           "undeclared " + std::string(kind_name(kind)) + " '" + std::string(name) + "'");
  }
}

const std::set<std::string, std::less<>>& Vocabulary::names(AtomKind kind) const {
  return const_cast<Vocabulary*>(this)->slot(kind);
}

std::set<std::string, std::less<>>& Vocabulary::slot(AtomKind kind) {
  switch (kind) {
    case AtomKind::class_atom: return classes_;
    case AtomKind::property_atom: return properties_;
    case AtomKind::individual: return individuals_;
    case AtomKind::sentence: return sentences_;
  }
  return sentences_;
}

}  // namespace refclass
