#pragma once

#include <set>
#include <string>
#include <string_view>

namespace refclass {

enum class AtomKind { class_atom, property_atom, individual, sentence };

std::string_view kind_name(AtomKind kind);

// Declared names, one namespace per kind. The class name "U" is reserved for
// the universal class.
class Vocabulary {
 public:
  // Throws DeclarationError on a duplicate or reserved name.
  void declare(AtomKind kind, const std::string& name);
  bool has(AtomKind kind, std::string_view name) const;
  // Throws DeclarationError naming the atom when it is not declared.
  void require(AtomKind kind, std::string_view name) const;

  const std::set<std::string, std::less<>>& names(AtomKind kind) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::set<std::string, std::less<>>& slot(AtomKind kind);

  std::set<std::string, std::less<>> classes_;
  std::set<std::string, std::less<>> properties_;
  std::set<std::string, std::less<>> individuals_;
  std::set<std::string, std::less<>> sentences_;
};

bool is_identifier(std::string_view name);

}  // namespace refclass
