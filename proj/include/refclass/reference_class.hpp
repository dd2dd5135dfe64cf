#pragma once

#include "refclass/vocabulary.hpp"

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace refclass {

// A reference class in canonical intersection form: the sorted, duplicate-free
// set of its atomic classes. The empty atom set is the universal class U.
class CanonicalClass {
 public:
  CanonicalClass() = default;  // U
  // Sorts and deduplicates.
  explicit CanonicalClass(std::vector<std::string> atoms);

  static CanonicalClass universal() { return CanonicalClass(); }

  const std::vector<std::string>& atoms() const { return atoms_; }
  bool is_universal() const { return atoms_.empty(); }

  CanonicalClass intersect(const CanonicalClass& other) const;

  // Every atom of `other` is an atom of this class, i.e. this ⊆ other as sets.
  bool atoms_include(const CanonicalClass& other) const;
  // Proper structural subclass: strictly more atoms than `other`, including all of them.
  bool structurally_below(const CanonicalClass& other) const;

  // "a & b", or "U".
  std::string to_string() const;

  friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
  friend auto operator<=>(const CanonicalClass&, const CanonicalClass&) = default;

 private:
  std::vector<std::string> atoms_;
};

// Class expression tree: an atom or the intersection of two expressions.
struct ClassExpr {
  std::string atom;  // set iff leaf
  std::unique_ptr<ClassExpr> left;
  std::unique_ptr<ClassExpr> right;

  static ClassExpr leaf(std::string name);
  static ClassExpr meet(ClassExpr l, ClassExpr r);
};

// Throws DeclarationError for an atom missing from `vocab`.
CanonicalClass canonicalize_class(const ClassExpr& expr, const Vocabulary& vocab);

}  // namespace refclass
