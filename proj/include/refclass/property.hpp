#pragma once

#include "refclass/vocabulary.hpp"

#include <compare>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace refclass {

// A property in semantic normal form: the sorted atoms the formula actually
// depends on, plus its truth table over them. Bit k of a row index is the
// value of atoms()[k]. Two formulas get the same form iff they are logically
// equivalent.
class CanonicalProperty {
 public:
  static constexpr std::size_t max_atoms = 16;

  static CanonicalProperty top();
  static CanonicalProperty bottom();
  static CanonicalProperty atom(std::string name);
  // Reduces away atoms the table does not depend on. Throws std::invalid_argument
  // on a size mismatch or too many atoms.
  static CanonicalProperty from_table(std::vector<std::string> atoms, std::vector<bool> table);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<bool>& table() const { return table_; }

  bool is_top() const { return atoms_.empty() && table_.front(); }
  bool is_bottom() const { return atoms_.empty() && !table_.front(); }

  CanonicalProperty negate() const;
  CanonicalProperty conjoin(const CanonicalProperty& other) const;

  bool evaluate(const std::function<bool(std::string_view)>& value_of) const;

  // An expression using only atoms, '!', '&' and parentheses that
  // canonicalizes back to this property. Constants need an atom to be
  // expressed in that syntax; `filler` is used for them.
  std::string to_expression(std::string_view filler) const;
  // Display form; constants print as "TRUE" / "FALSE".
  std::string to_string() const;

  friend bool operator==(const CanonicalProperty&, const CanonicalProperty&) = default;
  friend auto operator<=>(const CanonicalProperty&, const CanonicalProperty&) = default;

 private:
  CanonicalProperty(std::vector<std::string> atoms, std::vector<bool> table)
      : atoms_(std::move(atoms)), table_(std::move(table)) {}
  void reduce();

  std::vector<std::string> atoms_;
  std::vector<bool> table_;
};

struct PropExpr {
  enum class Kind { atom, negation, conjunction };
  Kind kind = Kind::atom;
  std::string atom;
  std::unique_ptr<PropExpr> left;  // operand of negation, or left conjunct
  std::unique_ptr<PropExpr> right;

  static PropExpr leaf(std::string name);
  static PropExpr negation(PropExpr operand);
  static PropExpr conjunction(PropExpr l, PropExpr r);
};

// Throws DeclarationError for undeclared atoms, std::invalid_argument when more
// than CanonicalProperty::max_atoms distinct atoms are mentioned.
CanonicalProperty canonicalize_property(const PropExpr& expr, const Vocabulary& vocab);

}  // namespace refclass
