#include "refclass/property.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace refclass {

namespace {

std::size_t index_of(const std::vector<std::string>& atoms, std::string_view name) {
  return static_cast<std::size_t>(std::lower_bound(atoms.begin(), atoms.end(), name) - atoms.begin());
}

// Row of `sub` corresponding to `row` of a table over `super` (sub's atoms ⊆ super's).
std::size_t project(std::size_t row, const std::vector<std::string>& super, const std::vector<std::string>& sub) {
  std::size_t out = 0;
  for (std::size_t k = 0; k < sub.size(); ++k) {
    if (row >> index_of(super, sub[k]) & 1U) out |= std::size_t{1} << k;
  }
  return out;
}

}  // namespace

CanonicalProperty CanonicalProperty::top() { return CanonicalProperty({}, {true}); }
CanonicalProperty CanonicalProperty::bottom() { return CanonicalProperty({}, {false}); }
CanonicalProperty CanonicalProperty::atom(std::string name) { return CanonicalProperty({std::move(name)}, {false, true}); }

CanonicalProperty CanonicalProperty::from_table(std::vector<std::string> atoms, std::vector<bool> table) {
  if (atoms.size() > max_atoms) throw std::invalid_argument("property mentions too many atoms");
  if (!std::is_sorted(atoms.begin(), atoms.end()) ||
      std::adjacent_find(atoms.begin(), atoms.end()) != atoms.end()) {
    throw std::invalid_argument("property atoms must be sorted and distinct");
  }
  if (table.size() != (std::size_t{1} << atoms.size())) throw std::invalid_argument("truth table size mismatch");
  CanonicalProperty p(std::move(atoms), std::move(table));
  p.reduce();
  return p;
}

void CanonicalProperty::reduce() {
  for (std::size_t k = atoms_.size(); k-- > 0;) {
    const std::size_t bit = std::size_t{1} << k;
    bool relevant = false;
    for (std::size_t row = 0; row < table_.size() && !relevant; ++row) {
      if (!(row & bit) && table_[row] != table_[row | bit]) relevant = true;
    }
    if (relevant) continue;
    std::vector<bool> smaller;
    smaller.reserve(table_.size() / 2);
    for (std::size_t row = 0; row < table_.size(); ++row) {
      if (!(row & bit)) smaller.push_back(table_[row]);
    }
    // Dropping bit k shifts the higher bits down, matching the erased atom.
    table_ = std::move(smaller);
    atoms_.erase(atoms_.begin() + static_cast<std::ptrdiff_t>(k));
  }
}

CanonicalProperty CanonicalProperty::negate() const {
  CanonicalProperty out = *this;
  out.table_.flip();
  return out;
}

CanonicalProperty CanonicalProperty::conjoin(const CanonicalProperty& other) const {
  std::vector<std::string> merged;
  std::set_union(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(),
                 std::back_inserter(merged));
  if (merged.size() > max_atoms) throw std::invalid_argument("property mentions too many atoms");
  std::vector<bool> table(std::size_t{1} << merged.size());
  for (std::size_t row = 0; row < table.size(); ++row) {
    table[row] = table_[project(row, merged, atoms_)] && other.table_[project(row, merged, other.atoms_)];
  }
  CanonicalProperty out(std::move(merged), std::move(table));
  out.reduce();
  return out;
}

bool CanonicalProperty::evaluate(const std::function<bool(std::string_view)>& value_of) const {
  std::size_t row = 0;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (value_of(atoms_[k])) row |= std::size_t{1} << k;
  }
  return table_[row];
}

namespace {

std::string minterm(const std::vector<std::string>& atoms, std::size_t row) {
  std::string out;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (!out.empty()) out += " & ";
    if (!(row >> k & 1U)) out += "!";
    out += atoms[k];
  }
  return out;
}

std::string parenthesize(const std::string& s, bool needed) { return needed ? "(" + s + ")" : s; }

}  // namespace

std::string CanonicalProperty::to_expression(std::string_view filler) const {
  if (atoms_.empty()) {
    std::string a(filler);
    return table_.front() ? "!(" + a + " & !" + a + ")" : a + " & !" + a;
  }
  std::vector<std::size_t> truthy;
  std::vector<std::size_t> falsy;
  for (std::size_t row = 0; row < table_.size(); ++row) (table_[row] ? truthy : falsy).push_back(row);
  const bool multi = atoms_.size() > 1;
  if (truthy.size() == 1) return minterm(atoms_, truthy.front());
  if (falsy.size() == 1) return "!" + parenthesize(minterm(atoms_, falsy.front()), multi);
  std::string out;
  if (truthy.size() <= falsy.size()) {
    // Disjunction of minterms, written as a negated conjunction of negations.
    for (auto row : truthy) {
      if (!out.empty()) out += " & ";
      out += "!" + parenthesize(minterm(atoms_, row), multi);
    }
    return "!(" + out + ")";
  }
  for (auto row : falsy) {
    if (!out.empty()) out += " & ";
    out += "!" + parenthesize(minterm(atoms_, row), multi);
  }
  return out;
}

std::string CanonicalProperty::to_string() const {
  if (is_top()) return "TRUE";
  if (is_bottom()) return "FALSE";
  return to_expression("");
}

PropExpr PropExpr::leaf(std::string name) {
  PropExpr e;
  e.atom = std::move(name);
  return e;
}

PropExpr PropExpr::negation(PropExpr operand) {
  PropExpr e;
  e.kind = Kind::negation;
  e.left = std::make_unique<PropExpr>(std::move(operand));
  return e;
}

PropExpr PropExpr::conjunction(PropExpr l, PropExpr r) {
  PropExpr e;
  e.kind = Kind::conjunction;
  e.left = std::make_unique<PropExpr>(std::move(l));
  e.right = std::make_unique<PropExpr>(std::move(r));
  return e;
}

namespace {

void collect_atoms(const PropExpr& e, const Vocabulary& vocab, std::vector<std::string>& out) {
  switch (e.kind) {
    case PropExpr::Kind::atom:
      vocab.require(AtomKind::property_atom, e.atom);
      out.push_back(e.atom);
      return;
    case PropExpr::Kind::negation:
      collect_atoms(*e.left, vocab, out);
      return;
    case PropExpr::Kind::conjunction:
      collect_atoms(*e.left, vocab, out);
      collect_atoms(*e.right, vocab, out);
      return;
  }
}

bool eval(const PropExpr& e, const std::vector<std::string>& atoms, std::size_t row) {
  switch (e.kind) {
    case PropExpr::Kind::atom: return row >> index_of(atoms, e.atom) & 1U;
    case PropExpr::Kind::negation: return !eval(*e.left, atoms, row);
    case PropExpr::Kind::conjunction: return eval(*e.left, atoms, row) && eval(*e.right, atoms, row);
  }
  return false;
}

}  // namespace

CanonicalProperty canonicalize_property(const PropExpr& expr, const Vocabulary& vocab) {
  std::vector<std::string> atoms;
  collect_atoms(expr, vocab, atoms);
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  if (atoms.size() > CanonicalProperty::max_atoms) throw std::invalid_argument("property mentions too many atoms");
  std::vector<bool> table(std::size_t{1} << atoms.size());
  for (std::size_t row = 0; row < table.size(); ++row) table[row] = eval(expr, atoms, row);
  return CanonicalProperty::from_table(std::move(atoms), std::move(table));
}

}  // namespace refclass
