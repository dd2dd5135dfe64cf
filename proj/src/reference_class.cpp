#include "refclass/reference_class.hpp"

#include <algorithm>
#include <iterator>

namespace refclass {

CanonicalClass::CanonicalClass(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

CanonicalClass CanonicalClass::intersect(const CanonicalClass& other) const {
  CanonicalClass out;
  std::set_union(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(),
                 std::back_inserter(out.atoms_));
  return out;
}

bool CanonicalClass::atoms_include(const CanonicalClass& other) const {
  return std::includes(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end());
}

bool CanonicalClass::structurally_below(const CanonicalClass& other) const {
  return atoms_.size() > other.atoms_.size() && atoms_include(other);
}

std::string CanonicalClass::to_string() const {
  if (atoms_.empty()) return "U";
  std::string out = atoms_.front();
  for (std::size_t i = 1; i < atoms_.size(); ++i) out += " & " + atoms_[i];
  return out;
}

ClassExpr ClassExpr::leaf(std::string name) {
  ClassExpr e;
  e.atom = std::move(name);
  return e;
}

ClassExpr ClassExpr::meet(ClassExpr l, ClassExpr r) {
  ClassExpr e;
  e.left = std::make_unique<ClassExpr>(std::move(l));
  e.right = std::make_unique<ClassExpr>(std::move(r));
  return e;
}

namespace {

void collect(const ClassExpr& expr, const Vocabulary& vocab, std::vector<std::string>& out) {
  if (!expr.left) {
    vocab.require(AtomKind::class_atom, expr.atom);
    out.push_back(expr.atom);
    return;
  }
  collect(*expr.left, vocab, out);
  collect(*expr.right, vocab, out);
}

}  // namespace

CanonicalClass canonicalize_class(const ClassExpr& expr, const Vocabulary& vocab) {
  std::vector<std::string> atoms;
  collect(expr, vocab, atoms);
  return CanonicalClass(std::move(atoms));
}

}  // namespace refclass
