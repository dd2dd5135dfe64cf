#pragma once

#include "refclass/errors.hpp"
#include "refclass/statement.hpp"
#include "refclass/vocabulary.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace refclass {

// The sentence-forming part of a SentenceForm: prop(individual).
struct Form {
  CanonicalProperty prop;
  std::string individual;

  std::string to_string() const;

  friend bool operator==(const Form&, const Form&) = default;
  friend auto operator<=>(const Form&, const Form&) = default;
};

// Single-writer accumulator for declarations and statements.
class KbBuilder {
 public:
  void declare(AtomKind kind, const std::string& name);
  void declare_class(const std::string& name) { declare(AtomKind::class_atom, name); }
  void declare_property(const std::string& name) { declare(AtomKind::property_atom, name); }
  void declare_individual(const std::string& name) { declare(AtomKind::individual, name); }
  // Declares the label and records its SentenceForm.
  void declare_sentence(const std::string& name, const CanonicalProperty& prop, const std::string& individual);

  // Validates and records `s`. Re-asserting an existing statement is a no-op.
  // Throws DeclarationError or ValidationError.
  void assert_statement(Statement s);
  // Convenience for Stat; an invalid interval raises ValidationError.
  void assert_stat(const CanonicalClass& cls, const CanonicalProperty& prop, const Rational& lo, const Rational& hi);

  // The label of the anonymous sentence for prop(individual), creating it on
  // first use. Anonymous labels are not identifiers and are never rendered.
  std::string anonymous_sentence(const CanonicalProperty& prop, const std::string& individual);

  const Vocabulary& vocabulary() const { return vocab_; }
  const std::set<Statement>& statements() const { return statements_; }
  const std::set<std::string>& anonymous_sentences() const { return anonymous_; }

 private:
  void require_class(const CanonicalClass& cls) const;
  void require_property(const CanonicalProperty& prop) const;

  Vocabulary vocab_;
  std::set<Statement> statements_;
  std::map<std::string, Form> forms_;
  std::set<std::string> anonymous_;
};

// The knowledge base after deductive closure. Immutable.
enum class Fusion {
  strict,   // an empty fused interval raises InconsistencyError
  lenient,  // empty fused pairs are left out of fused_stats(); for model search only
};

class ClosedKB {
 public:
  using StatKey = std::pair<CanonicalClass, CanonicalProperty>;

  const Vocabulary& vocabulary() const { return vocab_; }
  const std::set<Statement>& statements() const { return statements_; }

  // Intersection-closed, always contains U. Throws DeclarationError for an
  // undeclared individual.
  const std::set<CanonicalClass>& memberships(const std::string& individual) const;

  // Closed proper-subclass relation: structural (more atoms) plus asserted,
  // transitively closed, never reflexive.
  bool subset_known(const CanonicalClass& sub, const CanonicalClass& super) const;
  // True when some class is derivably a proper subclass of itself.
  bool subset_cycle(const CanonicalClass& cls) const;

  // Fused statistics, defaulting to [0,1] ([1,1] for TRUE, [0,0] for FALSE).
  Interval effective_interval(const CanonicalClass& cls, const CanonicalProperty& prop) const;
  // True when a statistic for (cls, prop) or (cls, ¬prop) was asserted.
  bool has_asserted_stat(const CanonicalClass& cls, const CanonicalProperty& prop) const;
  const std::map<StatKey, Interval>& fused_stats() const { return stats_; }

  // Reference classes mentioned in K or in a membership closure, plus U.
  const std::set<CanonicalClass>& classes() const { return classes_; }
  // subset_known restricted to classes().
  std::set<std::pair<CanonicalClass, CanonicalClass>> subset_pairs() const;
  const std::vector<Subset>& asserted_subsets() const { return asserted_subsets_; }

  bool has_sentence(const std::string& label) const { return sentence_rep_.contains(label); }
  // Sorted labels of the equivalence class of `label` (just {label} if unknown).
  std::vector<std::string> equivalent_sentences(const std::string& label) const;
  // Distinct forms of all sentences equivalent to `label`, sorted.
  std::vector<Form> forms(const std::string& label) const;
  // The equivalence classes of all declared sentences, each sorted.
  std::vector<std::vector<std::string>> sentence_partition() const;

  const std::set<std::string>& anonymous_sentences() const { return anonymous_; }

  // Re-expresses the closure as statements, derived facts included.
  KbBuilder to_builder() const;

  // Equality of the derived structure (vocabulary, memberships, subsets,
  // partition, fused stats); asserted statement lists may differ.
  friend bool same_closure(const ClosedKB& a, const ClosedKB& b);

 private:
  friend ClosedKB close(const KbBuilder& builder, Fusion fusion);

  Vocabulary vocab_;
  std::set<Statement> statements_;
  std::set<std::string> anonymous_;
  std::map<std::string, std::set<CanonicalClass>, std::less<>> memberships_;
  std::vector<Subset> asserted_subsets_;
  std::set<CanonicalClass> classes_;
  std::map<std::string, std::string> sentence_rep_;
  std::map<std::string, std::vector<std::string>> sentence_members_;  // rep -> labels
  std::map<std::string, Form> sentence_forms_;
  std::map<StatKey, Interval> stats_;
  std::set<StatKey> asserted_keys_;
};

// Computes memberships under intersection, the subset relation, the sentence
// partition and fused statistics. Throws InconsistencyError when a fused
// interval is empty, ValidationError when an equivalence names a sentence
// without a form.
ClosedKB close(const KbBuilder& builder, Fusion fusion = Fusion::strict);

inline const std::set<CanonicalClass>& known_memberships(const ClosedKB& kb, const std::string& individual) {
  return kb.memberships(individual);
}
inline bool subset_known(const ClosedKB& kb, const CanonicalClass& sub, const CanonicalClass& super) {
  return kb.subset_known(sub, super);
}
inline Interval effective_interval(const ClosedKB& kb, const CanonicalClass& cls, const CanonicalProperty& prop) {
  return kb.effective_interval(cls, prop);
}

// [1,1] for TRUE, [0,0] for FALSE, [0,1] otherwise.
Interval default_interval(const CanonicalProperty& prop);

}  // namespace refclass
