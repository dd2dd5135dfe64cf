#pragma once

#include "refclass/kb.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace refclass {

struct SanityIssue {
  enum class Severity { violation, warning };
  Severity severity;
  std::string code;  // e.g. "subset-cycle"
  std::string message;
};

struct SanityReport {
  std::vector<SanityIssue> issues;

  bool passed() const;
  std::vector<SanityIssue> violations() const;
  std::vector<SanityIssue> warnings() const;
};

// Fast necessary conditions for the existence of a model.
SanityReport sanity_check(const ClosedKB& kb);
// Same, but an inconsistency raised while closing becomes a violation.
SanityReport sanity_check(const KbBuilder& builder);

// A finite population. Each element carries one bit per class atom and per
// property atom; individuals name distinct elements.
struct FiniteModel {
  struct Element {
    std::vector<bool> classes;     // parallel to class_atoms
    std::vector<bool> properties;  // parallel to property_atoms

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
  };

  std::vector<std::string> class_atoms;
  std::vector<std::string> property_atoms;
  std::vector<Element> elements;
  std::map<std::string, std::size_t> individual_map;

  std::size_t size() const { return elements.size(); }
  bool in_class(std::size_t element, const CanonicalClass& cls) const;
  bool has_property(std::size_t element, const CanonicalProperty& prop) const;

  friend bool operator==(const FiniteModel&, const FiniteModel&) = default;
};

// Classes whose extensions must be non-empty and pairwise distinct: those in
// asserted statements and in membership closures, U excluded.
std::set<CanonicalClass> constrained_classes(const ClosedKB& kb);
// Properties of Stat and SentenceForm statements; extensions pairwise distinct.
std::set<CanonicalProperty> constrained_properties(const ClosedKB& kb);

// Searches populations of size 1..max_size, smallest first, and returns the
// first model in canonical order (elements sorted by bit pattern). nullopt
// means no model within the bound, not inconsistency.
std::optional<FiniteModel> find_model(const ClosedKB& kb, std::size_t max_size);
// Also searches KBs that close() rejects, e.g. contradictory statistics.
std::optional<FiniteModel> find_model(const KbBuilder& builder, std::size_t max_size);

// Checks every statement of `kb` against `model` element by element.
bool verify_model(const ClosedKB& kb, const FiniteModel& model);

}  // namespace refclass
