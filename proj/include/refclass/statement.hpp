#pragma once

#include "refclass/interval.hpp"
#include "refclass/property.hpp"
#include "refclass/reference_class.hpp"

#include <string>
#include <tuple>
#include <variant>

namespace refclass {

// %(cls, prop) ∈ interval
struct Stat {
  CanonicalClass cls;
  CanonicalProperty prop;
  Interval interval;

  friend bool operator==(const Stat&, const Stat&) = default;
  friend bool operator<(const Stat& a, const Stat& b) {
    return std::tie(a.cls, a.prop, a.interval) < std::tie(b.cls, b.prop, b.interval);
  }
};

// individual ∈ cls
struct Member {
  std::string individual;
  CanonicalClass cls;

  friend bool operator==(const Member&, const Member&) = default;
  friend auto operator<=>(const Member&, const Member&) = default;
};

// sub ⊂ super (proper inclusion)
struct Subset {
  CanonicalClass sub;
  CanonicalClass super;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;
};

// sentence ↔ prop(individual)
struct SentenceForm {
  std::string sentence;
  CanonicalProperty prop;
  std::string individual;

  friend bool operator==(const SentenceForm&, const SentenceForm&) = default;
  friend auto operator<=>(const SentenceForm&, const SentenceForm&) = default;
};

// first ↔ second
struct SentenceEquiv {
  std::string first;
  std::string second;

  friend bool operator==(const SentenceEquiv&, const SentenceEquiv&) = default;
  friend auto operator<=>(const SentenceEquiv&, const SentenceEquiv&) = default;
};

using Statement = std::variant<Stat, Member, Subset, SentenceForm, SentenceEquiv>;

}  // namespace refclass
