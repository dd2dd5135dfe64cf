#include "refclass/consistency.hpp"

#include "refclass/inference.hpp"

#include <algorithm>
#include <stdexcept>

namespace refclass {

bool SanityReport::passed() const { return violations().empty(); }

std::vector<SanityIssue> SanityReport::violations() const {
  std::vector<SanityIssue> out;
  std::copy_if(issues.begin(), issues.end(), std::back_inserter(out),
               [](const SanityIssue& i) { return i.severity == SanityIssue::Severity::violation; });
  return out;
}

std::vector<SanityIssue> SanityReport::warnings() const {
  std::vector<SanityIssue> out;
  std::copy_if(issues.begin(), issues.end(), std::back_inserter(out),
               [](const SanityIssue& i) { return i.severity == SanityIssue::Severity::warning; });
  return out;
}

SanityReport sanity_check(const ClosedKB& kb) {
  SanityReport report;
  auto violation = [&](std::string code, std::string msg) {
    report.issues.push_back({SanityIssue::Severity::violation, std::move(code), std::move(msg)});
  };

  // Fused statistics are re-derived from the asserted ones.
  std::map<ClosedKB::StatKey, std::optional<Interval>> fused;
  for (const auto& s : kb.statements()) {
    const auto* st = std::get_if<Stat>(&s);
    if (!st) continue;
    for (const auto& [prop, iv] : {std::pair{st->prop, st->interval}, std::pair{st->prop.negate(), st->interval.reflect()}}) {
      auto [it, fresh] = fused.try_emplace({st->cls, prop}, default_interval(prop));
      if (it->second) it->second = it->second->intersect(iv);
    }
  }
  for (const auto& [key, iv] : fused) {
    if (!iv) {
      violation("empty-statistics",
                "no proportion satisfies the statistics for %(" + key.first.to_string() + ", " + key.second.to_string() + ")");
    }
  }

  std::set<CanonicalClass> cyclic;
  for (const auto& sub : kb.asserted_subsets()) {
    for (const auto* cls : {&sub.sub, &sub.super}) {
      if (!cyclic.contains(*cls) && kb.subset_cycle(*cls)) {
        cyclic.insert(*cls);
        violation("subset-cycle", "class " + cls->to_string() + " is derivably a proper subclass of itself");
      }
    }
  }

  // Two forms of one sentence class that are negations of each other about
  // the same individual cannot share a truth value.
  for (const auto& members : kb.sentence_partition()) {
    auto forms = kb.forms(members.front());
    for (std::size_t a = 0; a < forms.size(); ++a) {
      for (std::size_t b = a + 1; b < forms.size(); ++b) {
        if (forms[a].individual == forms[b].individual && forms[a].prop == forms[b].prop.negate()) {
          violation("contradictory-forms", "equivalent sentences assert " + forms[a].to_string() + " and " +
                                               forms[b].to_string());
        }
      }
    }
  }

  // Equivalent sentences must receive the same probability. Resolution
  // presumes an acyclic subset relation, so this waits for one.
  for (const auto& members : kb.sentence_partition()) {
    if (!cyclic.empty() || kb.forms(members.front()).size() < 2) continue;
    for (auto mode : {Mode::interval, Mode::point}) {
      if (prob(kb, members.front(), mode).reason == UndefinedReason::conflicting_equivalent_forms) {
        std::string labels;
        for (const auto& m : members) labels += (labels.empty() ? "" : ", ") + m;
        violation("conflicting-equivalent-forms", "equivalent sentences {" + labels + "} get different " +
                                                      std::string(mode_name(mode)) + "-mode probabilities");
        break;
      }
    }
  }

  for (const auto& ind : kb.vocabulary().names(AtomKind::individual)) {
    const auto& mine = kb.memberships(ind);
    for (const auto& have : mine) {
      for (const auto& cls : kb.classes()) {
        if (cls.is_universal() || mine.contains(cls) || !kb.subset_known(have, cls)) continue;
        report.issues.push_back({SanityIssue::Severity::warning, "derivable-membership",
                                 ind + " is in " + have.to_string() + " and " + have.to_string() + " < " +
                                     cls.to_string() + ", but '" + ind + " in " + cls.to_string() +
                                     "' is not in the knowledge base"});
      }
    }
  }
  return report;
}

SanityReport sanity_check(const KbBuilder& builder) {
  try {
    return sanity_check(close(builder));
  } catch (const InconsistencyError& e) {
    return SanityReport{{{SanityIssue::Severity::violation, "empty-statistics", e.what()}}};
  } catch (const ValidationError& e) {
    return SanityReport{{{SanityIssue::Severity::violation, "invalid", e.what()}}};
  }
}

// ---------------------------------------------------------------------------
// Models

namespace {

bool bit_for(const std::vector<std::string>& atoms, const std::vector<bool>& bits, std::string_view atom) {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), atom);
  if (it == atoms.end() || *it != atom) return false;
  return bits[static_cast<std::size_t>(it - atoms.begin())];
}

}  // namespace

bool FiniteModel::in_class(std::size_t element, const CanonicalClass& cls) const {
  const auto& e = elements.at(element);
  return std::all_of(cls.atoms().begin(), cls.atoms().end(),
                     [&](const std::string& a) { return bit_for(class_atoms, e.classes, a); });
}

bool FiniteModel::has_property(std::size_t element, const CanonicalProperty& prop) const {
  const auto& e = elements.at(element);
  return prop.evaluate([&](std::string_view a) { return bit_for(property_atoms, e.properties, a); });
}

std::set<CanonicalClass> constrained_classes(const ClosedKB& kb) {
  std::set<CanonicalClass> out;
  for (const auto& s : kb.statements()) {
    if (const auto* st = std::get_if<Stat>(&s)) out.insert(st->cls);
    if (const auto* m = std::get_if<Member>(&s)) out.insert(m->cls);
    if (const auto* sub = std::get_if<Subset>(&s)) {
      out.insert(sub->sub);
      out.insert(sub->super);
    }
  }
  for (const auto& ind : kb.vocabulary().names(AtomKind::individual)) {
    const auto& m = kb.memberships(ind);
    out.insert(m.begin(), m.end());
  }
  out.erase(CanonicalClass::universal());
  return out;
}

std::set<CanonicalProperty> constrained_properties(const ClosedKB& kb) {
  std::set<CanonicalProperty> out;
  for (const auto& s : kb.statements()) {
    if (const auto* st = std::get_if<Stat>(&s)) out.insert(st->prop);
    if (const auto* f = std::get_if<SentenceForm>(&s)) out.insert(f->prop);
  }
  return out;
}

namespace {

struct SearchSpace {
  std::vector<std::string> class_atoms;
  std::vector<std::string> property_atoms;
  std::size_t types = 0;
  // Per constrained class / property: membership of each type.
  std::vector<std::vector<bool>> class_of;
  std::vector<std::vector<bool>> prop_of;
  struct StatCheck {
    std::size_t cls, prop;
    std::vector<std::vector<bool>> ok;  // ok[size][hits]
  };
  std::vector<StatCheck> stats;
  std::vector<std::pair<std::size_t, std::size_t>> subsets;
  std::vector<std::string> individuals;
  std::vector<std::vector<std::size_t>> member_of;  // per individual: class indices
  // Per sentence class with several forms: (prop index, individual index).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> equiv_groups;

  FiniteModel::Element element(std::size_t type) const {
    FiniteModel::Element e;
    for (std::size_t k = 0; k < class_atoms.size(); ++k) e.classes.push_back(type >> k & 1U);
    for (std::size_t k = 0; k < property_atoms.size(); ++k) e.properties.push_back(type >> (class_atoms.size() + k) & 1U);
    return e;
  }
};

template <typename T>
std::size_t position(const std::set<T>& s, const T& v) {
  return static_cast<std::size_t>(std::distance(s.begin(), s.find(v)));
}

SearchSpace make_space(const ClosedKB& kb, std::size_t max_size) {
  SearchSpace sp;
  auto classes = constrained_classes(kb);
  auto props = constrained_properties(kb);
  std::set<std::string> ca, pa;
  for (const auto& c : classes) ca.insert(c.atoms().begin(), c.atoms().end());
  for (const auto& p : props) pa.insert(p.atoms().begin(), p.atoms().end());
  sp.class_atoms.assign(ca.begin(), ca.end());
  sp.property_atoms.assign(pa.begin(), pa.end());
  const std::size_t bits = ca.size() + pa.size();
  if (bits > 12) throw std::invalid_argument("model search supports at most 12 atoms, got " + std::to_string(bits));
  sp.types = std::size_t{1} << bits;

  FiniteModel probe{sp.class_atoms, sp.property_atoms, {}, {}};
  for (std::size_t t = 0; t < sp.types; ++t) probe.elements.push_back(sp.element(t));
  for (const auto& c : classes) {
    std::vector<bool> row(sp.types);
    for (std::size_t t = 0; t < sp.types; ++t) row[t] = probe.in_class(t, c);
    sp.class_of.push_back(std::move(row));
  }
  for (const auto& p : props) {
    std::vector<bool> row(sp.types);
    for (std::size_t t = 0; t < sp.types; ++t) row[t] = probe.has_property(t, p);
    sp.prop_of.push_back(std::move(row));
  }

  for (const auto& s : kb.statements()) {
    if (const auto* st = std::get_if<Stat>(&s)) {
      SearchSpace::StatCheck check{position(classes, st->cls), position(props, st->prop), {}};
      check.ok.resize(max_size + 1);
      for (std::size_t size = 1; size <= max_size; ++size) {
        for (std::size_t hits = 0; hits <= size; ++hits) {
          check.ok[size].push_back(st->interval.contains(Rational(static_cast<long>(hits), static_cast<long>(size))));
        }
      }
      sp.stats.push_back(std::move(check));
    } else if (const auto* sub = std::get_if<Subset>(&s)) {
      sp.subsets.emplace_back(position(classes, sub->sub), position(classes, sub->super));
    }
  }

  const auto& inds = kb.vocabulary().names(AtomKind::individual);
  sp.individuals.assign(inds.begin(), inds.end());
  sp.member_of.resize(sp.individuals.size());
  auto ind_index = [&](const std::string& i) {
    return static_cast<std::size_t>(std::lower_bound(sp.individuals.begin(), sp.individuals.end(), i) -
                                    sp.individuals.begin());
  };
  for (const auto& s : kb.statements()) {
    if (const auto* m = std::get_if<Member>(&s)) sp.member_of[ind_index(m->individual)].push_back(position(classes, m->cls));
  }
  for (const auto& members : kb.sentence_partition()) {
    auto forms = kb.forms(members.front());
    if (forms.size() < 2) continue;
    std::vector<std::pair<std::size_t, std::size_t>> group;
    for (const auto& f : forms) group.emplace_back(position(props, f.prop), ind_index(f.individual));
    sp.equiv_groups.push_back(std::move(group));
  }
  return sp;
}

class Search {
 public:
  Search(const SearchSpace& sp, std::size_t size) : sp_(sp), size_(size), counts_(sp.types, 0) {}

  std::optional<FiniteModel> run() {
    if (size_ < sp_.individuals.size()) return std::nullopt;
    if (extend(0, 0)) return build();
    return std::nullopt;
  }

 private:
  // Elements are chosen as a non-decreasing sequence of types, so each
  // multiset is visited once, in lexicographic order.
  bool extend(std::size_t placed, std::size_t min_type) {
    if (placed == size_) return counts_ok() && assign(0);
    for (std::size_t t = min_type; t < sp_.types; ++t) {
      ++counts_[t];
      sequence_.push_back(t);
      if (extend(placed + 1, t)) return true;
      sequence_.pop_back();
      --counts_[t];
    }
    return false;
  }

  bool differs(const std::vector<bool>& a, const std::vector<bool>& b) const {
    for (std::size_t t = 0; t < sp_.types; ++t) {
      if (counts_[t] && a[t] != b[t]) return true;
    }
    return false;
  }

  bool counts_ok() const {
    std::vector<std::size_t> sizes(sp_.class_of.size(), 0);
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      for (std::size_t t = 0; t < sp_.types; ++t) {
        if (sp_.class_of[c][t]) sizes[c] += counts_[t];
      }
      if (sizes[c] == 0) return false;
    }
    for (const auto& st : sp_.stats) {
      std::size_t hits = 0;
      for (std::size_t t = 0; t < sp_.types; ++t) {
        if (sp_.class_of[st.cls][t] && sp_.prop_of[st.prop][t]) hits += counts_[t];
      }
      if (!st.ok[sizes[st.cls]][hits]) return false;
    }
    for (const auto& [a, b] : sp_.subsets) {
      bool strict = false;
      for (std::size_t t = 0; t < sp_.types; ++t) {
        if (!counts_[t]) continue;
        if (sp_.class_of[a][t] && !sp_.class_of[b][t]) return false;
        if (sp_.class_of[b][t] && !sp_.class_of[a][t]) strict = true;
      }
      if (!strict) return false;
    }
    for (std::size_t i = 0; i < sp_.class_of.size(); ++i) {
      for (std::size_t j = i + 1; j < sp_.class_of.size(); ++j) {
        if (!differs(sp_.class_of[i], sp_.class_of[j])) return false;
      }
    }
    for (std::size_t i = 0; i < sp_.prop_of.size(); ++i) {
      for (std::size_t j = i + 1; j < sp_.prop_of.size(); ++j) {
        if (!differs(sp_.prop_of[i], sp_.prop_of[j])) return false;
      }
    }
    return true;
  }

  // Individuals take distinct elements; only the element's type matters.
  bool assign(std::size_t ind) {
    if (ind == sp_.individuals.size()) return equivalences_ok();
    if (ind == 0) {
      used_.assign(sp_.types, 0);
      type_of_.assign(sp_.individuals.size(), 0);
    }
    for (std::size_t t = 0; t < sp_.types; ++t) {
      if (used_[t] == counts_[t]) continue;
      const auto& need = sp_.member_of[ind];
      if (!std::all_of(need.begin(), need.end(), [&](std::size_t c) { return sp_.class_of[c][t]; })) continue;
      ++used_[t];
      type_of_[ind] = t;
      if (assign(ind + 1)) return true;
      --used_[t];
    }
    return false;
  }

  bool equivalences_ok() const {
    for (const auto& group : sp_.equiv_groups) {
      auto truth = [&](const std::pair<std::size_t, std::size_t>& f) { return sp_.prop_of[f.first][type_of_[f.second]]; };
      const bool first = truth(group.front());
      for (const auto& f : group) {
        if (truth(f) != first) return false;
      }
    }
    return true;
  }

  FiniteModel build() const {
    FiniteModel m{sp_.class_atoms, sp_.property_atoms, {}, {}};
    std::vector<std::size_t> first_of(sp_.types, 0);
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
      if (i == 0 || sequence_[i] != sequence_[i - 1]) first_of[sequence_[i]] = i;
      m.elements.push_back(sp_.element(sequence_[i]));
    }
    std::vector<std::size_t> taken(sp_.types, 0);
    for (std::size_t i = 0; i < sp_.individuals.size(); ++i) {
      auto t = type_of_[i];
      m.individual_map.emplace(sp_.individuals[i], first_of[t] + taken[t]++);
    }
    return m;
  }

  const SearchSpace& sp_;
  std::size_t size_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> used_;
  std::vector<std::size_t> type_of_;
};

}  // namespace

std::optional<FiniteModel> find_model(const ClosedKB& kb, std::size_t max_size) {
  const auto sp = make_space(kb, max_size);
  for (std::size_t size = 1; size <= max_size; ++size) {
    if (auto m = Search(sp, size).run()) return m;
  }
  return std::nullopt;
}

std::optional<FiniteModel> find_model(const KbBuilder& builder, std::size_t max_size) {
  return find_model(close(builder, Fusion::lenient), max_size);
}

bool verify_model(const ClosedKB& kb, const FiniteModel& m) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  for (const auto& e : m.elements) {
    if (e.classes.size() != m.class_atoms.size() || e.properties.size() != m.property_atoms.size()) return false;
  }
  if (!std::is_sorted(m.class_atoms.begin(), m.class_atoms.end()) ||
      !std::is_sorted(m.property_atoms.begin(), m.property_atoms.end())) {
    return false;
  }

  std::set<std::size_t> images;
  for (const auto& ind : kb.vocabulary().names(AtomKind::individual)) {
    auto it = m.individual_map.find(ind);
    if (it == m.individual_map.end() || it->second >= n || !images.insert(it->second).second) return false;
  }

  auto extension_of_class = [&](const CanonicalClass& c) {
    std::vector<bool> ext(n);
    for (std::size_t e = 0; e < n; ++e) ext[e] = m.in_class(e, c);
    return ext;
  };
  auto extension_of_prop = [&](const CanonicalProperty& p) {
    std::vector<bool> ext(n);
    for (std::size_t e = 0; e < n; ++e) ext[e] = m.has_property(e, p);
    return ext;
  };

  std::set<std::vector<bool>> seen;
  for (const auto& c : constrained_classes(kb)) {
    auto ext = extension_of_class(c);
    if (std::none_of(ext.begin(), ext.end(), [](bool b) { return b; })) return false;
    if (!seen.insert(ext).second) return false;
  }
  seen.clear();
  for (const auto& p : constrained_properties(kb)) {
    if (!seen.insert(extension_of_prop(p)).second) return false;
  }

  for (const auto& s : kb.statements()) {
    if (const auto* st = std::get_if<Stat>(&s)) {
      long members = 0, hits = 0;
      for (std::size_t e = 0; e < n; ++e) {
        if (!m.in_class(e, st->cls)) continue;
        ++members;
        if (m.has_property(e, st->prop)) ++hits;
      }
      if (members == 0 || !st->interval.contains(Rational(hits, members))) return false;
    } else if (const auto* mem = std::get_if<Member>(&s)) {
      if (!m.in_class(m.individual_map.at(mem->individual), mem->cls)) return false;
    } else if (const auto* sub = std::get_if<Subset>(&s)) {
      auto a = extension_of_class(sub->sub);
      auto b = extension_of_class(sub->super);
      bool strict = false;
      for (std::size_t e = 0; e < n; ++e) {
        if (a[e] && !b[e]) return false;
        if (b[e] && !a[e]) strict = true;
      }
      if (!strict) return false;
    }
  }

  // Derived memberships must hold too.
  for (const auto& ind : kb.vocabulary().names(AtomKind::individual)) {
    for (const auto& c : kb.memberships(ind)) {
      if (!m.in_class(m.individual_map.at(ind), c)) return false;
    }
  }

  // Each sentence takes the truth value of its form; equivalent sentences agree.
  for (const auto& members : kb.sentence_partition()) {
    std::optional<bool> value;
    for (const auto& f : kb.forms(members.front())) {
      bool v = m.has_property(m.individual_map.at(f.individual), f.prop);
      if (value && *value != v) return false;
      value = v;
    }
  }
  return true;
}

}  // namespace refclass
