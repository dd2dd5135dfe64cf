#include "refclass/kb.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace refclass {

std::string Form::to_string() const { return prop.to_string() + "(" + individual + ")"; }

Interval default_interval(const CanonicalProperty& prop) {
  if (prop.is_top()) return Interval::point(Rational(1));
  if (prop.is_bottom()) return Interval::point(Rational(0));
  return Interval::unit();
}

// ---------------------------------------------------------------------------
// KbBuilder

void KbBuilder::declare(AtomKind kind, const std::string& name) {
  if (!is_identifier(name)) throw DeclarationError(name, "'" + name + "' is not a valid identifier");
  vocab_.declare(kind, name);
}

void KbBuilder::declare_sentence(const std::string& name, const CanonicalProperty& prop,
                                 const std::string& individual) {
  vocab_.require(AtomKind::individual, individual);
  require_property(prop);
  declare(AtomKind::sentence, name);
  assert_statement(SentenceForm{name, prop, individual});
}

void KbBuilder::require_class(const CanonicalClass& cls) const {
  if (cls.is_universal()) throw ValidationError("the universal class U cannot appear in asserted statements");
  for (const auto& a : cls.atoms()) vocab_.require(AtomKind::class_atom, a);
}

void KbBuilder::require_property(const CanonicalProperty& prop) const {
  for (const auto& a : prop.atoms()) vocab_.require(AtomKind::property_atom, a);
}

void KbBuilder::assert_stat(const CanonicalClass& cls, const CanonicalProperty& prop, const Rational& lo,
                            const Rational& hi) {
  if (lo < 0 || hi > 1 || lo > hi) {
    throw ValidationError("invalid interval [" + to_string(lo) + ", " + to_string(hi) + "] for %(" +
                          cls.to_string() + ", " + prop.to_string() + ")");
  }
  assert_statement(Stat{cls, prop, Interval(lo, hi)});
}

void KbBuilder::assert_statement(Statement s) {
  struct Check {
    KbBuilder& b;
    void operator()(const Stat& st) {
      b.require_class(st.cls);
      b.require_property(st.prop);
    }
    void operator()(const Member& m) {
      b.vocab_.require(AtomKind::individual, m.individual);
      b.require_class(m.cls);
    }
    void operator()(const Subset& sub) {
      b.require_class(sub.sub);
      b.require_class(sub.super);
      if (sub.sub == sub.super) throw ValidationError("subset of a class with itself: " + sub.sub.to_string());
    }
    void operator()(const SentenceForm& f) {
      b.vocab_.require(AtomKind::sentence, f.sentence);
      b.vocab_.require(AtomKind::individual, f.individual);
      b.require_property(f.prop);
      Form form{f.prop, f.individual};
      auto [it, inserted] = b.forms_.emplace(f.sentence, form);
      if (!inserted && it->second != form) {
        throw ValidationError("sentence '" + f.sentence + "' already has form " + it->second.to_string() +
                              "; relate differing forms with an equivalence");
      }
    }
    void operator()(SentenceEquiv& e) {
      b.vocab_.require(AtomKind::sentence, e.first);
      b.vocab_.require(AtomKind::sentence, e.second);
      if (e.second < e.first) std::swap(e.first, e.second);
    }
  };
  std::visit(Check{*this}, s);
  statements_.insert(std::move(s));
}

std::string KbBuilder::anonymous_sentence(const CanonicalProperty& prop, const std::string& individual) {
  vocab_.require(AtomKind::individual, individual);
  require_property(prop);
  std::string label = "?" + Form{prop, individual}.to_string();
  if (anonymous_.insert(label).second) {
    vocab_.declare(AtomKind::sentence, label);
    assert_statement(SentenceForm{label, prop, individual});
  }
  return label;
}

// ---------------------------------------------------------------------------
// ClosedKB

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    // Smaller index wins, so the representative is the least label.
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ClosedKB close(const KbBuilder& builder, Fusion fusion) {
  ClosedKB kb;
  kb.vocab_ = builder.vocabulary();
  kb.statements_ = builder.statements();
  kb.anonymous_ = builder.anonymous_sentences();

  std::map<std::string, std::vector<CanonicalClass>> asserted_members;
  std::map<ClosedKB::StatKey, std::vector<Interval>> direct;
  std::vector<std::pair<std::string, std::string>> equivs;
  kb.classes_.insert(CanonicalClass::universal());

  for (const auto& s : kb.statements_) {
    if (const auto* st = std::get_if<Stat>(&s)) {
      direct[{st->cls, st->prop}].push_back(st->interval);
      kb.classes_.insert(st->cls);
    } else if (const auto* m = std::get_if<Member>(&s)) {
      asserted_members[m->individual].push_back(m->cls);
      kb.classes_.insert(m->cls);
    } else if (const auto* sub = std::get_if<Subset>(&s)) {
      kb.asserted_subsets_.push_back(*sub);
      kb.classes_.insert(sub->sub);
      kb.classes_.insert(sub->super);
    } else if (const auto* f = std::get_if<SentenceForm>(&s)) {
      kb.sentence_forms_.emplace(f->sentence, Form{f->prop, f->individual});
    } else if (const auto* e = std::get_if<SentenceEquiv>(&s)) {
      equivs.emplace_back(e->first, e->second);
    }
  }

  // Memberships: every intersection of asserted classes, U as the empty one.
  for (const auto& ind : kb.vocab_.names(AtomKind::individual)) {
    std::set<CanonicalClass> closed{CanonicalClass::universal()};
    if (auto it = asserted_members.find(ind); it != asserted_members.end()) {
      for (const auto& cls : it->second) {
        std::vector<CanonicalClass> grown;
        for (const auto& have : closed) grown.push_back(have.intersect(cls));
        closed.insert(grown.begin(), grown.end());
      }
    }
    kb.classes_.insert(closed.begin(), closed.end());
    kb.memberships_.emplace(ind, std::move(closed));
  }

  // Sentence partition.
  const auto& labels = kb.vocab_.names(AtomKind::sentence);
  std::vector<std::string> ordered(labels.begin(), labels.end());
  auto index = [&](const std::string& l) {
    return static_cast<std::size_t>(std::lower_bound(ordered.begin(), ordered.end(), l) - ordered.begin());
  };
  UnionFind uf(ordered.size());
  for (const auto& [a, b] : equivs) {
    for (const auto* l : {&a, &b}) {
      if (!kb.sentence_forms_.contains(*l)) {
        throw ValidationError("sentence '" + *l + "' is related by an equivalence but has no form");
      }
    }
    uf.unite(index(a), index(b));
  }
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const auto& rep = ordered[uf.find(i)];
    kb.sentence_rep_.emplace(ordered[i], rep);
    kb.sentence_members_[rep].push_back(ordered[i]);
  }

  // Fused statistics: own intervals, reflected intervals of the negation, default.
  std::set<ClosedKB::StatKey> keys;
  for (const auto& [key, _] : direct) {
    keys.insert(key);
    keys.insert({key.first, key.second.negate()});
  }
  kb.asserted_keys_ = keys;
  for (const auto& key : keys) {
    if (kb.stats_.contains(key)) continue;
    const auto& [cls, prop] = key;
    std::optional<Interval> fused = default_interval(prop);
    if (auto it = direct.find(key); it != direct.end()) {
      for (const auto& iv : it->second) fused = fused ? fused->intersect(iv) : fused;
    }
    if (auto it = direct.find({cls, prop.negate()}); it != direct.end()) {
      for (const auto& iv : it->second) fused = fused ? fused->intersect(iv.reflect()) : fused;
    }
    if (!fused) {
      if (fusion == Fusion::lenient) continue;
      throw InconsistencyError(cls.to_string(), prop.to_string(),
                               "inconsistent statistics for %(" + cls.to_string() + ", " + prop.to_string() +
                                   "): asserted intervals have empty intersection");
    }
    kb.stats_.emplace(key, *fused);
    kb.stats_.emplace(ClosedKB::StatKey{cls, prop.negate()}, fused->reflect());
  }
  return kb;
}

const std::set<CanonicalClass>& ClosedKB::memberships(const std::string& individual) const {
  auto it = memberships_.find(individual);
  if (it == memberships_.end()) vocab_.require(AtomKind::individual, individual);
  return it->second;
}

namespace {

// Classes reachable from `start` by asserted inclusions, where an asserted
// a ⊂ b applies to any x with x ⊆ a structurally. Stops early once `done`.
template <typename Done>
bool reach(const std::vector<Subset>& asserted, const CanonicalClass& start, Done done) {
  std::set<CanonicalClass> seen;
  std::deque<const CanonicalClass*> queue{&start};
  while (!queue.empty()) {
    const CanonicalClass& x = *queue.front();
    queue.pop_front();
    for (const auto& s : asserted) {
      if (!x.atoms_include(s.sub)) continue;
      auto [it, fresh] = seen.insert(s.super);
      if (!fresh) continue;
      if (done(*it)) return true;
      queue.push_back(&*it);
    }
  }
  return false;
}

}  // namespace

bool ClosedKB::subset_known(const CanonicalClass& sub, const CanonicalClass& super) const {
  if (sub == super) return false;
  if (sub.structurally_below(super)) return true;
  return reach(asserted_subsets_, sub, [&](const CanonicalClass& b) { return b.atoms_include(super); });
}

bool ClosedKB::subset_cycle(const CanonicalClass& cls) const {
  return reach(asserted_subsets_, cls, [&](const CanonicalClass& b) { return b.atoms_include(cls); });
}

std::set<std::pair<CanonicalClass, CanonicalClass>> ClosedKB::subset_pairs() const {
  std::set<std::pair<CanonicalClass, CanonicalClass>> out;
  for (const auto& a : classes_) {
    for (const auto& b : classes_) {
      if (subset_known(a, b)) out.emplace(a, b);
    }
  }
  return out;
}

Interval ClosedKB::effective_interval(const CanonicalClass& cls, const CanonicalProperty& prop) const {
  if (auto it = stats_.find({cls, prop}); it != stats_.end()) return it->second;
  return default_interval(prop);
}

bool ClosedKB::has_asserted_stat(const CanonicalClass& cls, const CanonicalProperty& prop) const {
  return asserted_keys_.contains({cls, prop});
}

std::vector<std::string> ClosedKB::equivalent_sentences(const std::string& label) const {
  auto it = sentence_rep_.find(label);
  if (it == sentence_rep_.end()) return {label};
  return sentence_members_.at(it->second);
}

std::vector<Form> ClosedKB::forms(const std::string& label) const {
  std::set<Form> out;
  for (const auto& l : equivalent_sentences(label)) {
    if (auto it = sentence_forms_.find(l); it != sentence_forms_.end()) out.insert(it->second);
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<std::string>> ClosedKB::sentence_partition() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& [_, members] : sentence_members_) out.push_back(members);
  return out;
}

KbBuilder ClosedKB::to_builder() const {
  KbBuilder b;
  for (auto kind : {AtomKind::class_atom, AtomKind::property_atom, AtomKind::individual}) {
    for (const auto& n : vocab_.names(kind)) b.declare(kind, n);
  }
  for (const auto& [label, form] : sentence_forms_) {
    if (anonymous_.contains(label)) {
      b.anonymous_sentence(form.prop, form.individual);
    } else {
      b.declare_sentence(label, form.prop, form.individual);
    }
  }
  for (const auto& n : vocab_.names(AtomKind::sentence)) {
    if (!sentence_forms_.contains(n)) b.declare(AtomKind::sentence, n);
  }
  for (const auto& [ind, classes] : memberships_) {
    for (const auto& c : classes) {
      if (!c.is_universal()) b.assert_statement(Member{ind, c});
    }
  }
  for (const auto& [sub, super] : subset_pairs()) {
    if (!sub.is_universal() && !super.is_universal()) b.assert_statement(Subset{sub, super});
  }
  for (const auto& [rep, members] : sentence_members_) {
    for (const auto& m : members) {
      if (m != rep) b.assert_statement(SentenceEquiv{rep, m});
    }
  }
  for (const auto& [key, iv] : stats_) b.assert_statement(Stat{key.first, key.second, iv});
  return b;
}

bool same_closure(const ClosedKB& a, const ClosedKB& b) {
  return a.vocab_ == b.vocab_ && a.memberships_ == b.memberships_ && a.subset_pairs() == b.subset_pairs() &&
         a.sentence_members_ == b.sentence_members_ && a.sentence_forms_ == b.sentence_forms_ &&
         a.stats_ == b.stats_;
}

}  // namespace refclass
