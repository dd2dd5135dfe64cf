#include "refclass/inference.hpp"

#include <algorithm>
#include <stdexcept>

namespace refclass {

std::string_view mode_name(Mode mode) { return mode == Mode::point ? "point" : "interval"; }

std::string_view reason_name(UndefinedReason reason) {
  switch (reason) {
    case UndefinedReason::no_sentence_form: return "no-sentence-form";
    case UndefinedReason::no_membership: return "no-membership";
    case UndefinedReason::all_rows_deleted: return "all-rows-deleted";
    case UndefinedReason::conflicting_equivalent_forms: return "conflicting-equivalent-forms";
  }
  return "?";
}

std::vector<CanonicalClass> FormTrace::survivors() const {
  std::vector<CanonicalClass> out;
  for (const auto& row : table) {
    if (row.live()) out.push_back(row.cls);
  }
  return out;
}

std::vector<TableRow> build_table(const ClosedKB& kb, const std::string& individual, const CanonicalProperty& prop) {
  std::vector<TableRow> rows;
  for (const auto& cls : kb.memberships(individual)) {
    rows.push_back(TableRow{cls, kb.effective_interval(cls, prop), std::nullopt});
  }
  return rows;
}

std::vector<TableRow> build_point_table(const ClosedKB& kb, const std::string& individual,
                                        const CanonicalProperty& prop) {
  std::vector<TableRow> rows;
  for (const auto& cls : kb.memberships(individual)) {
    if (!kb.has_asserted_stat(cls, prop)) continue;
    auto iv = kb.effective_interval(cls, prop);
    if (iv.is_point()) rows.push_back(TableRow{cls, iv, std::nullopt});
  }
  return rows;
}

std::vector<TableRow> filter_rows(const ClosedKB& kb, std::vector<TableRow> rows) {
  for (auto& row : rows) {
    row.deleted_by.reset();
    for (const auto& other : rows) {
      if (&other == &row || !differ(row.interval, other.interval)) continue;
      if (!kb.subset_known(row.cls, other.cls)) {
        row.deleted_by = other.cls;
        break;
      }
    }
  }
  return rows;
}

namespace {

// Preference among classes bearing the same interval: more atoms, then lexicographic.
bool preferred(const CanonicalClass& a, const CanonicalClass& b) {
  if (a.atoms().size() != b.atoms().size()) return a.atoms().size() > b.atoms().size();
  return a < b;
}

}  // namespace

Resolution resolve(const std::vector<TableRow>& survivors) {
  if (survivors.empty()) throw std::invalid_argument("resolve: no surviving rows");
  const TableRow* best = &survivors.front();
  for (const auto& row : survivors) {
    if (row.interval == best->interval) {
      if (preferred(row.cls, best->cls)) best = &row;
    } else if (row.interval.included_in(best->interval)) {
      best = &row;
    }
  }
  for (const auto& row : survivors) {
    if (!best->interval.included_in(row.interval)) {
      throw std::logic_error("surviving rows " + best->cls.to_string() + " " + best->interval.to_string() + " and " +
                             row.cls.to_string() + " " + row.interval.to_string() + " are not nested");
    }
  }
  return Resolution{best->interval, best->cls};
}

namespace {

FormTrace evaluate_form(const ClosedKB& kb, const Form& form, Mode mode) {
  FormTrace ft{form, {}, std::nullopt, std::nullopt};
  auto rows = mode == Mode::point ? build_point_table(kb, form.individual, form.prop)
                                  : build_table(kb, form.individual, form.prop);
  ft.table = filter_rows(kb, std::move(rows));
  std::vector<TableRow> live;
  std::copy_if(ft.table.begin(), ft.table.end(), std::back_inserter(live), [](const TableRow& r) { return r.live(); });
  if (ft.table.empty()) {
    ft.reason = UndefinedReason::no_membership;
  } else if (live.empty()) {
    ft.reason = UndefinedReason::all_rows_deleted;
  } else {
    ft.resolution = resolve(live);
  }
  return ft;
}

// Defined forms must agree on the interval, otherwise the whole query is
// undefined. Among agreeing forms the preferred class is reported (then the
// smaller individual, then property), which keeps the choice stable under
// negating every form. With no defined form, all-rows-deleted outranks
// no-membership.
ProbResult combine(const std::vector<FormTrace>& forms) {
  if (forms.empty()) return ProbResult::undefined(UndefinedReason::no_sentence_form);
  const FormTrace* best = nullptr;
  bool any_deleted = false;
  for (const auto& ft : forms) {
    if (ft.resolution) {
      if (!best) {
        best = &ft;
        continue;
      }
      if (ft.resolution->interval != best->resolution->interval) {
        return ProbResult::undefined(UndefinedReason::conflicting_equivalent_forms);
      }
      const auto& a = ft.resolution->cls;
      const auto& b = best->resolution->cls;
      if (preferred(a, b) || (a == b && ft.form.individual < best->form.individual)) best = &ft;
    } else if (ft.reason == UndefinedReason::all_rows_deleted) {
      any_deleted = true;
    }
  }
  if (best) return ProbResult{best->resolution, best->form, std::nullopt};
  return ProbResult::undefined(any_deleted ? UndefinedReason::all_rows_deleted : UndefinedReason::no_membership);
}

}  // namespace

Trace explain(const ClosedKB& kb, const std::string& sentence, Mode mode) {
  Trace trace;
  trace.sentence = sentence;
  trace.mode = mode;
  trace.equivalent_sentences = kb.equivalent_sentences(sentence);
  for (const auto& form : kb.forms(sentence)) trace.forms.push_back(evaluate_form(kb, form, mode));
  trace.result = combine(trace.forms);
  return trace;
}

ProbResult prob(const ClosedKB& kb, const std::string& sentence, Mode mode) {
  return explain(kb, sentence, mode).result;
}

ProbResult prob_point(const ClosedKB& kb, const std::string& sentence) { return prob(kb, sentence, Mode::point); }

ProbResult prob_interval(const ClosedKB& kb, const std::string& sentence) {
  return prob(kb, sentence, Mode::interval);
}

ProbResult replay(const Trace& trace) {
  std::vector<FormTrace> forms;
  for (const auto& ft : trace.forms) {
    FormTrace r{ft.form, ft.table, std::nullopt, std::nullopt};
    std::vector<TableRow> live;
    std::copy_if(ft.table.begin(), ft.table.end(), std::back_inserter(live), [](const TableRow& x) { return x.live(); });
    if (ft.table.empty()) {
      r.reason = UndefinedReason::no_membership;
    } else if (live.empty()) {
      r.reason = UndefinedReason::all_rows_deleted;
    } else {
      r.resolution = resolve(live);
    }
    forms.push_back(std::move(r));
  }
  return combine(forms);
}

}  // namespace refclass
