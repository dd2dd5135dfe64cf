#pragma once

#include "refclass/kb.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace refclass {

enum class Mode { point, interval };
std::string_view mode_name(Mode mode);

enum class UndefinedReason { no_sentence_form, no_membership, all_rows_deleted, conflicting_equivalent_forms };
std::string_view reason_name(UndefinedReason reason);

// One row of the reference-class table for a fixed individual and property.
struct TableRow {
  CanonicalClass cls;
  Interval interval;
  // Set when the row is deleted: a class whose interval differs from this
  // row's and which is not a known superclass of it.
  std::optional<CanonicalClass> deleted_by;

  bool live() const { return !deleted_by; }

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Resolution {
  Interval interval;
  CanonicalClass cls;

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

struct ProbResult {
  std::optional<Resolution> resolution;  // set iff defined
  std::optional<Form> form;              // the form that produced the resolution
  std::optional<UndefinedReason> reason;  // set iff undefined

  bool defined() const { return resolution.has_value(); }

  static ProbResult undefined(UndefinedReason r) { return ProbResult{std::nullopt, std::nullopt, r}; }

  friend bool operator==(const ProbResult&, const ProbResult&) = default;
};

// Everything needed to re-derive a ProbResult by hand.
struct FormTrace {
  Form form;
  std::vector<TableRow> table;  // all candidate rows, deletions marked
  std::optional<Resolution> resolution;
  std::optional<UndefinedReason> reason;

  std::vector<CanonicalClass> survivors() const;
};

struct Trace {
  std::string sentence;
  Mode mode = Mode::interval;
  std::vector<std::string> equivalent_sentences;
  std::vector<FormTrace> forms;
  ProbResult result;
};

// One live row per known membership of `individual`, with the effective
// interval; sorted by class (U first).
std::vector<TableRow> build_table(const ClosedKB& kb, const std::string& individual, const CanonicalProperty& prop);
// Point-mode candidates: only classes with asserted point-valued statistics.
std::vector<TableRow> build_point_table(const ClosedKB& kb, const std::string& individual,
                                        const CanonicalProperty& prop);

// A row survives iff every row whose interval differs from it belongs to a
// known superclass. Returns all rows, failures marked with the first witness.
std::vector<TableRow> filter_rows(const ClosedKB& kb, std::vector<TableRow> rows);

// The inclusion-minimal interval among survivors, and the class bearing it
// (most atoms, then lexicographically first, on ties). Throws
// std::invalid_argument on an empty list and std::logic_error when the
// survivors are not nested, which only happens for a KB that fails the
// subset-cycle sanity check.
Resolution resolve(const std::vector<TableRow>& survivors);

ProbResult prob_point(const ClosedKB& kb, const std::string& sentence);
ProbResult prob_interval(const ClosedKB& kb, const std::string& sentence);
ProbResult prob(const ClosedKB& kb, const std::string& sentence, Mode mode);

Trace explain(const ClosedKB& kb, const std::string& sentence, Mode mode);

// Recomputes the result from the trace's tables alone.
ProbResult replay(const Trace& trace);

}  // namespace refclass
