#include "refclass/json_io.hpp"

#include <stdexcept>

namespace refclass {

using nlohmann::json;

json to_json(const Interval& iv) { return {{"lo", to_string(iv.lo())}, {"hi", to_string(iv.hi())}}; }

Interval interval_from_json(const json& j) {
  return Interval(parse_rational(j.at("lo").get<std::string>()), parse_rational(j.at("hi").get<std::string>()));
}

namespace {

json class_json(const CanonicalClass& c) { return c.atoms(); }

CanonicalClass class_from_json(const json& j) { return CanonicalClass(j.get<std::vector<std::string>>()); }

json property_json(const CanonicalProperty& p) {
  std::string table;
  for (bool b : p.table()) table += b ? '1' : '0';
  return {{"text", p.to_string()}, {"atoms", p.atoms()}, {"table", table}};
}

CanonicalProperty property_from_json(const json& j) {
  std::vector<bool> table;
  for (char c : j.at("table").get<std::string>()) {
    if (c != '0' && c != '1') throw std::invalid_argument("truth table must be a string of 0 and 1");
    table.push_back(c == '1');
  }
  return CanonicalProperty::from_table(j.at("atoms").get<std::vector<std::string>>(), std::move(table));
}

UndefinedReason reason_from_string(const std::string& s) {
  for (auto r : {UndefinedReason::no_sentence_form, UndefinedReason::no_membership, UndefinedReason::all_rows_deleted,
                 UndefinedReason::conflicting_equivalent_forms}) {
    if (reason_name(r) == s) return r;
  }
  throw std::invalid_argument("unknown reason '" + s + "'");
}

json resolution_json(const Resolution& r) {
  return {{"interval", to_json(r.interval)}, {"class", r.cls.to_string()}, {"atoms", class_json(r.cls)}};
}

Resolution resolution_from_json(const json& j) {
  return Resolution{interval_from_json(j.at("interval")), class_from_json(j.at("atoms"))};
}

json prob_json(const ProbResult& r) {
  json j;
  j["status"] = r.defined() ? "defined" : "undefined";
  if (r.resolution) j["resolution"] = resolution_json(*r.resolution);
  if (r.form) j["form"] = {{"property", property_json(r.form->prop)}, {"individual", r.form->individual}};
  if (r.reason) j["reason"] = std::string(reason_name(*r.reason));
  return j;
}

ProbResult prob_from_json(const json& j) {
  ProbResult r;
  if (j.contains("resolution")) r.resolution = resolution_from_json(j.at("resolution"));
  if (j.contains("form")) {
    r.form = Form{property_from_json(j.at("form").at("property")), j.at("form").at("individual").get<std::string>()};
  }
  if (j.contains("reason")) r.reason = reason_from_string(j.at("reason").get<std::string>());
  return r;
}

}  // namespace

json to_json(const Trace& trace) {
  json forms = json::array();
  for (const auto& ft : trace.forms) {
    json rows = json::array();
    for (const auto& row : ft.table) {
      json r{{"class", row.cls.to_string()}, {"atoms", class_json(row.cls)}, {"interval", to_json(row.interval)}};
      if (row.live()) {
        r["status"] = "live";
      } else {
        r["status"] = "deleted";
        r["witness"] = class_json(*row.deleted_by);
        for (const auto& other : ft.table) {
          if (other.cls == *row.deleted_by) r["witness_interval"] = to_json(other.interval);
        }
      }
      rows.push_back(std::move(r));
    }
    json survivors = json::array();
    for (const auto& c : ft.survivors()) survivors.push_back(c.to_string());
    json f{{"property", property_json(ft.form.prop)}, {"individual", ft.form.individual}, {"rows", rows},
           {"survivors", survivors}};
    if (ft.resolution) f["resolution"] = resolution_json(*ft.resolution);
    if (ft.reason) f["reason"] = std::string(reason_name(*ft.reason));
    forms.push_back(std::move(f));
  }
  return {{"sentence", trace.sentence},
          {"mode", std::string(mode_name(trace.mode))},
          {"equivalent_sentences", trace.equivalent_sentences},
          {"forms", forms},
          {"result", prob_json(trace.result)}};
}

Trace trace_from_json(const json& j) {
  Trace t;
  t.sentence = j.at("sentence").get<std::string>();
  const auto mode = j.at("mode").get<std::string>();
  if (mode != "point" && mode != "interval") throw std::invalid_argument("unknown mode '" + mode + "'");
  t.mode = mode == "point" ? Mode::point : Mode::interval;
  t.equivalent_sentences = j.at("equivalent_sentences").get<std::vector<std::string>>();
  for (const auto& f : j.at("forms")) {
    FormTrace ft{Form{property_from_json(f.at("property")), f.at("individual").get<std::string>()}, {}, {}, {}};
    for (const auto& r : f.at("rows")) {
      TableRow row{class_from_json(r.at("atoms")), interval_from_json(r.at("interval")), std::nullopt};
      if (r.at("status").get<std::string>() == "deleted") row.deleted_by = class_from_json(r.at("witness"));
      ft.table.push_back(std::move(row));
    }
    if (f.contains("resolution")) ft.resolution = resolution_from_json(f.at("resolution"));
    if (f.contains("reason")) ft.reason = reason_from_string(f.at("reason").get<std::string>());
    t.forms.push_back(std::move(ft));
  }
  t.result = prob_from_json(j.at("result"));
  return t;
}

json result_json(const std::string& query, Mode mode, const ProbResult& result) {
  json j{{"query", query}, {"mode", std::string(mode_name(mode))}, {"status", result.defined() ? "defined" : "undefined"}};
  if (result.resolution) {
    j["interval"] = to_json(result.resolution->interval);
    j["reference_class"] = result.resolution->cls.to_string();
  }
  if (result.reason) j["reason"] = std::string(reason_name(*result.reason));
  return j;
}

json to_json(const FiniteModel& model) {
  json elements = json::array();
  for (const auto& e : model.elements) {
    json classes = json::array();
    json props = json::array();
    for (std::size_t k = 0; k < e.classes.size(); ++k) {
      if (e.classes[k]) classes.push_back(model.class_atoms[k]);
    }
    for (std::size_t k = 0; k < e.properties.size(); ++k) {
      if (e.properties[k]) props.push_back(model.property_atoms[k]);
    }
    elements.push_back({{"classes", classes}, {"properties", props}});
  }
  return {{"size", model.size()},
          {"class_atoms", model.class_atoms},
          {"property_atoms", model.property_atoms},
          {"elements", elements},
          {"individuals", model.individual_map}};
}

json to_json(const SanityReport& report) {
  auto list = [](const std::vector<SanityIssue>& issues) {
    json out = json::array();
    for (const auto& i : issues) out.push_back({{"code", i.code}, {"message", i.message}});
    return out;
  };
  return {{"passed", report.passed()}, {"violations", list(report.violations())}, {"warnings", list(report.warnings())}};
}

}  // namespace refclass
