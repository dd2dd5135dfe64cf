#include "refclass/cli.hpp"

#include "refclass/consistency.hpp"
#include "refclass/dsl.hpp"
#include "refclass/inference.hpp"
#include "refclass/json_io.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>

namespace refclass::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string kb_path;
  std::string query;
  std::string mode = "interval";
  bool json = false;
  bool trace = false;
  std::optional<std::size_t> model_bound;
};

class Style {
 public:
  explicit Style(bool on) : on_(on) {}
  std::string good(const std::string& s) const { return wrap("32", s); }
  std::string bad(const std::string& s) const { return wrap("31", s); }
  std::string dim(const std::string& s) const { return wrap("2", s); }
  std::string bold(const std::string& s) const { return wrap("1", s); }

 private:
  std::string wrap(const char* code, const std::string& s) const {
    return on_ ? "\033[" + std::string(code) + "m" + s + "\033[0m" : s;
  }
  bool on_;
};

// Loads and closes the KB; on failure reports and yields an exit code.
struct Loaded {
  std::optional<KbBuilder> builder;
  int failure = ok;
};

Loaded load(const Config& cfg, std::ostream& err) {
  try {
    return {dsl::parse_kb_file(cfg.kb_path), ok};
  } catch (const dsl::ParseError& e) {
    for (const auto& d : e.diagnostics()) err << cfg.kb_path << ":" << d.to_string() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return {std::nullopt, parse_failure};
}

std::optional<ClosedKB> close_or_report(const KbBuilder& b, std::ostream& err) {
  try {
    return close(b);
  } catch (const KbError& e) {
    err << "inconsistent knowledge base: " << e.what() << "\n";
    return std::nullopt;
  }
}

void print_violations(const SanityReport& report, std::ostream& err) {
  for (const auto& v : report.violations()) err << "violation [" << v.code << "]: " << v.message << "\n";
}

void print_trace(const Trace& trace, const Style& style, std::ostream& out) {
  out << "sentences equivalent to " << trace.sentence << ":";
  for (const auto& s : trace.equivalent_sentences) out << " " << s;
  out << "\n";
  if (trace.forms.empty()) out << "  no sentence form\n";
  for (const auto& ft : trace.forms) {
    out << "form " << ft.form.to_string() << "\n";
    std::size_t width = 5;
    for (const auto& row : ft.table) width = std::max(width, row.cls.to_string().size());
    for (const auto& row : ft.table) {
      out << "  " << std::left << std::setw(static_cast<int>(width)) << row.cls.to_string() << "  "
          << std::setw(24) << row.interval.to_string();
      if (row.live()) {
        out << style.good("live") << "\n";
        continue;
      }
      std::string witness_iv;
      for (const auto& other : ft.table) {
        if (other.cls == *row.deleted_by) witness_iv = other.interval.to_string();
      }
      out << style.bad("deleted") << style.dim(": differs from " + row.deleted_by->to_string() + " " + witness_iv +
                                               ", not a known superclass")
          << "\n";
    }
    out << "  survivors:";
    for (const auto& c : ft.survivors()) out << " {" << c.to_string() << "}";
    out << "\n";
    if (ft.resolution) {
      out << "  resolved: " << ft.resolution->interval.to_string() << " via " << ft.resolution->cls.to_string() << "\n";
    } else if (ft.reason) {
      out << "  undefined: " << reason_name(*ft.reason) << "\n";
    }
  }
}

int cmd_eval(const Config& cfg, const Style& style, std::ostream& out, std::ostream& err) {
  auto loaded = load(cfg, err);
  if (!loaded.builder) return loaded.failure;
  std::string label;
  try {
    label = dsl::parse_query(cfg.query, *loaded.builder);
  } catch (const dsl::ParseError& e) {
    for (const auto& d : e.diagnostics()) err << "query:" << d.to_string() << "\n";
    return parse_failure;
  }
  auto kb = close_or_report(*loaded.builder, err);
  if (!kb) return inconsistent;
  auto report = sanity_check(*kb);
  if (!report.passed()) {
    print_violations(report, err);
    return inconsistent;
  }
  const Mode mode = cfg.mode == "point" ? Mode::point : Mode::interval;
  const Trace trace = explain(*kb, label, mode);
  const ProbResult& result = trace.result;

  if (cfg.json) {
    json j = result_json(cfg.query, mode, result);
    if (cfg.trace) j["trace"] = to_json(trace);
    out << j.dump(2) << "\n";
  } else {
    if (cfg.trace) print_trace(trace, style, out);
    out << style.bold(cfg.query) << " [" << mode_name(mode) << "]: ";
    if (result.defined()) {
      out << style.good(result.resolution->interval.to_string()) << " via " << result.resolution->cls.to_string()
          << "\n";
    } else {
      out << style.bad("undefined") << " (" << reason_name(*result.reason) << ")\n";
    }
  }
  return result.defined() ? ok : undefined_result;
}

void print_model(const FiniteModel& m, std::ostream& out) {
  out << "model of size " << m.size() << ":\n";
  for (std::size_t e = 0; e < m.size(); ++e) {
    std::string classes, props;
    for (std::size_t k = 0; k < m.class_atoms.size(); ++k) {
      if (m.elements[e].classes[k]) classes += (classes.empty() ? "" : " ") + m.class_atoms[k];
    }
    for (std::size_t k = 0; k < m.property_atoms.size(); ++k) {
      if (m.elements[e].properties[k]) props += (props.empty() ? "" : " ") + m.property_atoms[k];
    }
    out << "  e" << e << ": classes {" << classes << "} properties {" << props << "}";
    for (const auto& [ind, idx] : m.individual_map) {
      if (idx == e) out << " = " << ind;
    }
    out << "\n";
  }
}

int cmd_check(const Config& cfg, const Style& style, std::ostream& out, std::ostream& err) {
  auto loaded = load(cfg, err);
  if (!loaded.builder) return loaded.failure;
  auto report = sanity_check(*loaded.builder);
  json j{{"sanity", to_json(report)}};
  int code = ok;
  if (!report.passed()) {
    print_violations(report, err);
    code = inconsistent;
  } else if (cfg.model_bound) {
    auto kb = close(*loaded.builder);
    j["bound"] = *cfg.model_bound;
    std::optional<FiniteModel> model;
    try {
      model = find_model(kb, *cfg.model_bound);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return parse_failure;
    }
    if (model) {
      j["model"] = to_json(*model);
    } else {
      j["model"] = nullptr;
      code = no_model;
    }
    if (!cfg.json) {
      if (model) {
        print_model(*model, out);
      } else {
        out << "no model within bound " << *cfg.model_bound << "\n";
      }
    }
  }
  if (cfg.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "sanity: " << (report.passed() ? style.good("pass") : style.bad("fail")) << "\n";
    for (const auto& w : report.warnings()) out << "warning [" << w.code << "]: " << w.message << "\n";
  }
  return code;
}

int cmd_dump(const Config& cfg, std::ostream& out, std::ostream& err) {
  auto loaded = load(cfg, err);
  if (!loaded.builder) return loaded.failure;
  auto kb = close_or_report(*loaded.builder, err);
  if (!kb) return inconsistent;

  json j;
  j["classes"] = json::array();
  for (const auto& c : kb->classes()) j["classes"].push_back(c.to_string());
  j["memberships"] = json::object();
  for (const auto& ind : kb->vocabulary().names(AtomKind::individual)) {
    json list = json::array();
    for (const auto& c : kb->memberships(ind)) list.push_back(c.to_string());
    j["memberships"][ind] = list;
  }
  j["subsets"] = json::array();
  for (const auto& [a, b] : kb->subset_pairs()) j["subsets"].push_back({a.to_string(), b.to_string()});
  j["stats"] = json::array();
  for (const auto& [key, iv] : kb->fused_stats()) {
    j["stats"].push_back({{"class", key.first.to_string()}, {"property", key.second.to_string()}, {"interval", to_json(iv)}});
  }
  j["sentences"] = json::array();
  for (const auto& members : kb->sentence_partition()) {
    json forms = json::array();
    for (const auto& f : kb->forms(members.front())) forms.push_back(f.to_string());
    j["sentences"].push_back({{"labels", members}, {"forms", forms}});
  }

  if (cfg.json) {
    out << j.dump(2) << "\n";
    return ok;
  }
  out << "classes:";
  for (const auto& c : kb->classes()) out << " {" << c.to_string() << "}";
  out << "\nmemberships:\n";
  for (const auto& ind : kb->vocabulary().names(AtomKind::individual)) {
    out << "  " << ind << ":";
    for (const auto& c : kb->memberships(ind)) out << " {" << c.to_string() << "}";
    out << "\n";
  }
  out << "subsets:\n";
  for (const auto& [a, b] : kb->subset_pairs()) out << "  " << a.to_string() << " < " << b.to_string() << "\n";
  out << "statistics:\n";
  for (const auto& [key, iv] : kb->fused_stats()) {
    out << "  %(" << key.first.to_string() << ", " << key.second.to_string() << ") in " << iv.to_string() << "\n";
  }
  out << "sentences:\n";
  for (const auto& members : kb->sentence_partition()) {
    out << " ";
    for (const auto& m : members) out << " " << m;
    out << ":";
    for (const auto& f : kb->forms(members.front())) out << " " << f.to_string();
    out << "\n";
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options) {
  CLI::App app{"Reference-class probabilities for knowledge bases"};
  app.require_subcommand(1);
  Config cfg;

  auto* eval = app.add_subcommand("eval", "Evaluate the probability of a sentence");
  eval->add_option("kb", cfg.kb_path, "Knowledge base file (.rck)")->required();
  eval->add_option("--query", cfg.query, "Sentence label or inline form such as heads(t14)")->required();
  eval->add_option("--mode", cfg.mode, "point or interval")->check(CLI::IsMember({"point", "interval"}));
  eval->add_flag("--json", cfg.json, "Emit JSON");
  eval->add_flag("--trace", cfg.trace, "Include the reference-class table");

  auto* check = app.add_subcommand("check", "Run consistency checks");
  check->add_option("kb", cfg.kb_path, "Knowledge base file (.rck)")->required();
  check->add_option("--model", cfg.model_bound, "Search for a model with at most N elements");
  check->add_flag("--json", cfg.json, "Emit JSON");

  auto* dump = app.add_subcommand("dump", "List the deductive closure");
  dump->add_option("kb", cfg.kb_path, "Knowledge base file (.rck)")->required();
  dump->add_flag("--json", cfg.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return parse_failure;
  }

  const Style style(options.color && !cfg.json);
  if (*eval) return cmd_eval(cfg, style, out, err);
  if (*check) return cmd_check(cfg, style, out, err);
  return cmd_dump(cfg, out, err);
}

}  // namespace refclass::cli
