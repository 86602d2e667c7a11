#include "dubovsky/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "dubovsky/errors.hpp"
#include "dubovsky/numfmt.hpp"
#include "dubovsky/presets.hpp"

namespace dubovsky {

namespace {

struct Entry {
  std::string value;
  int line;
};

using Entries = std::map<std::string, Entry, std::less<>>;

// Sections whose keys keep the section name as a prefix.
constexpr std::array<std::string_view, 4> kPrefixSections = {"forcing", "analysis", "output",
                                                             "sweep"};

struct Group {
  std::string_view section;
  std::array<std::string_view, 4> keys;
};

// Sections that only group top-level keys.
constexpr std::array<Group, 5> kGroups = {{
    {"model", {"n", "lambda", "x_star", "y_star"}},
    {"orders", {"alpha", "beta", "", ""}},
    {"initial", {"a", "b", "", ""}},
    {"grid", {"T", "N", "tau", ""}},
    {"scheme", {"sum_bound", "forcing_scale", "", ""}},
}};

struct ThresholdField {
  std::string_view key;
  double AnalysisThresholds::*member;
};

constexpr std::array<ThresholdField, 11> kThresholdFields = {{
    {"settle_fraction", &AnalysisThresholds::settle_fraction},
    {"center_low", &AnalysisThresholds::center_low},
    {"center_high", &AnalysisThresholds::center_high},
    {"focus_max", &AnalysisThresholds::focus_max},
    {"cycle_low", &AnalysisThresholds::cycle_low},
    {"cycle_high", &AnalysisThresholds::cycle_high},
    {"closure_max", &AnalysisThresholds::closure_max},
    {"divergent_min", &AnalysisThresholds::divergent_min},
    {"peak_min_separation", &AnalysisThresholds::peak_min_separation},
    {"envelope_min_variation", &AnalysisThresholds::envelope_min_variation},
    {"two_tone_gap_ratio", &AnalysisThresholds::two_tone_gap_ratio},
}};

bool is_known_key(std::string_view key) {
  static constexpr std::array<std::string_view, 26> plain = {
      "preset",          "name",          "n",             "lambda",        "x_star",
      "y_star",          "alpha",         "beta",          "a",             "b",
      "T",               "N",             "tau",           "sum_bound",     "forcing_scale",
      "forcing.kind",    "forcing.delta", "forcing.omega", "forcing.samples", "output.dir",
      "output.csv",      "output.plots",  "sweep.alpha",   "sweep.beta",    "sweep.delta",
      "sweep.omega"};
  if (std::find(plain.begin(), plain.end(), key) != plain.end()) return true;
  if (key.starts_with("analysis.")) {
    const auto field = key.substr(9);
    return std::any_of(kThresholdFields.begin(), kThresholdFields.end(),
                       [&](const ThresholdField& f) { return f.key == field; });
  }
  return false;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

[[noreturn]] void syntax_error(int line, const std::string& what) {
  throw ConfigError("line " + std::to_string(line) + ": " + what);
}

Entries tokenize(std::string_view text) {
  Entries entries;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') syntax_error(line_no, "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      const bool prefixed =
          std::find(kPrefixSections.begin(), kPrefixSections.end(), section) !=
          kPrefixSections.end();
      const bool group = std::any_of(kGroups.begin(), kGroups.end(),
                                     [&](const Group& g) { return g.section == section; });
      if (!prefixed && !group) syntax_error(line_no, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) syntax_error(line_no, "expected 'key = value'");
    const auto key = std::string(trim(line.substr(0, eq)));
    const auto value = std::string(trim(line.substr(eq + 1)));
    if (key.empty()) syntax_error(line_no, "missing key");
    if (value.empty()) syntax_error(line_no, "missing value for '" + key + "'");

    std::string full = key;
    if (!section.empty()) {
      const auto g = std::find_if(kGroups.begin(), kGroups.end(),
                                  [&](const Group& gr) { return gr.section == section; });
      if (g != kGroups.end()) {
        if (std::find(g->keys.begin(), g->keys.end(), key) == g->keys.end()) {
          syntax_error(line_no, "key '" + key + "' does not belong in [" + section + "]");
        }
      } else {
        full = section + "." + key;
      }
    }
    if (!is_known_key(full)) syntax_error(line_no, "unknown key '" + full + "'");
    if (entries.contains(full)) syntax_error(line_no, "duplicate key '" + full + "'");
    entries.emplace(full, Entry{value, line_no});
  }
  return entries;
}

class Reader {
 public:
  explicit Reader(const Entries& e) : e_(e) {}

  bool has(std::string_view key) const { return e_.find(key) != e_.end(); }

  double number(std::string_view key, double fallback) const {
    const auto it = e_.find(key);
    if (it == e_.end()) return fallback;
    const auto v = parse_double(it->second.value);
    if (!v || !std::isfinite(*v)) {
      syntax_error(it->second.line, std::string(key) + " expects a finite number");
    }
    return *v;
  }

  std::string text(std::string_view key, const std::string& fallback) const {
    const auto it = e_.find(key);
    if (it == e_.end()) return fallback;
    std::string_view v = it->second.value;
    if (v.front() == '"') {
      if (v.size() < 2 || v.back() != '"') syntax_error(it->second.line, "unterminated string");
      v = v.substr(1, v.size() - 2);
      if (v.find('"') != std::string_view::npos) {
        syntax_error(it->second.line, "embedded quote in string");
      }
    }
    return std::string(v);
  }

  bool flag(std::string_view key, bool fallback) const {
    const auto it = e_.find(key);
    if (it == e_.end()) return fallback;
    if (it->second.value == "true") return true;
    if (it->second.value == "false") return false;
    syntax_error(it->second.line, std::string(key) + " expects true or false");
  }

  std::vector<double> list(std::string_view key) const {
    const auto it = e_.find(key);
    if (it == e_.end()) return {};
    const int line = it->second.line;
    std::string_view v = it->second.value;
    if (v.starts_with("range(") && v.ends_with(")")) {
      const auto args = split(v.substr(6, v.size() - 7), line, key);
      if (args.size() != 3) syntax_error(line, std::string(key) + ": range takes (start, stop, count)");
      const double count = args[2];
      if (count < 1.0 || count != std::floor(count) || count > 1e6) {
        syntax_error(line, std::string(key) + ": range count must be a positive integer");
      }
      const auto c = static_cast<std::size_t>(count);
      std::vector<double> out(c);
      for (std::size_t i = 0; i < c; ++i) {
        out[i] = c == 1 ? args[0]
                        : args[0] + (args[1] - args[0]) * static_cast<double>(i) /
                                        static_cast<double>(c - 1);
      }
      if (c > 1) out.back() = args[1];
      return out;
    }
    if (v.front() != '[' || v.back() != ']') {
      syntax_error(line, std::string(key) + " expects [v, ...] or range(start, stop, count)");
    }
    return split(v.substr(1, v.size() - 2), line, key);
  }

  int line_of(std::string_view key) const {
    const auto it = e_.find(key);
    return it == e_.end() ? 0 : it->second.line;
  }

 private:
  static std::vector<double> split(std::string_view body, int line, std::string_view key) {
    std::vector<double> out;
    if (trim(body).empty()) return out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const auto comma = body.find(',', pos);
      const auto item = trim(body.substr(pos, comma == std::string_view::npos ? body.size() - pos
                                                                             : comma - pos));
      const auto v = parse_double(item);
      if (!v || !std::isfinite(*v)) {
        syntax_error(line, std::string(key) + ": bad list element '" + std::string(item) + "'");
      }
      out.push_back(*v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return out;
  }

  const Entries& e_;
};

FractionalOrder order_field(double v, const char* name) {
  try {
    return FractionalOrder(v);
  } catch (const DomainError&) {
    throw ConfigError(std::string(name) + " must lie in (0,1]");
  }
}

void check_range(const std::vector<double>& values, const char* name, bool (*ok)(double),
                 const char* bound) {
  for (double v : values) {
    if (!ok(v)) throw ConfigError(std::string("sweep.") + name + " values must " + bound);
  }
}

void check_string(const std::string& s, const char* name) {
  if (s.empty() || s.find_first_of("\"\n\r") != std::string::npos) {
    throw ConfigError(std::string(name) + " must be a non-empty string without quotes");
  }
}

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

std::string list_text(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  return out + "]";
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
  const Entries entries = tokenize(text);
  const Reader r(entries);

  ScenarioConfig cfg;
  if (r.has("preset")) {
    const auto name = r.text("preset", "");
    cfg = preset(name);
  } else {
    cfg = preset("fig1");
    cfg.name = "custom";
    cfg.preset.reset();
  }
  cfg.name = r.text("name", cfg.name);
  check_string(cfg.name, "name");

  Scenario& s = cfg.scenario;
  const auto& bp = s.params;
  s.params = DubovskyParams(r.number("n", bp.n()), r.number("lambda", bp.lambda()),
                            r.number("x_star", bp.x_star()), r.number("y_star", bp.y_star()));
  s.orders = {order_field(r.number("alpha", s.orders.alpha.value()), "alpha"),
              order_field(r.number("beta", s.orders.beta.value()), "beta")};
  s.ic = InitialConditions(r.number("a", s.ic.a), r.number("b", s.ic.b));

  // Forcing: a bare delta/omega override on a zero base switches to cosine.
  {
    const auto* base_cos = std::get_if<Forcing::Cosine>(&s.forcing.variant());
    std::string kind = std::string(s.forcing.kind_name());
    if (r.has("forcing.kind")) {
      kind = r.text("forcing.kind", kind);
    } else if (kind == "zero" && (r.has("forcing.delta") || r.has("forcing.omega"))) {
      kind = "cosine";
    }
    if (kind == "zero") {
      s.forcing = Forcing::zero();
    } else if (kind == "cosine") {
      s.forcing = Forcing::cosine(r.number("forcing.delta", base_cos ? base_cos->delta : 0.0),
                                  r.number("forcing.omega", base_cos ? base_cos->omega : 1.0));
    } else if (kind == "tabulated") {
      if (!r.has("forcing.samples")) {
        throw ConfigError("forcing.samples is required for tabulated forcing");
      }
      s.forcing = Forcing::tabulated(r.list("forcing.samples"));
    } else {
      syntax_error(r.line_of("forcing.kind"),
                   "forcing.kind must be zero, cosine or tabulated, got '" + kind + "'");
    }
  }

  {
    const double T = r.number("T", s.grid.T());
    if (r.has("N") && r.has("tau")) {
      syntax_error(r.line_of("tau"), "give either N or tau, not both");
    }
    if (r.has("N")) {
      const double n = r.number("N", 0.0);
      if (n < 2.0 || n != std::floor(n) || n > 1e9) {
        throw ConfigError("N must be an integer >= 2");
      }
      s.grid = GridSpec(T, static_cast<std::size_t>(n));
    } else {
      s.grid = GridSpec::from_step(T, r.number("tau", s.grid.tau()));
    }
  }

  if (r.has("sum_bound")) {
    const auto v = parse_sum_bound(r.text("sum_bound", ""));
    if (!v) syntax_error(r.line_of("sum_bound"), "sum_bound must be as_paper or full_history");
    s.options.sum_bound = *v;
  }
  if (r.has("forcing_scale")) {
    const auto v = parse_forcing_scale(r.text("forcing_scale", ""));
    if (!v) {
      syntax_error(r.line_of("forcing_scale"), "forcing_scale must be as_paper or consistent");
    }
    s.options.forcing_scale = *v;
  }
  s.forcing.check_covers(s.grid.N() + 1);

  for (const auto& f : kThresholdFields) {
    const std::string key = "analysis." + std::string(f.key);
    cfg.analysis.*(f.member) = r.number(key, cfg.analysis.*(f.member));
  }
  validate(cfg.analysis);

  cfg.output.dir = r.text("output.dir", cfg.output.dir);
  check_string(cfg.output.dir, "output.dir");
  cfg.output.csv = r.flag("output.csv", cfg.output.csv);
  cfg.output.plots = r.flag("output.plots", cfg.output.plots);

  cfg.sweep.alpha = r.list("sweep.alpha");
  cfg.sweep.beta = r.list("sweep.beta");
  cfg.sweep.delta = r.list("sweep.delta");
  cfg.sweep.omega = r.list("sweep.omega");
  check_range(cfg.sweep.alpha, "alpha", [](double v) { return v > 0.0 && v <= 1.0; },
              "lie in (0,1]");
  check_range(cfg.sweep.beta, "beta", [](double v) { return v > 0.0 && v <= 1.0; },
              "lie in (0,1]");
  check_range(cfg.sweep.delta, "delta", [](double v) { return v >= 0.0; }, "be non-negative");
  check_range(cfg.sweep.omega, "omega", [](double v) { return v > 0.0; }, "be positive");
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ScenarioConfig& c) {
  const Scenario& s = c.scenario;
  std::ostringstream os;
  os << "name = " << quoted(c.name) << "\n";
  if (c.preset) os << "preset = " << quoted(*c.preset) << "\n";

  os << "\n[model]\n"
     << "n = " << format_double(s.params.n()) << "\n"
     << "lambda = " << format_double(s.params.lambda()) << "\n"
     << "x_star = " << format_double(s.params.x_star()) << "\n"
     << "y_star = " << format_double(s.params.y_star()) << "\n";
  os << "\n[orders]\n"
     << "alpha = " << format_double(s.orders.alpha.value()) << "\n"
     << "beta = " << format_double(s.orders.beta.value()) << "\n";
  os << "\n[initial]\n"
     << "a = " << format_double(s.ic.a) << "\n"
     << "b = " << format_double(s.ic.b) << "\n";
  os << "\n[grid]\n"
     << "T = " << format_double(s.grid.T()) << "\n"
     << "N = " << s.grid.N() << "\n";
  os << "\n[scheme]\n"
     << "sum_bound = " << quoted(to_string(s.options.sum_bound)) << "\n"
     << "forcing_scale = " << quoted(to_string(s.options.forcing_scale)) << "\n";

  os << "\n[forcing]\nkind = " << quoted(s.forcing.kind_name()) << "\n";
  if (const auto* cos = std::get_if<Forcing::Cosine>(&s.forcing.variant())) {
    os << "delta = " << format_double(cos->delta) << "\n"
       << "omega = " << format_double(cos->omega) << "\n";
  } else if (const auto* tab = std::get_if<Forcing::Tabulated>(&s.forcing.variant())) {
    os << "samples = " << list_text(tab->samples) << "\n";
  }

  os << "\n[analysis]\n";
  for (const auto& f : kThresholdFields) {
    os << f.key << " = " << format_double(c.analysis.*(f.member)) << "\n";
  }

  os << "\n[output]\n"
     << "dir = " << quoted(c.output.dir) << "\n"
     << "csv = " << (c.output.csv ? "true" : "false") << "\n"
     << "plots = " << (c.output.plots ? "true" : "false") << "\n";

  if (!c.sweep.empty()) {
    os << "\n[sweep]\n";
    if (!c.sweep.alpha.empty()) os << "alpha = " << list_text(c.sweep.alpha) << "\n";
    if (!c.sweep.beta.empty()) os << "beta = " << list_text(c.sweep.beta) << "\n";
    if (!c.sweep.delta.empty()) os << "delta = " << list_text(c.sweep.delta) << "\n";
    if (!c.sweep.omega.empty()) os << "omega = " << list_text(c.sweep.omega) << "\n";
  }
  return os.str();
}

}  // namespace dubovsky
