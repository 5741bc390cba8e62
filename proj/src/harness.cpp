// Copyright 2026 The dlperf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dlperf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace dlperf {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Config

std::set<Rule> parse_rule_list(std::string_view codes) {
  std::set<Rule> out;
  std::size_t start = 0;
  while (start <= codes.size()) {
    std::size_t comma = codes.find(',', start);
    std::string_view item = codes.substr(start, comma == std::string_view::npos ? codes.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      auto r = parse_rule_code(item);
      if (!r) throw ConfigError("unknown rule code '" + std::string(item) + "'");
      out.insert(*r);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Config parse_config(std::string_view json_text, std::string_view source, const Config& base,
                    const fs::path& base_dir) {
  using nlohmann::json;
  std::string src(source);
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(src + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object()) throw ConfigError(src + ": top-level value must be an object");
  Config out = base;
  auto fail = [&](const std::string& key, const std::string& msg) -> void {
    throw ConfigError(src + ": field '" + key + "': " + msg);
  };
  auto strings = [&](const std::string& key, const json& v) {
    if (!v.is_array()) fail(key, "expected an array of strings");
    std::vector<std::string> items;
    for (const auto& e : v) {
      if (!e.is_string()) fail(key, "expected an array of strings");
      items.push_back(e.get<std::string>());
    }
    return items;
  };
  for (const auto& [key, v] : doc.items()) {
    if (key == "rules") {
      std::set<Rule> rules;
      for (const auto& code : strings(key, v)) {
        auto r = parse_rule_code(code);
        if (!r) fail(key, "unknown rule code '" + code + "'");
        rules.insert(*r);
      }
      out.rules = rules;
    } else if (key == "catalog") {
      if (v.is_null()) {
        out.catalog.reset();
        continue;
      }
      if (!v.is_string()) fail(key, "expected a path string");
      fs::path p = v.get<std::string>();
      out.catalog = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    } else if (key == "depth_limit" || key == "depth") {
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 64) {
        fail(key, "expected an integer between 0 and 64");
      }
      out.depth_limit = v.get<int>();
    } else if (key == "format") {
      std::string f = v.is_string() ? v.get<std::string>() : "";
      if (f == "text") {
        out.format = OutputFormat::Text;
      } else if (f == "json") {
        out.format = OutputFormat::Json;
      } else {
        fail(key, "expected \"text\" or \"json\"");
      }
    } else if (key == "show_suppressed") {
      if (!v.is_boolean()) fail(key, "expected a boolean");
      out.show_suppressed = v.get<bool>();
    } else if (key == "include") {
      out.include = strings(key, v);
    } else if (key == "exclude") {
      out.exclude = strings(key, v);
    } else if (key == "jobs") {
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1024) {
        fail(key, "expected an integer between 0 and 1024");
      }
      out.jobs = v.get<int>();
    } else if (key == "severity") {
      if (!v.is_object()) fail(key, "expected an object of rule code -> \"warning\"|\"error\"");
      for (const auto& [code, sev] : v.items()) {
        if (!parse_rule_code(code)) fail(key, "unknown rule code '" + code + "'");
        auto s = sev.is_string() ? parse_severity(sev.get<std::string>()) : std::nullopt;
        if (!s) fail(key, "severity must be \"warning\" or \"error\"");
        out.severities[code] = *s;
      }
    } else {
      fail(key, "unknown key");
    }
  }
  return out;
}

Config load_config(const fs::path& path, const Config& base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.generic_string() + ": cannot open config file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.generic_string(), base, path.parent_path());
}

// ---------------------------------------------------------------------------
// Discovery

bool glob_match(std::string_view pattern, std::string_view path) {
  std::string re;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    char c = pattern[i];
    if (c == '*') {
      if (i + 1 < pattern.size() && pattern[i + 1] == '*') {
        ++i;
        if (i + 1 < pattern.size() && pattern[i + 1] == '/') {
          ++i;
          re += "(?:.*/)?";
        } else {
          re += ".*";
        }
      } else {
        re += "[^/]*";
      }
    } else if (c == '?') {
      re += "[^/]";
    } else if (std::string_view("\\^$.|+()[]{}").find(c) != std::string_view::npos) {
      re += '\\';
      re += c;
    } else {
      re += c;
    }
  }
  return std::regex_match(path.begin(), path.end(), std::regex(re));
}

namespace {

bool selected(const SourceFile& f, const Config& config) {
  std::string rel = f.relative.generic_string();
  std::string full = f.path.generic_string();
  auto any = [&](const std::vector<std::string>& globs) {
    return std::any_of(globs.begin(), globs.end(),
                       [&](const std::string& g) { return glob_match(g, rel) || glob_match(g, full); });
  };
  if (!config.include.empty() && !any(config.include)) return false;
  return !any(config.exclude);
}

void walk(const fs::path& root, const fs::path& dir, std::set<fs::path>& visited, std::vector<SourceFile>& out) {
  std::error_code ec;
  fs::path canon = fs::canonical(dir, ec);
  if (ec || !visited.insert(canon).second) return;
  std::vector<fs::directory_entry> entries;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) entries.push_back(*it);
  std::sort(entries.begin(), entries.end(),
            [](const fs::directory_entry& a, const fs::directory_entry& b) { return a.path() < b.path(); });
  for (const auto& e : entries) {
    std::string name = e.path().filename().string();
    if (e.is_directory(ec)) {
      if (name.starts_with(".") || name == "__pycache__") continue;
      walk(root, e.path(), visited, out);
    } else if (e.is_regular_file(ec) && e.path().extension() == ".py") {
      out.push_back({e.path().lexically_normal(), e.path().lexically_relative(root)});
    }
  }
}

}  // namespace

std::vector<SourceFile> discover_files(const std::vector<fs::path>& roots, const Config& config,
                                       std::vector<Notice>* notices, bool* missing_root) {
  std::vector<SourceFile> found;
  std::set<fs::path> visited;
  for (const auto& root : roots) {
    std::error_code ec;
    if (fs::is_directory(root, ec)) {
      std::vector<SourceFile> here;
      walk(root, root, visited, here);
      for (auto& f : here) {
        if (selected(f, config)) found.push_back(std::move(f));
      }
    } else if (fs::is_regular_file(root, ec)) {
      found.push_back({root.lexically_normal(), root.filename()});
    } else {
      if (notices) notices->push_back({root.generic_string(), 0, 0, "path does not exist"});
      if (missing_root) *missing_root = true;
    }
  }
  std::sort(found.begin(), found.end(),
            [](const SourceFile& a, const SourceFile& b) { return a.path.generic_string() < b.path.generic_string(); });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const SourceFile& a, const SourceFile& b) { return a.path == b.path; }),
              found.end());
  return found;
}

// ---------------------------------------------------------------------------
// Pipeline

namespace {

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = jobs <= 0 ? std::max(1u, std::thread::hardware_concurrency()) : static_cast<std::size_t>(jobs);
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

CheckResult run_check(const std::vector<fs::path>& roots, const Config& config) {
  CheckResult result;
  ApiCatalog catalog;
  try {
    catalog = load_catalog(config.catalog);
  } catch (const CatalogError& e) {
    result.notices.push_back({e.source(), e.line(), 0, e.what()});
    result.summary = summarize(result.diagnostics, 0, result.notices, config.show_suppressed, true);
    return result;
  }

  bool missing = false;
  std::vector<SourceFile> files = discover_files(roots, config, &result.notices, &missing);

  std::vector<ParseOutcome> parsed(files.size());
  std::vector<std::optional<Notice>> read_errors(files.size());
  parallel_for(files.size(), config.jobs, [&](std::size_t i) {
    auto text = read_file(files[i].path);
    if (!text) {
      read_errors[i] = Notice{files[i].path.generic_string(), 0, 0, "cannot read file"};
      return;
    }
    parsed[i] = parse_source(files[i].path, std::move(*text), module_name_for(files[i].relative));
  });

  std::vector<std::unique_ptr<ModuleContext>> modules(files.size());
  parallel_for(files.size(), config.jobs, [&](std::size_t i) {
    if (parsed[i].ok()) modules[i] = std::make_unique<ModuleContext>(parsed[i].unit);
  });

  std::vector<const ModuleContext*> ready;
  std::map<std::string, const SourceUnit*> units;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (read_errors[i]) {
      result.notices.push_back(*read_errors[i]);
    } else if (!parsed[i].ok()) {
      const ParseError& e = *parsed[i].error;
      result.notices.push_back({files[i].path.generic_string(), e.span.start_line, e.span.start_col,
                                "syntax error: " + e.message + " (file skipped)"});
    } else {
      ready.push_back(modules[i].get());
      units[modules[i]->unit().display_path()] = &modules[i]->unit();
      result.units[modules[i]->unit().display_path()] = parsed[i].unit;
    }
  }

  FunctionTable functions = build_function_table(ready);
  std::vector<std::vector<RawFinding>> per_module(ready.size());
  parallel_for(ready.size(), config.jobs, [&](std::size_t i) {
    per_module[i] = check_module(*ready[i], functions, catalog, config.rules, config.depth_limit);
  });
  std::vector<RawFinding> findings;
  for (auto& f : per_module) findings.insert(findings.end(), f.begin(), f.end());
  normalize_findings(findings);

  result.diagnostics = apply_suppressions(findings, units, result.notices, config.severities);
  std::stable_sort(result.notices.begin(), result.notices.end(), [](const Notice& a, const Notice& b) {
    return std::tie(a.path, a.line, a.col, a.message) < std::tie(b.path, b.line, b.col, b.message);
  });
  result.summary = summarize(result.diagnostics, static_cast<int>(files.size()), result.notices,
                             config.show_suppressed, missing);
  return result;
}

std::string render(const CheckResult& result, OutputFormat format) {
  return format == OutputFormat::Json ? render_json(result.diagnostics, result.summary, result.notices)
                                      : render_text(result.diagnostics, result.summary, result.notices);
}

// ---------------------------------------------------------------------------
// Corpus harness

std::vector<Expectation> parse_expectations(const SourceUnit& unit, std::vector<Notice>* notices) {
  static const std::regex kExpect(R"(#\s*expect:\s*([A-Za-z0-9_]+(?:\s*,\s*[A-Za-z0-9_]+)*))");
  std::vector<Expectation> out;
  for (const Comment& c : unit.comments()) {
    std::smatch m;
    if (!std::regex_search(c.text, m, kExpect)) continue;
    std::string list = m[1].str();
    std::size_t start = 0;
    while (true) {
      std::size_t comma = list.find(',', start);
      std::string code = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      code.erase(0, code.find_first_not_of(" \t"));
      code.erase(code.find_last_not_of(" \t") + 1);
      if (parse_rule_code(code)) {
        out.push_back({unit.display_path(), c.line, code});
      } else if (notices) {
        notices->push_back({unit.display_path(), c.line, c.col, "unknown rule code '" + code + "' in expectation"});
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

CorpusReport run_corpus(const fs::path& root, const Config& config) {
  CorpusReport report;
  CheckResult check = run_check({root}, config);
  report.notices = check.notices;
  report.files = check.summary.files_scanned;
  report.tool_error = check.summary.tool_error;

  std::vector<Expectation> expected;
  for (const auto& [path, unit] : check.units) {
    auto e = parse_expectations(*unit, &report.notices);
    expected.insert(expected.end(), e.begin(), e.end());
  }
  std::vector<Expectation> actual;
  for (const auto& d : check.diagnostics) {
    if (!d.suppressed) actual.push_back({d.path, d.span.start_line, d.code});
  }
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  std::set_intersection(expected.begin(), expected.end(), actual.begin(), actual.end(),
                        std::back_inserter(report.matched));
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(),
                      std::back_inserter(report.missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                      std::back_inserter(report.unexpected));

  auto project_of = [&](const std::string& path) {
    fs::path rel = fs::path(path).lexically_relative(root.lexically_normal());
    auto it = rel.begin();
    if (rel.empty() || std::next(it) == rel.end()) return std::string(".");
    return it->generic_string();
  };
  std::map<std::string, std::set<std::string>> projects;
  std::set<std::string> all_projects;
  for (const auto& r : all_rules()) report.rows[std::string(r.code)];
  for (const auto& a : actual) {
    auto& row = report.rows[a.code];
    ++row.detected;
    std::string p = project_of(a.path);
    projects[a.code].insert(p);
    all_projects.insert(p);
    ++report.per_project[p][a.code];
  }
  for (const auto& e : expected) ++report.rows[e.code].expected;
  for (const auto& e : report.matched) ++report.rows[e.code].matched;
  for (const auto& e : report.missing) ++report.rows[e.code].missing;
  for (const auto& e : report.unexpected) ++report.rows[e.code].unexpected;
  CorpusRow total;
  for (auto& [code, row] : report.rows) {
    row.projects = static_cast<int>(projects[code].size());
    total.detected += row.detected;
    total.expected += row.expected;
    total.matched += row.matched;
    total.missing += row.missing;
    total.unexpected += row.unexpected;
  }
  total.projects = static_cast<int>(all_projects.size());
  report.rows["Total"] = total;
  report.exit_code = report.tool_error ? 2 : (report.missing.empty() && report.unexpected.empty() ? 0 : 1);
  return report;
}

std::string render_corpus_text(const CorpusReport& report) {
  std::ostringstream out;
  for (const auto& e : report.missing) out << e.path << ":" << e.line << ": missing " << e.code << "\n";
  for (const auto& e : report.unexpected) out << e.path << ":" << e.line << ": unexpected " << e.code << "\n";
  for (const auto& n : report.notices) out << n.path << ":" << n.line << ":" << n.col << ": notice: " << n.message << "\n";
  out << "\nfiles: " << report.files << "\n";
  out << "rule     detected  projects  expected  matched  missing  unexpected\n";
  auto row = [&](const std::string& name, const CorpusRow& r) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-8s %8d  %8d  %8d  %7d  %7d  %10d\n", name.c_str(), r.detected, r.projects,
                  r.expected, r.matched, r.missing, r.unexpected);
    out << buf;
  };
  for (const auto& [code, r] : report.rows) {
    if (code != "Total") row(code, r);
  }
  row("Total", report.rows.at("Total"));
  out << "\nper project:\n";
  for (const auto& [project, counts] : report.per_project) {
    out << "  " << project << ":";
    for (const auto& [code, n] : counts) out << " " << code << "=" << n;
    out << "\n";
  }
  out << "\nmatched " << report.matched.size() << ", missing " << report.missing.size() << ", unexpected "
      << report.unexpected.size() << "\n";
  return out.str();
}

std::string render_corpus_json(const CorpusReport& report) {
  using nlohmann::json;
  auto list = [](const std::vector<Expectation>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back({{"path", e.path}, {"line", e.line}, {"code", e.code}});
    return a;
  };
  json rows = json::object();
  for (const auto& [code, r] : report.rows) {
    rows[code] = {{"detected", r.detected}, {"projects", r.projects}, {"expected", r.expected},
                  {"matched", r.matched},   {"missing", r.missing},   {"unexpected", r.unexpected}};
  }
  json doc = {{"version", "1"},
              {"files", report.files},
              {"matched", list(report.matched)},
              {"missing", list(report.missing)},
              {"unexpected", list(report.unexpected)},
              {"rows", rows},
              {"per_project", report.per_project},
              {"exit_code", report.exit_code}};
  return doc.dump(2) + "\n";
}

}  // namespace dlperf
