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

#include "dlperf/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "catalog_internal.hpp"
#include "json.hpp"

namespace dlperf {
namespace {

using nlohmann::json;

std::string format_error(const std::string& source, int line, const std::string& field,
                         const std::string& detail) {
  std::string out = source;
  if (line > 0) out += ":" + std::to_string(line);
  out += ": ";
  if (!field.empty()) out += "field '" + field + "': ";
  out += detail;
  return out;
}

// Locates a field in the raw text so errors can name a line even though the
// JSON library does not keep value positions.
class TextLocator {
 public:
  explicit TextLocator(std::string_view text) : text_(text) {}

  std::size_t find(std::string_view needle, std::size_t from = 0) const {
    std::size_t p = text_.find(needle, from);
    return p == std::string_view::npos ? from : p;
  }

  int line_at(std::size_t offset) const {
    offset = std::min(offset, text_.size());
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
  }

  std::size_t key_offset(std::string_view key) const { return find("\"" + std::string(key) + "\""); }

  int line_of_value(std::string_view key, const json& value) const {
    std::size_t base = key_offset(key);
    if (value.is_string()) return line_at(find(json(value).dump(), base));
    return line_at(base);
  }

 private:
  std::string_view text_;
};

class Merger {
 public:
  Merger(std::string_view text, std::string source) : loc_(text), source_(std::move(source)) {}

  [[noreturn]] void fail(std::string_view key, int line, const std::string& detail) const {
    throw CatalogError(source_, line, std::string(key), detail);
  }
  [[noreturn]] void fail(std::string_view key, const std::string& detail) const {
    fail(key, loc_.line_at(loc_.key_offset(key)), detail);
  }

  QualifiedName qualified(std::string_view key, const json& v) const {
    if (!v.is_string()) fail(key, "expected a dotted name string, got " + std::string(v.type_name()));
    auto q = QualifiedName::parse(v.get<std::string>());
    if (!q) fail(key, loc_.line_of_value(key, v), "malformed dotted name '" + v.get<std::string>() + "'");
    return *q;
  }

  std::string identifier(std::string_view key, const json& v) const {
    if (!v.is_string()) fail(key, "expected an identifier string, got " + std::string(v.type_name()));
    std::string s = v.get<std::string>();
    if (!is_identifier(s)) fail(key, loc_.line_of_value(key, v), "malformed identifier '" + s + "'");
    return s;
  }

  const json& array(std::string_view key, const json& v, std::string_view what) const {
    if (!v.is_array()) fail(key, "expected " + std::string(what) + " array");
    return v;
  }

  // Applies either a replacing array or an {add, remove} edit object.
  template <typename Set, typename Parse, typename Erase>
  void merge_set(std::string_view key, const json& v, Set& target, Parse parse_one, Erase erase_one) {
    if (v.is_array()) {
      Set fresh;
      for (const auto& e : v) parse_one(fresh, e);
      target = std::move(fresh);
      return;
    }
    if (!v.is_object()) fail(key, "expected an array or an {\"add\", \"remove\"} object");
    for (const auto& [k, sub] : v.items()) {
      if (k != "add" && k != "remove") fail(key, loc_.line_at(loc_.find("\"" + k + "\"", loc_.key_offset(key))),
                                            "unknown key '" + k + "' in merge object");
    }
    if (v.contains("remove")) {
      for (const auto& e : array(key, v["remove"], "'remove'")) erase_one(target, e);
    }
    if (v.contains("add")) {
      for (const auto& e : array(key, v["add"], "'add'")) parse_one(target, e);
    }
  }

  void merge_names(std::string_view key, const json& v, std::set<QualifiedName>& target) {
    merge_set(
        key, v, target, [&](std::set<QualifiedName>& s, const json& e) { s.insert(qualified(key, e)); },
        [&](std::set<QualifiedName>& s, const json& e) { s.erase(qualified(key, e)); });
  }

  void merge_transformers(const json& v, std::map<std::string, TransformerInfo>& target) {
    constexpr std::string_view key = "dataset_transformers";
    merge_set(
        key, v, target,
        [&](std::map<std::string, TransformerInfo>& m, const json& e) {
          std::string name = identifier(key, e);
          m[name] = TransformerInfo{name, default_transformer_arity(name)};
        },
        [&](std::map<std::string, TransformerInfo>& m, const json& e) { m.erase(identifier(key, e)); });
  }

  ParallelizableMethod parallel_entry(const json& e) const {
    constexpr std::string_view key = "parallelizable";
    if (!e.is_object()) fail(key, "expected {\"method\", \"keyword\"} objects");
    ParallelizableMethod out;
    for (const auto& [k, sub] : e.items()) {
      if (k == "method") {
        out.method = identifier(key, sub);
      } else if (k == "keyword") {
        out.keyword = identifier(key, sub);
      } else if (k == "position") {
        if (!sub.is_number_integer() || sub.get<int>() < 0) fail(key, "'position' must be a non-negative integer");
        out.position = sub.get<int>();
      } else {
        fail(key, loc_.line_at(loc_.find("\"" + k + "\"", loc_.key_offset(key))), "unknown key '" + k + "'");
      }
    }
    if (out.method.empty() || out.keyword.empty()) fail(key, "entries need both 'method' and 'keyword'");
    return out;
  }

  void merge_parallel(const json& v, std::map<std::string, ParallelizableMethod>& target) {
    constexpr std::string_view key = "parallelizable";
    merge_set(
        key, v, target,
        [&](std::map<std::string, ParallelizableMethod>& m, const json& e) {
          auto p = parallel_entry(e);
          m[p.method] = p;
        },
        [&](std::map<std::string, ParallelizableMethod>& m, const json& e) {
          m.erase(e.is_object() ? parallel_entry(e).method : identifier(key, e));
        });
  }

  NamespaceAlias alias_entry(const json& e) const {
    constexpr std::string_view key = "namespace_aliases";
    if (!e.is_array() || e.size() != 2) fail(key, "expected [prefix, canonical] pairs");
    return NamespaceAlias{qualified(key, e[0]), qualified(key, e[1])};
  }

  void merge_aliases(const json& v, std::vector<NamespaceAlias>& target) {
    constexpr std::string_view key = "namespace_aliases";
    merge_set(
        key, v, target,
        [&](std::vector<NamespaceAlias>& list, const json& e) {
          auto a = alias_entry(e);
          std::erase_if(list, [&](const NamespaceAlias& x) { return x.prefix == a.prefix; });
          list.push_back(a);
        },
        [&](std::vector<NamespaceAlias>& list, const json& e) {
          QualifiedName prefix = e.is_array() ? alias_entry(e).prefix : qualified(key, e);
          std::erase_if(list, [&](const NamespaceAlias& x) { return x.prefix == prefix; });
        });
  }

  ApiCatalog run(const ApiCatalog& base, std::string_view text) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      int line = loc_.line_at(e.byte > 0 ? e.byte - 1 : 0);
      throw CatalogError(source_, line, "", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw CatalogError(source_, 1, "", "top-level value must be an object");
    ApiCatalog out = base;
    for (const auto& [key, value] : doc.items()) {
      if (key == "version") {
        if (!value.is_string()) fail(key, "expected a string");
        out.version = value.get<std::string>();
      } else if (key == "node_creating") {
        merge_names(key, value, out.node_creating);
      } else if (key == "excluded_nondeterministic") {
        merge_names(key, value, out.excluded_nondeterministic);
      } else if (key == "dataset_constructors") {
        merge_names(key, value, out.dataset_constructors);
      } else if (key == "dataset_transformers") {
        merge_transformers(value, out.dataset_transformers);
      } else if (key == "parallelizable") {
        merge_parallel(value, out.parallelizable);
      } else if (key == "namespace_aliases") {
        merge_aliases(value, out.namespace_aliases);
      } else {
        fail(key, "unknown key");
      }
    }
    out.validate(source_);
    return out;
  }

 private:
  TextLocator loc_;
  std::string source_;
};

}  // namespace

CatalogError::CatalogError(std::string source, int line, std::string field, const std::string& detail)
    : std::runtime_error(format_error(source, line, field, detail)),
      source_(std::move(source)),
      line_(line),
      field_(std::move(field)) {}

QualifiedName ApiCatalog::canonical(const QualifiedName& name) const {
  const NamespaceAlias* best = nullptr;
  for (const auto& alias : namespace_aliases) {
    if (name.starts_with(alias.prefix) && (!best || alias.prefix.size() > best->prefix.size())) best = &alias;
  }
  return best ? name.rebased(best->prefix, best->canonical) : name;
}

bool ApiCatalog::is_excluded(const QualifiedName& name) const {
  return excluded_nondeterministic.count(canonical(name)) > 0;
}

bool ApiCatalog::is_node_creating(const QualifiedName& name) const {
  QualifiedName c = canonical(name);
  if (excluded_nondeterministic.count(c)) return false;
  return node_creating.count(c) > 0;
}

bool ApiCatalog::is_dataset_constructor(const QualifiedName& name) const {
  return dataset_constructors.count(canonical(name)) > 0;
}

const TransformerInfo* ApiCatalog::transformer(std::string_view method) const {
  auto it = dataset_transformers.find(std::string(method));
  return it == dataset_transformers.end() ? nullptr : &it->second;
}

const ParallelizableMethod* ApiCatalog::parallel_method(std::string_view method) const {
  auto it = parallelizable.find(std::string(method));
  return it == parallelizable.end() ? nullptr : &it->second;
}

void ApiCatalog::validate(std::string_view source) const {
  std::string src(source);
  for (const auto& n : node_creating) {
    if (excluded_nondeterministic.count(n)) {
      throw CatalogError(src, 0, "node_creating", "'" + n.str() + "' is also listed as excluded_nondeterministic");
    }
  }
  auto check_head = [&](const std::set<QualifiedName>& names, const char* field) {
    for (const auto& n : names) {
      if (canonical(n).head() != "tensorflow") {
        throw CatalogError(src, 0, field, "'" + n.str() + "' does not canonicalize under 'tensorflow'");
      }
    }
  };
  check_head(node_creating, "node_creating");
  check_head(excluded_nondeterministic, "excluded_nondeterministic");
  check_head(dataset_constructors, "dataset_constructors");
  for (const auto& a : namespace_aliases) {
    if (a.canonical.head() != "tensorflow") {
      throw CatalogError(src, 0, "namespace_aliases", "canonical prefix '" + a.canonical.str() + "' is not under 'tensorflow'");
    }
  }
  for (const char* m : {"map", "interleave"}) {
    if (!parallelizable.count(m)) throw CatalogError(src, 0, "parallelizable", std::string("'") + m + "' is required");
  }
  for (const char* m : {"batch", "map", "shuffle", "repeat", "prefetch", "filter", "interleave", "cache"}) {
    if (!dataset_transformers.count(m)) {
      throw CatalogError(src, 0, "dataset_transformers", std::string("'") + m + "' is required");
    }
  }
}

const ApiCatalog& default_catalog() {
  static const ApiCatalog catalog = [] {
    ApiCatalog c = build_default_catalog();
    c.validate("<default catalog>");
    return c;
  }();
  return catalog;
}

ApiCatalog merge_catalog(const ApiCatalog& base, std::string_view json_text, std::string_view source_name) {
  return Merger(json_text, std::string(source_name)).run(base, json_text);
}

ApiCatalog load_catalog(const std::optional<std::filesystem::path>& path) {
  if (!path) return default_catalog();
  std::ifstream in(*path, std::ios::binary);
  if (!in) throw CatalogError(path->generic_string(), 0, "", "cannot open catalog file");
  std::stringstream buf;
  buf << in.rdbuf();
  return merge_catalog(default_catalog(), buf.str(), path->generic_string());
}

std::string save_catalog(const ApiCatalog& catalog) {
  using nlohmann::json;
  auto names = [](const std::set<QualifiedName>& s) {
    std::vector<std::string> v;
    for (const auto& n : s) v.push_back(n.str());
    std::sort(v.begin(), v.end());
    return v;
  };
  json doc = json::object();
  doc["version"] = catalog.version;
  doc["node_creating"] = names(catalog.node_creating);
  doc["excluded_nondeterministic"] = names(catalog.excluded_nondeterministic);
  doc["dataset_constructors"] = names(catalog.dataset_constructors);
  json transformers = json::array();
  for (const auto& [name, info] : catalog.dataset_transformers) transformers.push_back(name);
  doc["dataset_transformers"] = transformers;
  json parallel = json::array();
  for (const auto& [name, p] : catalog.parallelizable) {
    json e = {{"method", p.method}, {"keyword", p.keyword}};
    if (p.position) e["position"] = *p.position;
    parallel.push_back(e);
  }
  doc["parallelizable"] = parallel;
  std::vector<std::pair<std::string, std::string>> aliases;
  for (const auto& a : catalog.namespace_aliases) aliases.emplace_back(a.prefix.str(), a.canonical.str());
  std::sort(aliases.begin(), aliases.end());
  json alias_json = json::array();
  for (const auto& [p, c] : aliases) alias_json.push_back(json::array({p, c}));
  doc["namespace_aliases"] = alias_json;
  return doc.dump(2) + "\n";
}

std::string catalog_markdown(const ApiCatalog& catalog) {
  const auto& notes = default_node_creating_notes();
  std::vector<std::string> names;
  for (const auto& n : catalog.node_creating) names.push_back(n.str());
  std::sort(names.begin(), names.end());
  std::string out = "| API | Graph effect |\n|---|---|\n";
  for (const auto& n : names) {
    auto it = notes.find(n);
    out += "| `" + n + "` | " + (it == notes.end() ? std::string("user supplied") : it->second) + " |\n";
  }
  return out;
}

}  // namespace dlperf
