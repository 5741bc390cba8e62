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

// API knowledge consumed by the rules: which library calls append nodes to a
// computation graph, which calls construct tf.data pipelines, and which
// pipeline transformations accept a parallelism keyword.

#ifndef DLPERF_CATALOG_HPP_
#define DLPERF_CATALOG_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlperf/qualified_name.hpp"

namespace dlperf {

/// A malformed or inconsistent catalog file. `line` is 1-based, 0 when the
/// problem has no single location.
class CatalogError : public std::runtime_error {
 public:
  CatalogError(std::string source, int line, std::string field, const std::string& detail);

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string source_;
  int line_;
  std::string field_;
};

struct TransformerInfo {
  std::string method;
  /// Minimum argument count (positional + keyword) of a well-formed call.
  int min_args = 0;
};

struct ParallelizableMethod {
  std::string method;
  std::string keyword;
  /// Zero-based positional slot that also sets `keyword`, if any.
  std::optional<int> position;
};

struct NamespaceAlias {
  QualifiedName prefix;
  QualifiedName canonical;
  friend bool operator==(const NamespaceAlias&, const NamespaceAlias&) = default;
};

class ApiCatalog {
 public:
  std::string version;
  std::set<QualifiedName> node_creating;
  std::set<QualifiedName> excluded_nondeterministic;
  std::set<QualifiedName> dataset_constructors;
  std::map<std::string, TransformerInfo> dataset_transformers;
  std::map<std::string, ParallelizableMethod> parallelizable;
  std::vector<NamespaceAlias> namespace_aliases;

  /// Applies the longest matching namespace alias (`keras.x` ->
  /// `tensorflow.keras.x`).
  QualifiedName canonical(const QualifiedName& name) const;

  bool is_node_creating(const QualifiedName& name) const;
  bool is_excluded(const QualifiedName& name) const;
  bool is_dataset_constructor(const QualifiedName& name) const;
  const TransformerInfo* transformer(std::string_view method) const;
  const ParallelizableMethod* parallel_method(std::string_view method) const;

  /// Checks the structural invariants; throws CatalogError.
  void validate(std::string_view source = "<catalog>") const;
};

/// Embedded default catalog.
const ApiCatalog& default_catalog();

/// One line of provenance for each default node-creating entry.
const std::map<std::string, std::string>& default_node_creating_notes();

/// No path: the default catalog. With a path: the file merged over the
/// default. Throws CatalogError (including for a missing file).
ApiCatalog load_catalog(const std::optional<std::filesystem::path>& path);

/// Merges catalog JSON text over `base`. Plain arrays replace a set; objects
/// of the form {"add": [...], "remove": [...]} edit it.
ApiCatalog merge_catalog(const ApiCatalog& base, std::string_view json_text,
                         std::string_view source_name);

/// Canonical JSON (sorted keys and entries, two-space indent, trailing
/// newline).
std::string save_catalog(const ApiCatalog& catalog);

/// Markdown traceability table for the node-creating set.
std::string catalog_markdown(const ApiCatalog& catalog);

}  // namespace dlperf

#endif  // DLPERF_CATALOG_HPP_
