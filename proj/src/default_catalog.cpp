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

// Curated default catalog. The node-creating list is a hand-reviewed subset
// of the graph-building TensorFlow 1.x/2.x Python API: every entry adds at
// least one deterministic operation (or variable plus initializer) to the
// default graph each time it is called. docs/catalog.md describes how to
// regenerate a complete list from the library's export decorators.

#include <array>
#include <map>
#include <string_view>

#include "catalog_internal.hpp"

namespace dlperf {
namespace {

struct Entry {
  std::string_view name;
  std::string_view note;
};

constexpr std::array kNodeCreating = {
    Entry{"tensorflow.matmul", "adds a MatMul op"},
    Entry{"tensorflow.linalg.matmul", "adds a MatMul op (tf.linalg export)"},
    Entry{"tensorflow.tensordot", "adds Reshape/Transpose/MatMul ops"},
    Entry{"tensorflow.einsum", "adds an Einsum op"},
    Entry{"tensorflow.add", "adds an AddV2 op"},
    Entry{"tensorflow.math.add", "adds an AddV2 op (tf.math export)"},
    Entry{"tensorflow.add_n", "adds an AddN op"},
    Entry{"tensorflow.subtract", "adds a Sub op"},
    Entry{"tensorflow.multiply", "adds a Mul op"},
    Entry{"tensorflow.math.multiply", "adds a Mul op (tf.math export)"},
    Entry{"tensorflow.divide", "adds a RealDiv op"},
    Entry{"tensorflow.square", "adds a Square op"},
    Entry{"tensorflow.sqrt", "adds a Sqrt op"},
    Entry{"tensorflow.exp", "adds an Exp op"},
    Entry{"tensorflow.log", "adds a Log op (1.x name)"},
    Entry{"tensorflow.math.log", "adds a Log op"},
    Entry{"tensorflow.pow", "adds a Pow op"},
    Entry{"tensorflow.abs", "adds an Abs op"},
    Entry{"tensorflow.maximum", "adds a Maximum op"},
    Entry{"tensorflow.minimum", "adds a Minimum op"},
    Entry{"tensorflow.equal", "adds an Equal op"},
    Entry{"tensorflow.where", "adds a Select/Where op"},
    Entry{"tensorflow.sigmoid", "adds a Sigmoid op"},
    Entry{"tensorflow.tanh", "adds a Tanh op"},
    Entry{"tensorflow.reduce_sum", "adds a Sum op"},
    Entry{"tensorflow.reduce_mean", "adds a Mean op"},
    Entry{"tensorflow.reduce_max", "adds a Max op"},
    Entry{"tensorflow.reduce_min", "adds a Min op"},
    Entry{"tensorflow.argmax", "adds an ArgMax op"},
    Entry{"tensorflow.concat", "adds a ConcatV2 op"},
    Entry{"tensorflow.stack", "adds a Pack op"},
    Entry{"tensorflow.split", "adds a Split op"},
    Entry{"tensorflow.slice", "adds a Slice op"},
    Entry{"tensorflow.tile", "adds a Tile op"},
    Entry{"tensorflow.reshape", "adds a Reshape op"},
    Entry{"tensorflow.transpose", "adds a Transpose op"},
    Entry{"tensorflow.expand_dims", "adds an ExpandDims op"},
    Entry{"tensorflow.squeeze", "adds a Squeeze op"},
    Entry{"tensorflow.cast", "adds a Cast op"},
    Entry{"tensorflow.gather", "adds a GatherV2 op"},
    Entry{"tensorflow.one_hot", "adds a OneHot op"},
    Entry{"tensorflow.constant", "adds a Const op"},
    Entry{"tensorflow.zeros", "adds a Fill/Const op"},
    Entry{"tensorflow.ones", "adds a Fill/Const op"},
    Entry{"tensorflow.fill", "adds a Fill op"},
    Entry{"tensorflow.Variable", "adds a VariableV2 op plus Assign initializer"},
    Entry{"tensorflow.get_variable", "adds a variable and its initializer ops"},
    Entry{"tensorflow.placeholder", "adds a Placeholder op"},
    Entry{"tensorflow.global_variables_initializer", "adds a NoOp grouping every initializer"},
    Entry{"tensorflow.gradients", "adds the gradient subgraph of its targets"},
    Entry{"tensorflow.nn.relu", "adds a Relu op"},
    Entry{"tensorflow.nn.sigmoid", "adds a Sigmoid op"},
    Entry{"tensorflow.nn.tanh", "adds a Tanh op"},
    Entry{"tensorflow.nn.softmax", "adds a Softmax op"},
    Entry{"tensorflow.nn.conv2d", "adds a Conv2D op"},
    Entry{"tensorflow.nn.max_pool", "adds a MaxPool op"},
    Entry{"tensorflow.nn.bias_add", "adds a BiasAdd op"},
    Entry{"tensorflow.nn.l2_loss", "adds an L2Loss op"},
    Entry{"tensorflow.nn.embedding_lookup", "adds a Gather subgraph"},
    Entry{"tensorflow.nn.softmax_cross_entropy_with_logits", "adds a SoftmaxCrossEntropyWithLogits op"},
    Entry{"tensorflow.nn.sparse_softmax_cross_entropy_with_logits",
          "adds a SparseSoftmaxCrossEntropyWithLogits op"},
    Entry{"tensorflow.losses.mean_squared_error", "adds the squared-difference loss subgraph"},
    Entry{"tensorflow.layers.dense", "adds kernel/bias variables and a MatMul op"},
    Entry{"tensorflow.layers.conv2d", "adds kernel/bias variables and a Conv2D op"},
    Entry{"tensorflow.keras.layers.Dense", "builds a new layer with fresh variables"},
    Entry{"tensorflow.keras.layers.Conv2D", "builds a new layer with fresh variables"},
    Entry{"tensorflow.image.resize_images", "adds a ResizeBilinear op"},
    Entry{"tensorflow.image.decode_jpeg", "adds a DecodeJpeg op"},
    Entry{"tensorflow.summary.scalar", "adds a ScalarSummary op"},
    Entry{"tensorflow.summary.merge_all", "adds a MergeSummary op"},
    Entry{"tensorflow.train.Saver", "adds save/restore ops for every variable"},
    Entry{"tensorflow.train.GradientDescentOptimizer.minimize",
          "adds gradient and ApplyGradientDescent ops"},
    Entry{"tensorflow.train.AdamOptimizer.minimize", "adds gradient, slot variables and ApplyAdam ops"},
    Entry{"tensorflow.train.MomentumOptimizer.minimize", "adds gradient, slot variables and ApplyMomentum ops"},
    Entry{"tensorflow.train.RMSPropOptimizer.minimize", "adds gradient, slot variables and ApplyRMSProp ops"},
    Entry{"tensorflow.train.AdagradOptimizer.minimize", "adds gradient, slot variables and ApplyAdagrad ops"},
    Entry{"tensorflow.keras.optimizers.Adam.minimize", "adds gradient and apply ops in graph mode"},
    Entry{"tensorflow.keras.optimizers.SGD.minimize", "adds gradient and apply ops in graph mode"},
};

constexpr std::array<std::string_view, 12> kExcluded = {
    "tensorflow.random.uniform",   "tensorflow.random_uniform",
    "tensorflow.random.normal",    "tensorflow.random_normal",
    "tensorflow.random.truncated_normal", "tensorflow.truncated_normal",
    "tensorflow.random.shuffle",   "tensorflow.random_shuffle",
    "tensorflow.random.categorical", "tensorflow.multinomial",
    "tensorflow.nn.dropout",       "tensorflow.random.gamma",
};

constexpr std::array<std::string_view, 15> kConstructors = {
    "tensorflow.data.TFRecordDataset",
    "tensorflow.data.TextLineDataset",
    "tensorflow.data.FixedLengthRecordDataset",
    "tensorflow.data.Dataset.from_tensor_slices",
    "tensorflow.data.Dataset.from_tensors",
    "tensorflow.data.Dataset.from_generator",
    "tensorflow.data.Dataset.range",
    "tensorflow.data.Dataset.zip",
    "tensorflow.data.Dataset.list_files",
    "tensorflow.data.experimental.make_csv_dataset",
    "tensorflow.data.experimental.CsvDataset",
    "tensorflow.keras.preprocessing.image_dataset_from_directory",
    "tensorflow.keras.utils.image_dataset_from_directory",
    "tensorflow.keras.utils.text_dataset_from_directory",
    "tensorflow.keras.preprocessing.text_dataset_from_directory",
};

}  // namespace

int default_transformer_arity(std::string_view method) {
  static const std::map<std::string, int, std::less<>> kArity = {
      {"apply", 1},   {"batch", 1},       {"cache", 0},  {"concatenate", 1}, {"enumerate", 0},
      {"filter", 1},  {"flat_map", 1},    {"interleave", 1}, {"map", 1},     {"padded_batch", 1},
      {"prefetch", 1}, {"repeat", 0},     {"shard", 2},  {"shuffle", 1},     {"skip", 1},
      {"take", 1},    {"unbatch", 0},     {"window", 1}, {"with_options", 1},
  };
  auto it = kArity.find(method);
  return it == kArity.end() ? 0 : it->second;
}

ApiCatalog build_default_catalog() {
  ApiCatalog c;
  c.version = "1";
  for (const auto& e : kNodeCreating) c.node_creating.insert(QualifiedName::from(e.name));
  for (auto n : kExcluded) c.excluded_nondeterministic.insert(QualifiedName::from(n));
  for (auto n : kConstructors) c.dataset_constructors.insert(QualifiedName::from(n));
  for (std::string_view m : {"apply", "batch", "cache", "concatenate", "enumerate", "filter", "flat_map",
                             "interleave", "map", "padded_batch", "prefetch", "repeat", "shard", "shuffle",
                             "skip", "take", "unbatch", "window", "with_options"}) {
    c.dataset_transformers[std::string(m)] = TransformerInfo{std::string(m), default_transformer_arity(m)};
  }
  c.parallelizable["map"] = ParallelizableMethod{"map", "num_parallel_calls", 1};
  c.parallelizable["interleave"] = ParallelizableMethod{"interleave", "num_parallel_calls", 3};
  c.namespace_aliases = {
      {QualifiedName::from("keras"), QualifiedName::from("tensorflow.keras")},
      {QualifiedName::from("tensorflow.compat.v1"), QualifiedName::from("tensorflow")},
      {QualifiedName::from("tensorflow.compat.v2"), QualifiedName::from("tensorflow")},
      {QualifiedName::from("tensorflow.python.keras"), QualifiedName::from("tensorflow.keras")},
  };
  return c;
}

const std::map<std::string, std::string>& default_node_creating_notes() {
  static const std::map<std::string, std::string> notes = [] {
    std::map<std::string, std::string> m;
    for (const auto& e : kNodeCreating) m.emplace(e.name, e.note);
    return m;
  }();
  return notes;
}

}  // namespace dlperf
