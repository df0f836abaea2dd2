//
// Copyright 2026 The catcrypt Authors.
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
//
#ifndef CATCRYPT_DIAGRAM_HPP_
#define CATCRYPT_DIAGRAM_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "catcrypt/encoded_set.hpp"
#include "catcrypt/error.hpp"
#include "catcrypt/matrix.hpp"

namespace catcrypt {

// A path is a sequence of edge indices, traversed left to right.
using Path = std::vector<std::size_t>;

// First differing entry of two parallel composites.
struct Witness {
  std::string row;
  std::string col;
  std::string lhs;
  std::string rhs;
};

struct PairResult {
  std::string source;
  std::string target;
  std::string lhs_path;
  std::string rhs_path;
  bool equal = true;
  std::optional<Witness> witness;  // present iff !equal
};

struct CommutativityReport {
  std::vector<PairResult> pairs;

  // Vacuously true for a report without pairs.
  bool commutes() const {
    return std::all_of(pairs.begin(), pairs.end(),
                       [](const PairResult& p) { return p.equal; });
  }
  const PairResult* first_failure() const {
    for (const auto& p : pairs) {
      if (!p.equal) return &p;
    }
    return nullptr;
  }
  // Appends the pairs of `other`, keeping the sorted order.
  void merge(const CommutativityReport& other);
};

std::string render_text(const CommutativityReport& report);
// {"commutes": bool, "pairs": [{"pair": [lhs, rhs], "source", "target",
//  "equal", "witness": {"row","col","lhs","rhs"} | null}]}
std::string render_json(const CommutativityReport& report);

inline constexpr std::size_t kDefaultPathBound = 4;

// A finite diagram: named nodes carrying EncodedSets and labelled edges
// carrying matrices. Two nodes may carry the same set; a commuting square
// A -> ... -> A uses two nodes, so the edge graph stays acyclic.
template <Semiring S>
class Diagram {
 public:
  struct Edge {
    std::string source;
    std::string target;
    Matrix<S> morphism;
    std::string label;
  };

  void add_object(const std::string& name, EncodedSet set) {
    if (!objects_.emplace(name, std::move(set)).second) {
      throw InvalidArgument("diagram: duplicate object '" + name + "'");
    }
  }

  std::size_t add_edge(const std::string& source, const std::string& target,
                       Matrix<S> morphism, std::string label) {
    const EncodedSet& from = object(source);
    const EncodedSet& to = object(target);
    if (!(morphism.rows() == from) || !(morphism.cols() == to)) {
      throw DimensionMismatch("diagram edge '" + label + "': matrix " +
                              morphism.rows().describe() + " -> " +
                              morphism.cols().describe() + " does not match " +
                              source + " " + from.describe() + " -> " + target +
                              " " + to.describe());
    }
    edges_.push_back(Edge{source, target, std::move(morphism), std::move(label)});
    return edges_.size() - 1;
  }

  // Restricts checking to the given pairs instead of all parallel paths.
  void add_parallel_pair(Path lhs, Path rhs) {
    validate(lhs);
    validate(rhs);
    if (source_of(lhs) != source_of(rhs) || target_of(lhs) != target_of(rhs)) {
      throw InvalidArgument("diagram: distinguished paths " + describe(lhs) +
                            " and " + describe(rhs) + " are not parallel");
    }
    distinguished_.emplace_back(std::move(lhs), std::move(rhs));
  }

  const EncodedSet& object(const std::string& name) const {
    auto it = objects_.find(name);
    if (it == objects_.end()) {
      throw InvalidArgument("diagram: unknown object '" + name + "'");
    }
    return it->second;
  }
  const std::map<std::string, EncodedSet>& objects() const { return objects_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<Path, Path>>& distinguished_pairs() const {
    return distinguished_;
  }

  // Throws InvalidArgument when the path is empty or not composable.
  void validate(const Path& path) const {
    if (path.empty()) throw InvalidArgument("diagram: empty path");
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] >= edges_.size()) {
        throw InvalidArgument("diagram: no edge #" + std::to_string(path[i]));
      }
      if (i > 0 && edges_[path[i - 1]].target != edges_[path[i]].source) {
        throw InvalidArgument("diagram: path " + describe(path) +
                              " is not composable at '" +
                              edges_[path[i]].label + "'");
      }
    }
  }

  const std::string& source_of(const Path& p) const {
    return edges_.at(p.front()).source;
  }
  const std::string& target_of(const Path& p) const {
    return edges_.at(p.back()).target;
  }

  // Edge labels joined by ';'.
  std::string describe(const Path& path) const {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) out += ';';
      out += path[i] < edges_.size() ? edges_[path[i]].label : "?";
    }
    return out;
  }

 private:
  std::map<std::string, EncodedSet> objects_;
  std::vector<Edge> edges_;
  std::vector<std::pair<Path, Path>> distinguished_;
};

template <Semiring S>
Matrix<S> path_composite(const Diagram<S>& d, const Path& path) {
  d.validate(path);
  Matrix<S> acc = d.edges()[path.front()].morphism;
  for (std::size_t i = 1; i < path.size(); ++i) {
    acc = compose(acc, d.edges()[path[i]].morphism);
  }
  return acc;
}

// All nonempty paths of at most `bound` edges.
template <Semiring S>
std::vector<Path> enumerate_paths(const Diagram<S>& d,
                                  std::size_t bound = kDefaultPathBound) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (std::size_t e = 0; e < d.edges().size(); ++e) frontier.push_back({e});
  for (std::size_t len = 1; len <= bound && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      out.push_back(p);
      if (len == bound) continue;
      for (std::size_t e = 0; e < d.edges().size(); ++e) {
        if (d.edges()[e].source == d.target_of(p)) {
          Path q = p;
          q.push_back(e);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Entrywise equivalence on semiring values.
template <Semiring S>
using EntryEquivalence =
    std::function<bool(const typename S::value_type&, const typename S::value_type&)>;

template <Semiring S>
EntryEquivalence<S> exact_equality() {
  return [](const typename S::value_type& a, const typename S::value_type& b) {
    return a == b;
  };
}

// Compares the composites of every pair of parallel paths (or only the
// distinguished pairs, when the diagram declares any). Pairs are reported
// sorted by path label, each pair with its lexicographically smaller path on
// the left, so the report does not depend on edge insertion order.
template <Semiring S>
CommutativityReport check_commutes(const Diagram<S>& d,
                                   const EntryEquivalence<S>& eq = exact_equality<S>(),
                                   std::size_t bound = kDefaultPathBound) {
  std::vector<std::pair<Path, Path>> pairs = d.distinguished_pairs();
  if (pairs.empty()) {
    const std::vector<Path> paths = enumerate_paths(d, bound);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = i + 1; j < paths.size(); ++j) {
        if (d.source_of(paths[i]) == d.source_of(paths[j]) &&
            d.target_of(paths[i]) == d.target_of(paths[j])) {
          pairs.emplace_back(paths[i], paths[j]);
        }
      }
    }
  }

  std::map<Path, Matrix<S>> cache;
  auto composite = [&](const Path& p) -> const Matrix<S>& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, path_composite(d, p)).first;
    return it->second;
  };

  CommutativityReport report;
  for (auto& [lhs, rhs] : pairs) {
    if (d.describe(rhs) < d.describe(lhs)) std::swap(lhs, rhs);
    const Matrix<S>& a = composite(lhs);
    const Matrix<S>& b = composite(rhs);
    PairResult result{d.source_of(lhs), d.target_of(lhs), d.describe(lhs),
                      d.describe(rhs), true, std::nullopt};
    if (auto diff = first_difference(a, b, eq)) {
      result.equal = false;
      result.witness = Witness{a.rows().label(diff->row), a.cols().label(diff->col),
                               S::to_string(a.at(diff->row, diff->col)),
                               S::to_string(b.at(diff->row, diff->col))};
    }
    report.pairs.push_back(std::move(result));
  }
  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const PairResult& x, const PairResult& y) {
              return std::tie(x.lhs_path, x.rhs_path) < std::tie(y.lhs_path, y.rhs_path);
            });
  return report;
}

}  // namespace catcrypt

#endif  // CATCRYPT_DIAGRAM_HPP_
