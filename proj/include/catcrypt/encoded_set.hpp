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
#ifndef CATCRYPT_ENCODED_SET_HPP_
#define CATCRYPT_ENCODED_SET_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace catcrypt {

// A finite ordered set whose elements carry injective bitstring codes.
//
// Elements are tuples of atom labels. Atoms are 1-tuples, the unit set holds
// the single empty tuple, and `product` concatenates tuples, so products are
// strictly associative and unital. Codes of a product are the concatenated
// component codes; pairs are ordered lexicographically by (left, right).
//
// Instances are immutable and cheap to copy.
class EncodedSet {
 public:
  using Tuple = std::vector<std::string>;

  // Atoms with default codes: the binary index, zero padded to the minimal
  // common width.
  explicit EncodedSet(std::vector<std::string> labels);
  // Atoms with explicit codes. Codes must be '0'/'1' strings and injective.
  EncodedSet(std::vector<std::string> labels, std::vector<std::string> codes);

  // The terminal object 1 = {()} with the empty code.
  static EncodedSet unit();
  // 2 = {0, 1} with one-bit codes.
  static EncodedSet two();
  // {0, ..., size-1} labelled by decimal index, coded as code_len-bit binary.
  static EncodedSet range(std::size_t size, unsigned code_len);
  // All n-bit strings, labelled and coded by themselves.
  static EncodedSet bits(unsigned n);
  static EncodedSet from_tuples(std::vector<Tuple> elements,
                                std::vector<std::string> codes);

  std::size_t size() const { return data_->elements.size(); }
  bool empty() const { return size() == 0; }

  const Tuple& element(std::size_t i) const { return data_->elements.at(i); }
  // "a" for atoms, "(a,b)" for tuples, "()" for the unit.
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  const std::string& code(std::size_t i) const { return data_->codes.at(i); }
  const std::vector<std::string>& labels() const { return data_->labels; }

  std::optional<std::size_t> find(const std::string& label) const;
  // Like find, but throws InvalidArgument naming this set.
  std::size_t index_of(const std::string& label) const;
  std::optional<std::size_t> find_code(const std::string& code) const;

  // Common code length, or nullopt if codes differ in length.
  std::optional<std::size_t> code_length() const;

  // Sub-set on the given indices, in the given order, keeping codes.
  EncodedSet subset(const std::vector<std::size_t>& indices) const;

  // Short human readable rendering used in diagnostics: "{a,b,c}" truncated.
  std::string describe() const;

  friend bool operator==(const EncodedSet& a, const EncodedSet& b);

 private:
  struct Data {
    std::vector<Tuple> elements;
    std::vector<std::string> labels;
    std::vector<std::string> codes;
    std::unordered_map<std::string, std::size_t> by_label;
    std::unordered_map<std::string, std::size_t> by_code;
  };

  explicit EncodedSet(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::shared_ptr<const Data> build(std::vector<Tuple> elements,
                                           std::vector<std::string> codes);

  std::shared_ptr<const Data> data_;

  friend EncodedSet product(const EncodedSet& a, const EncodedSet& b);
};

EncodedSet product(const EncodedSet& a, const EncodedSet& b);

// Index of the pair (i, j) in product(a, b).
inline std::size_t pair_index(std::size_t i, std::size_t j,
                              std::size_t right_size) {
  return i * right_size + j;
}

std::string render_tuple(const EncodedSet::Tuple& t);

}  // namespace catcrypt

#endif  // CATCRYPT_ENCODED_SET_HPP_
