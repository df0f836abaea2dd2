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
#include "catcrypt/encoded_set.hpp"

#include <bit>
#include <utility>

#include "catcrypt/error.hpp"

namespace catcrypt {
namespace {

std::string binary(std::size_t value, unsigned width) {
  std::string out(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1U) out[i] = '1';
  }
  return out;
}

unsigned minimal_width(std::size_t n) {
  return n <= 1 ? 0 : static_cast<unsigned>(std::bit_width(n - 1));
}

}  // namespace

std::string render_tuple(const EncodedSet::Tuple& t) {
  if (t.size() == 1) return t.front();
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += t[i];
  }
  return out + ")";
}

std::shared_ptr<const EncodedSet::Data> EncodedSet::build(
    std::vector<Tuple> elements, std::vector<std::string> codes) {
  if (elements.size() != codes.size()) {
    throw InvalidArgument("encoded set: " + std::to_string(elements.size()) +
                          " elements but " + std::to_string(codes.size()) +
                          " codes");
  }
  auto data = std::make_shared<Data>();
  data->labels.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::string label = render_tuple(elements[i]);
    if (!data->by_label.emplace(label, i).second) {
      throw InvalidArgument("encoded set: duplicate element '" + label + "'");
    }
    for (char ch : codes[i]) {
      if (ch != '0' && ch != '1') {
        throw InvalidArgument("encoded set: code '" + codes[i] + "' of '" +
                              label + "' is not a bitstring");
      }
    }
    if (!data->by_code.emplace(codes[i], i).second) {
      throw InvalidArgument("encoded set: code '" + codes[i] +
                            "' is not injective (reused by '" + label + "')");
    }
    data->labels.push_back(std::move(label));
  }
  data->elements = std::move(elements);
  data->codes = std::move(codes);
  return data;
}

EncodedSet::EncodedSet(std::vector<std::string> labels) {
  const unsigned width = minimal_width(labels.size());
  std::vector<Tuple> elements;
  std::vector<std::string> codes;
  elements.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    elements.push_back({std::move(labels[i])});
    codes.push_back(binary(i, width));
  }
  data_ = build(std::move(elements), std::move(codes));
}

EncodedSet::EncodedSet(std::vector<std::string> labels,
                       std::vector<std::string> codes) {
  std::vector<Tuple> elements;
  elements.reserve(labels.size());
  for (auto& l : labels) elements.push_back({std::move(l)});
  data_ = build(std::move(elements), std::move(codes));
}

EncodedSet EncodedSet::from_tuples(std::vector<Tuple> elements,
                                   std::vector<std::string> codes) {
  return EncodedSet(build(std::move(elements), std::move(codes)));
}

EncodedSet EncodedSet::unit() {
  static const EncodedSet kUnit = from_tuples({Tuple{}}, {""});
  return kUnit;
}

EncodedSet EncodedSet::two() {
  static const EncodedSet kTwo({"0", "1"}, {"0", "1"});
  return kTwo;
}

EncodedSet EncodedSet::range(std::size_t size, unsigned code_len) {
  if (code_len < 64 && size > (std::size_t{1} << code_len)) {
    throw InvalidArgument("encoded set: " + std::to_string(size) +
                          " elements do not fit " + std::to_string(code_len) +
                          "-bit codes");
  }
  std::vector<std::string> labels, codes;
  for (std::size_t i = 0; i < size; ++i) {
    labels.push_back(std::to_string(i));
    codes.push_back(binary(i, code_len));
  }
  return EncodedSet(std::move(labels), std::move(codes));
}

EncodedSet EncodedSet::bits(unsigned n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
    labels.push_back(binary(i, n));
  }
  auto codes = labels;
  return EncodedSet(std::move(labels), std::move(codes));
}

std::optional<std::size_t> EncodedSet::find(const std::string& label) const {
  auto it = data_->by_label.find(label);
  if (it == data_->by_label.end()) return std::nullopt;
  return it->second;
}

std::size_t EncodedSet::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw InvalidArgument("element '" + label + "' is not in " + describe());
}

std::optional<std::size_t> EncodedSet::find_code(const std::string& code) const {
  auto it = data_->by_code.find(code);
  if (it == data_->by_code.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> EncodedSet::code_length() const {
  if (empty()) return std::size_t{0};
  const std::size_t len = data_->codes.front().size();
  for (const auto& c : data_->codes) {
    if (c.size() != len) return std::nullopt;
  }
  return len;
}

EncodedSet EncodedSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Tuple> elements;
  std::vector<std::string> codes;
  for (std::size_t i : indices) {
    elements.push_back(element(i));
    codes.push_back(code(i));
  }
  return from_tuples(std::move(elements), std::move(codes));
}

std::string EncodedSet::describe() const {
  constexpr std::size_t kShown = 6;
  std::string out = "{";
  for (std::size_t i = 0; i < size() && i < kShown; ++i) {
    if (i) out += ',';
    out += label(i);
  }
  if (size() > kShown) out += ",... (" + std::to_string(size()) + " elements)";
  return out + "}";
}

bool operator==(const EncodedSet& a, const EncodedSet& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->elements == b.data_->elements &&
         a.data_->codes == b.data_->codes;
}

EncodedSet product(const EncodedSet& a, const EncodedSet& b) {
  std::vector<EncodedSet::Tuple> elements;
  std::vector<std::string> codes;
  elements.reserve(a.size() * b.size());
  codes.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      EncodedSet::Tuple t = a.element(i);
      t.insert(t.end(), b.element(j).begin(), b.element(j).end());
      elements.push_back(std::move(t));
      codes.push_back(a.code(i) + b.code(j));
    }
  }
  return EncodedSet::from_tuples(std::move(elements), std::move(codes));
}

}  // namespace catcrypt
