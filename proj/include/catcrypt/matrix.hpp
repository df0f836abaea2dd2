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
#ifndef CATCRYPT_MATRIX_HPP_
#define CATCRYPT_MATRIX_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catcrypt/encoded_set.hpp"
#include "catcrypt/error.hpp"
#include "catcrypt/semiring.hpp"

namespace catcrypt {

// A morphism A -> B over semiring S, stored densely with one row per input
// a in A and one column per output b in B. Composition is therefore the
// ordinary matrix product read left to right: compose(f, g) is "f, then g".
//
// Matrices are immutable values; copies share storage.
template <Semiring S>
class Matrix {
 public:
  using semiring = S;
  using value_type = typename S::value_type;
  using storage_type = std::vector<value_type>;
  using const_reference = typename storage_type::const_reference;

  // The zero matrix.
  Matrix(EncodedSet rows, EncodedSet cols)
      : Matrix(rows, cols,
               storage_type(rows.size() * cols.size(), S::zero())) {}

  Matrix(EncodedSet rows, EncodedSet cols, storage_type entries)
      : rows_(std::move(rows)),
        cols_(std::move(cols)),
        entries_(std::make_shared<const storage_type>(std::move(entries))) {
    if (entries_->size() != rows_.size() * cols_.size()) {
      throw DimensionMismatch(
          "matrix over " + std::string(S::name) + ": expected " +
          std::to_string(rows_.size() * cols_.size()) + " entries, got " +
          std::to_string(entries_->size()));
    }
  }

  // entry(r, c) = fn(r, c).
  template <typename Fn>
  static Matrix generate(EncodedSet rows, EncodedSet cols, Fn&& fn) {
    storage_type entries;
    entries.reserve(rows.size() * cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        entries.push_back(static_cast<value_type>(fn(r, c)));
      }
    }
    return Matrix(std::move(rows), std::move(cols), std::move(entries));
  }

  const EncodedSet& rows() const { return rows_; }
  const EncodedSet& cols() const { return cols_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return cols_.size(); }

  const_reference at(std::size_t r, std::size_t c) const {
    return (*entries_)[r * num_cols() + c];
  }
  const storage_type& entries() const { return *entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           (a.entries_ == b.entries_ || *a.entries_ == *b.entries_);
  }

 private:
  EncodedSet rows_;
  EncodedSet cols_;
  std::shared_ptr<const storage_type> entries_;
};

using BoolMatrix = Matrix<BooleanSemiring>;
using RationalMatrix = Matrix<RationalSemiring>;

// The first entry where `same` rejects a pair of corresponding entries.
struct EntryDifference {
  std::size_t row;
  std::size_t col;
};

template <Semiring S, typename Eq>
std::optional<EntryDifference> first_difference(const Matrix<S>& f,
                                                const Matrix<S>& g, Eq&& same) {
  if (!(f.rows() == g.rows()) || !(f.cols() == g.cols())) {
    throw DimensionMismatch("cannot compare " + f.rows().describe() + " -> " +
                            f.cols().describe() + " with " +
                            g.rows().describe() + " -> " + g.cols().describe());
  }
  for (std::size_t r = 0; r < f.num_rows(); ++r) {
    for (std::size_t c = 0; c < f.num_cols(); ++c) {
      if (!same(f.at(r, c), g.at(r, c))) return EntryDifference{r, c};
    }
  }
  return std::nullopt;
}

// f : A -> B then g : B -> C. Requires f.cols() == g.rows().
template <Semiring S>
Matrix<S> compose(const Matrix<S>& f, const Matrix<S>& g) {
  if (!(f.cols() == g.rows())) {
    throw DimensionMismatch("cannot compose over " + std::string(S::name) +
                            ": output set " + f.cols().describe() +
                            " differs from input set " + g.rows().describe());
  }
  const std::size_t n = f.num_rows(), m = f.num_cols(), p = g.num_cols();
  typename Matrix<S>::storage_type out(n * p, S::zero());
  const auto& a = f.entries();
  const auto& b = g.entries();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const typename S::value_type aij = a[i * m + j];
      if (S::is_zero(aij)) continue;
      for (std::size_t k = 0; k < p; ++k) {
        const auto& bjk = b[j * p + k];
        if (S::is_zero(bjk)) continue;
        out[i * p + k] = S::add(out[i * p + k], S::mul(aij, bjk));
      }
    }
  }
  return Matrix<S>(f.rows(), g.cols(), std::move(out));
}

template <Semiring S>
Matrix<S> identity(const EncodedSet& a) {
  return Matrix<S>::generate(a, a, [](std::size_t r, std::size_t c) {
    return r == c ? S::one() : S::zero();
  });
}

// (f x g)((a,a'),(b,b')) = f(a,b) * g(a',b'), pairs ordered lexicographically.
template <Semiring S>
Matrix<S> kronecker(const Matrix<S>& f, const Matrix<S>& g) {
  const std::size_t gr = g.num_rows(), gc = g.num_cols();
  return Matrix<S>::generate(
      product(f.rows(), g.rows()), product(f.cols(), g.cols()),
      [&](std::size_t r, std::size_t c) {
        return S::mul(f.at(r / gr, c / gc), g.at(r % gr, c % gc));
      });
}

template <Semiring S>
Matrix<S> transpose(const Matrix<S>& f) {
  return Matrix<S>::generate(f.cols(), f.rows(), [&](std::size_t r, std::size_t c) {
    return f.at(c, r);
  });
}

// The 0/1 matrix of a total function A -> B given on indices. Throws
// InvalidArgument when fn(a) falls outside B.
template <Semiring S>
Matrix<S> from_function(const std::function<std::size_t(std::size_t)>& fn,
                        const EncodedSet& a, const EncodedSet& b) {
  typename Matrix<S>::storage_type entries(a.size() * b.size(), S::zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t j = fn(i);
    if (j >= b.size()) {
      throw InvalidArgument("from_function: image of '" + a.label(i) +
                            "' is outside " + b.describe());
    }
    entries[i * b.size() + j] = S::one();
  }
  return Matrix<S>(a, b, std::move(entries));
}

// Label-based variant; throws InvalidArgument when fn(a) is not a label of B.
template <Semiring S>
Matrix<S> from_function(
    const std::function<std::string(const std::string&)>& fn,
    const EncodedSet& a, const EncodedSet& b) {
  return from_function<S>(
      std::function<std::size_t(std::size_t)>(
          [&](std::size_t i) -> std::size_t {
            const std::string image = fn(a.label(i));
            if (auto j = b.find(image)) return *j;
            throw InvalidArgument("from_function: image '" + image + "' of '" +
                                  a.label(i) + "' is outside " + b.describe());
          }),
      a, b);
}

enum class Stochasticity { kStochastic, kSubstochastic, kNeither };

const char* to_string(Stochasticity s);

// Classifies by row sums: every row sums to 1, every row sums to at most 1,
// or otherwise. Negative entries always classify as kNeither.
Stochasticity is_stochastic(const RationalMatrix& f);

// Entrywise p*f + (1-p)*g. Requires identical row and column sets and
// p in [0,1].
RationalMatrix convex_mix(const Rational& p, const RationalMatrix& f,
                          const RationalMatrix& g);

// 1 x |A| row vector (a morphism 1 -> A) and |A| x 1 column (A -> 1).
RationalMatrix point(const EncodedSet& a, std::vector<Rational> weights);
RationalMatrix copoint(const EncodedSet& a, std::vector<Rational> weights);

// Boolean reduct: entry is 1 iff the rational entry is nonzero.
BoolMatrix support(const RationalMatrix& f);

}  // namespace catcrypt

#endif  // CATCRYPT_MATRIX_HPP_
