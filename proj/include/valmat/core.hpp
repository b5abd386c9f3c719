// Copyright 2026 The valmat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact arithmetic, ground sets, subsets and integer vectors shared by every
// other module.

#ifndef VALMAT_CORE_HPP_
#define VALMAT_CORE_HPP_

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace valmat {

using Rational = mpq_class;

enum class ErrorCode {
  kInvalidInput,
  kEmptyDomain,
  kResourceLimit,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void ThrowInvalidInput(const std::string& what);
[[noreturn]] void ThrowEmptyDomain(const std::string& what);
[[noreturn]] void ThrowResourceLimit(const std::string& what);
[[noreturn]] void ThrowInternal(const std::string& what);

// Parses "p/q", "p" or "-p/q". The result is canonicalized.
Rational ParseRational(std::string_view text);
// Canonical text form: "p" for integers, "p/q" otherwise.
std::string FormatRational(const Rational& value);

// A rational number or +infinity. There is no -infinity.
class ExtValue {
 public:
  ExtValue() : value_(0) {}
  ExtValue(const Rational& value) : value_(value) {}  // NOLINT
  ExtValue(long value) : value_(value) {}             // NOLINT
  ExtValue(int value) : value_(value) {}              // NOLINT

  static ExtValue Infinity() {
    ExtValue v;
    v.infinite_ = true;
    return v;
  }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }
  // Throws kInternal when infinite.
  const Rational& value() const;

  ExtValue& operator+=(const ExtValue& other);
  friend ExtValue operator+(ExtValue a, const ExtValue& b) { return a += b; }
  // Subtracting a finite amount; +inf stays +inf.
  friend ExtValue operator-(ExtValue a, const Rational& b);

  friend bool operator==(const ExtValue& a, const ExtValue& b);
  friend std::strong_ordering operator<=>(const ExtValue& a,
                                          const ExtValue& b);

  // "inf" or the canonical rational.
  std::string ToString() const;
  // Accepts "inf", "+inf", "infinity" and anything ParseRational accepts.
  static ExtValue Parse(std::string_view text);

 private:
  bool infinite_ = false;
  Rational value_;
};

struct ElementId {
  std::size_t index = 0;
  friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

class GroundSet {
 public:
  explicit GroundSet(std::size_t size);
  GroundSet(std::size_t size, std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  // The label, or the decimal index when unlabeled.
  std::string label(ElementId e) const;
  std::optional<ElementId> Find(std::string_view label) const;

 private:
  std::size_t size_;
  std::vector<std::string> labels_;
};

// Fixed-capacity bit set over a ground set of known size.
class Subset {
 public:
  static constexpr std::size_t kMaxSize = 256;

  Subset() = default;
  explicit Subset(std::size_t universe);
  static Subset Full(std::size_t universe);
  static Subset FromIndices(std::size_t universe,
                            std::span<const std::size_t> indices);
  static Subset FromIndices(std::size_t universe,
                            std::initializer_list<std::size_t> indices);

  std::size_t universe() const { return universe_; }
  bool contains(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::size_t> elements() const;
  bool IsSubsetOf(const Subset& other) const;
  Subset Complement() const;
  // X - u + v.
  Subset Exchanged(std::size_t out, std::size_t in) const;

  Subset& operator|=(const Subset& o);
  Subset& operator&=(const Subset& o);
  Subset& operator-=(const Subset& o);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  friend bool operator==(const Subset& a, const Subset& b) = default;

  std::size_t Hash() const;

 private:
  std::size_t universe_ = 0;
  std::array<uint64_t, kMaxSize / 64> words_{};
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.Hash(); }
};

// Lexicographic order on sorted element sequences: {a,b} < {a,c} < {b,c}.
bool LexLess(const Subset& a, const Subset& b);
bool LexLess(std::span<const Subset> a, std::span<const Subset> b);

class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t size, int64_t fill = 0)
      : entries_(size, fill) {}
  IntVector(std::initializer_list<int64_t> entries) : entries_(entries) {}
  explicit IntVector(std::vector<int64_t> entries)
      : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  int64_t& operator[](std::size_t i) { return entries_[i]; }
  int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int64_t>& entries() const { return entries_; }
  int64_t Sum() const;

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;

 private:
  std::vector<int64_t> entries_;
};

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const;
};

IntVector ComponentwiseMin(const IntVector& x, const IntVector& y);
IntVector SubsetToVector(const Subset& x);
// Inverse of SubsetToVector; throws kInvalidInput on a non-0/1 vector.
Subset VectorToSubset(const IntVector& x);
std::size_t IntersectionCardinality(const Subset& x, const Subset& y);

// Calls `fn` for every `r`-subset of {0..universe-1} in lexicographic order.
// Stops early when `fn` returns false.
void ForEachSubsetOfSize(std::size_t universe, std::size_t r,
                         const std::function<bool(const Subset&)>& fn);

// Sum of `weights` over the members of `x`.
Rational WeightOf(std::span<const Rational> weights, const Subset& x);

// Equal-length vectors helper.
void RequireSameSize(std::size_t a, std::size_t b, const char* what);

}  // namespace valmat

#endif  // VALMAT_CORE_HPP_
