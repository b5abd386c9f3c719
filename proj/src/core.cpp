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

#include "valmat/core.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace valmat {

void ThrowInvalidInput(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, what);
}
void ThrowEmptyDomain(const std::string& what) {
  throw Error(ErrorCode::kEmptyDomain, what);
}
void ThrowResourceLimit(const std::string& what) {
  throw Error(ErrorCode::kResourceLimit, what);
}
void ThrowInternal(const std::string& what) {
  throw Error(ErrorCode::kInternal, what);
}

namespace {

bool IsIntegerText(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!IsIntegerText(num) || !IsIntegerText(den) || den.front() == '-' ||
      den.front() == '+') {
    ThrowInvalidInput("malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) ThrowInvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string FormatRational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

const Rational& ExtValue::value() const {
  if (infinite_) ThrowInternal("value() on +inf");
  return value_;
}

ExtValue& ExtValue::operator+=(const ExtValue& other) {
  if (infinite_ || other.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += other.value_;
  }
  return *this;
}

ExtValue operator-(ExtValue a, const Rational& b) {
  if (a.is_finite()) a.value_ -= b;
  return a;
}

bool operator==(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  const int c = cmp(a.value_, b.value_);
  return c <=> 0;
}

std::string ExtValue::ToString() const {
  return infinite_ ? "inf" : FormatRational(value_);
}

ExtValue ExtValue::Parse(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity") {
    return Infinity();
  }
  return ExtValue(ParseRational(text));
}

GroundSet::GroundSet(std::size_t size) : size_(size) {
  if (size == 0) ThrowInvalidInput("ground set must be nonempty");
  if (size > Subset::kMaxSize) {
    ThrowInvalidInput("ground set larger than " +
                      std::to_string(Subset::kMaxSize));
  }
}

GroundSet::GroundSet(std::size_t size, std::vector<std::string> labels)
    : GroundSet(size) {
  if (!labels.empty()) {
    if (labels.size() != size) ThrowInvalidInput("label count != ground size");
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) ThrowInvalidInput("duplicate labels");
  }
  labels_ = std::move(labels);
}

std::string GroundSet::label(ElementId e) const {
  if (labels_.empty()) return std::to_string(e.index);
  return labels_.at(e.index);
}

std::optional<ElementId> GroundSet::Find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return ElementId{i};
  }
  return std::nullopt;
}

Subset::Subset(std::size_t universe) : universe_(universe) {
  if (universe > kMaxSize) {
    ThrowInvalidInput("subset universe exceeds " + std::to_string(kMaxSize));
  }
}

Subset Subset::Full(std::size_t universe) {
  Subset s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

Subset Subset::FromIndices(std::size_t universe,
                           std::span<const std::size_t> indices) {
  Subset s(universe);
  for (std::size_t i : indices) {
    if (i >= universe) {
      ThrowInvalidInput("element " + std::to_string(i) + " out of range");
    }
    s.insert(i);
  }
  return s;
}

Subset Subset::FromIndices(std::size_t universe,
                           std::initializer_list<std::size_t> indices) {
  return FromIndices(universe,
                     std::span<const std::size_t>(indices.begin(), indices.size()));
}

std::size_t Subset::count() const {
  std::size_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & ~other.words_[k]) return false;
  }
  return true;
}

Subset Subset::Complement() const { return Full(universe_) - *this; }

Subset Subset::Exchanged(std::size_t out, std::size_t in) const {
  Subset s = *this;
  s.erase(out);
  s.insert(in);
  return s;
}

Subset& Subset::operator|=(const Subset& o) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  return *this;
}
Subset& Subset::operator&=(const Subset& o) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
  return *this;
}
Subset& Subset::operator-=(const Subset& o) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
  return *this;
}

std::size_t Subset::Hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (uint64_t w : words_) {
    h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool LexLess(const Subset& a, const Subset& b) {
  return a.elements() < b.elements();
}

bool LexLess(std::span<const Subset> a, std::span<const Subset> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (LexLess(a[i], b[i])) return true;
    if (LexLess(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

int64_t IntVector::Sum() const {
  int64_t s = 0;
  for (int64_t e : entries_) s += e;
  return s;
}

std::size_t IntVectorHash::operator()(const IntVector& v) const {
  std::size_t h = v.size();
  for (int64_t e : v.entries()) {
    h ^= std::hash<int64_t>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void RequireSameSize(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    ThrowInvalidInput(std::string(what) + ": length mismatch (" +
                      std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

IntVector ComponentwiseMin(const IntVector& x, const IntVector& y) {
  RequireSameSize(x.size(), y.size(), "componentwise_min");
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], y[i]);
  return out;
}

IntVector SubsetToVector(const Subset& x) {
  IntVector out(x.universe());
  for (std::size_t i = 0; i < x.universe(); ++i) out[i] = x.contains(i) ? 1 : 0;
  return out;
}

Subset VectorToSubset(const IntVector& x) {
  Subset s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 1) {
      s.insert(i);
    } else if (x[i] != 0) {
      ThrowInvalidInput("vector is not 0/1");
    }
  }
  return s;
}

std::size_t IntersectionCardinality(const Subset& x, const Subset& y) {
  return (x & y).count();
}

void ForEachSubsetOfSize(std::size_t universe, std::size_t r,
                         const std::function<bool(const Subset&)>& fn) {
  if (r > universe) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (!fn(Subset::FromIndices(universe, idx))) return;
    // Advance to the next combination in lexicographic order.
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == universe - r + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Rational WeightOf(std::span<const Rational> weights, const Subset& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.universe(); ++i) {
    if (x.contains(i)) s += weights[i];
  }
  return s;
}

}  // namespace valmat
