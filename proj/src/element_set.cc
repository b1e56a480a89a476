// Copyright 2026 The Authors.
//
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

#include "matstab/element_set.h"

#include <algorithm>
#include <bit>
#include <sstream>

namespace matstab {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t universe) {
  return (universe + kWordBits - 1) / kWordBits;
}

}  // namespace

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

ElementSet::ElementSet(std::size_t universe,
                       std::initializer_list<Element> members)
    : ElementSet(universe) {
  for (Element e : members) insert(e);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % kWordBits != 0) {
    s.words_.back() = (std::uint64_t{1} << (universe % kWordBits)) - 1;
  }
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kWordBits) {
    throw DomainError("from_mask requires a universe of at most 64");
  }
  ElementSet s(universe);
  if (universe < kWordBits) mask &= (std::uint64_t{1} << universe) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

std::size_t ElementSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

void ElementSet::check(Element e) const {
  if (e.index >= universe_) {
    throw DomainError("element index " + std::to_string(e.index) +
                      " outside universe of size " + std::to_string(universe_));
  }
}

void ElementSet::check_compatible(const ElementSet& other) const {
  if (other.universe_ != universe_) {
    throw DomainError("element sets over different universes (" +
                      std::to_string(universe_) + " vs " +
                      std::to_string(other.universe_) + ")");
  }
}

bool ElementSet::contains(Element e) const {
  if (e.index >= universe_) return false;
  return (words_[e.index / kWordBits] >> (e.index % kWordBits)) & 1U;
}

void ElementSet::insert(Element e) {
  check(e);
  words_[e.index / kWordBits] |= std::uint64_t{1} << (e.index % kWordBits);
}

void ElementSet::erase(Element e) {
  check(e);
  words_[e.index / kWordBits] &= ~(std::uint64_t{1} << (e.index % kWordBits));
}

ElementSet ElementSet::with(Element e) const {
  ElementSet s = *this;
  s.insert(e);
  return s;
}

ElementSet ElementSet::without(Element e) const {
  ElementSet s = *this;
  s.erase(e);
  return s;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end());
}

std::optional<Element> ElementSet::first() const {
  std::size_t pos = next_from(0);
  if (pos >= universe_) return std::nullopt;
  return Element{static_cast<std::uint32_t>(pos)};
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (Element e : *this) out.push_back(e);
  return out;
}

std::uint64_t ElementSet::mask() const {
  if (universe_ > kWordBits) {
    throw DomainError("mask requires a universe of at most 64");
  }
  return words_.empty() ? 0 : words_[0];
}

std::size_t ElementSet::hash() const {
  std::size_t h = universe_;
  for (auto w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::size_t ElementSet::next_from(std::size_t pos) const {
  while (pos < universe_) {
    std::size_t word = pos / kWordBits;
    std::uint64_t bits = words_[word] >> (pos % kWordBits);
    if (bits != 0) {
      return pos + static_cast<std::size_t>(std::countr_zero(bits));
    }
    pos = (word + 1) * kWordBits;
  }
  return universe_;
}

GroundSet::GroundSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i].empty()) throw DomainError("element ids must be non-empty");
    if (i > 0 && ids_[i] == ids_[i - 1]) {
      throw DomainError("duplicate element id: " + ids_[i]);
    }
    index_.emplace(ids_[i], static_cast<std::uint32_t>(i));
  }
}

const std::string& GroundSet::id(Element e) const {
  if (e.index >= ids_.size()) {
    throw DomainError("element index " + std::to_string(e.index) +
                      " outside ground set");
  }
  return ids_[e.index];
}

Element GroundSet::at(std::string_view id) const {
  auto e = find(id);
  if (!e) throw DomainError("unknown element id: " + std::string(id));
  return *e;
}

std::optional<Element> GroundSet::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return Element{it->second};
}

ElementSet GroundSet::set_of(const std::vector<std::string>& ids) const {
  ElementSet s = empty_set();
  for (const auto& id : ids) s.insert(at(id));
  return s;
}

std::vector<std::string> GroundSet::names(const ElementSet& s) const {
  std::vector<std::string> out;
  for (Element e : s) out.push_back(id(e));
  return out;
}

std::string GroundSet::format(const ElementSet& s) const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Element e : s) {
    if (!first) out << ',';
    out << id(e);
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace matstab
