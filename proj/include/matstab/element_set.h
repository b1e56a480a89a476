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

#ifndef MATSTAB_ELEMENT_SET_H_
#define MATSTAB_ELEMENT_SET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace matstab {

// Raised when an element or set lies outside the ground set it is used with.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation's precondition does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An element of a ground set, identified by its position in the canonical
// (lexicographic by id) order of that ground set.
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

// A subset of a fixed universe {0, ..., universe-1}, stored as a bitset.
// Iteration visits members in canonical order.
class ElementSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    Iterator() = default;
    Iterator(const ElementSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    Element operator*() const {
      return Element{static_cast<std::uint32_t>(pos_)};
    }
    Iterator& operator++() {
      pos_ = set_->next_from(pos_ + 1);
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    const ElementSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<Element> members);

  static ElementSet full(std::size_t universe);
  // Members are the set bits of `mask`; requires universe <= 64.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(Element e) const;
  void insert(Element e);
  void erase(Element e);
  ElementSet with(Element e) const;
  ElementSet without(Element e) const;

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    return a -= b;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;
  // Lexicographic on the member words; only used for ordered containers.
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b);

  std::optional<Element> first() const;
  std::vector<Element> elements() const;
  // Bitmask of members; requires universe <= 64.
  std::uint64_t mask() const;
  std::size_t hash() const;

  Iterator begin() const { return Iterator(this, next_from(0)); }
  Iterator end() const { return Iterator(this, universe_); }

 private:
  std::size_t next_from(std::size_t pos) const;
  void check(Element e) const;
  void check_compatible(const ElementSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

// The named ground set E. Ids are sorted lexicographically so that element
// indices coincide with the canonical order.
class GroundSet {
 public:
  GroundSet() = default;
  // Throws DomainError on duplicate or empty ids.
  explicit GroundSet(std::vector<std::string> ids);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(Element e) const;
  Element at(std::string_view id) const;
  std::optional<Element> find(std::string_view id) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }
  ElementSet set_of(const std::vector<std::string>& ids) const;

  std::vector<std::string> names(const ElementSet& s) const;
  // Renders as "{a,b,c}" in canonical order.
  std::string format(const ElementSet& s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.ids_ == b.ids_;
  }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace matstab

#endif  // MATSTAB_ELEMENT_SET_H_
