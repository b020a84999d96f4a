// Copyright 2026 The colldist Authors
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

#ifndef COLLDIST_MULTISET_HPP
#define COLLDIST_MULTISET_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

#include "colldist/errors.hpp"

namespace colldist {

// A finite multiset over an ordered value type.  Stored as value -> count,
// so equality, iteration order and the expanded element list are all
// deterministic regardless of insertion order.
template <typename T>
class Multiset {
 public:
  Multiset() = default;

  Multiset(std::initializer_list<T> items) {
    for (const T& item : items) insert(item);
  }

  template <typename Iterator>
  Multiset(Iterator first, Iterator last) {
    for (; first != last; ++first) insert(*first);
  }

  explicit Multiset(const std::vector<T>& items)
      : Multiset(items.begin(), items.end()) {}

  void insert(const T& value, long long count = 1) {
    if (count <= 0)
      throw InvalidInputError("multiset insertion count must be positive");
    counts_[value] += count;
    size_ += count;
  }

  // Total number of elements, counting multiplicity.
  long long size() const { return size_; }

  bool empty() const { return size_ == 0; }

  long long count(const T& value) const {
    auto it = counts_.find(value);
    return it == counts_.end() ? 0 : it->second;
  }

  // Number of distinct values.
  std::size_t support_size() const { return counts_.size(); }

  const std::map<T, long long>& counts() const { return counts_; }

  // The elements laid out one slot per occurrence, in value order.  Matching
  // witnesses index into this list.
  std::vector<T> expanded() const {
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (const auto& [value, count] : counts_)
      for (long long i = 0; i < count; ++i) out.push_back(value);
    return out;
  }

  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.counts_ == b.counts_;
  }
  friend bool operator!=(const Multiset& a, const Multiset& b) {
    return !(a == b);
  }
  friend bool operator<(const Multiset& a, const Multiset& b) {
    return a.counts_ < b.counts_;
  }

 private:
  std::map<T, long long> counts_;
  long long size_ = 0;
};

}  // namespace colldist

#endif  // COLLDIST_MULTISET_HPP
