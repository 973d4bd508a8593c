// Copyright 2026 The niven Authors
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

#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace niven::detail {

// Grow-only memo table. Values are computed outside the lock, so a compute
// function may recurse into the same table; concurrent first requests for
// one key may both compute, and the first insertion wins.
template <class Key, class Value>
class MemoTable {
 public:
  template <class Compute>
  Value get(const Key& key, Compute&& compute) const {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = std::invoke(std::forward<Compute>(compute), key);
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  mutable std::map<Key, Value> table_;
};

}  // namespace niven::detail
