#pragma once

#include <cstddef>
#include <deque>
#include <utility>

namespace semidirect::detail {

/// Memo of the last few results of a pure function, one per thread.
template <class Key, class Value, std::size_t Capacity = 16>
class RecentResults {
 public:
  template <class F>
  const Value& get(const Key& key, F&& compute) {
    for (const auto& [k, v] : items_)
      if (k == key) return v;
    Value v = compute();
    if (items_.size() == Capacity) items_.pop_front();
    items_.emplace_back(key, std::move(v));
    return items_.back().second;
  }

 private:
  std::deque<std::pair<Key, Value>> items_;
};

}  // namespace semidirect::detail
