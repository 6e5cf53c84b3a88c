#pragma once

#include <deque>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gmine {

// FIFO queue of candidate inputs. Unbounded by default; with a capacity set,
// overflow keeps a uniformly random subset (a pushed candidate replaces a
// random victim or is dropped itself).
class WorkQueue {
 public:
  WorkQueue() = default;
  explicit WorkQueue(std::size_t capacity) : capacity_(capacity) {}

  void push(std::string s, std::mt19937_64& rng) {
    if (!capacity_ || items_.size() < *capacity_) {
      items_.push_back(std::move(s));
      return;
    }
    std::size_t r = std::uniform_int_distribution<std::size_t>(0, items_.size())(rng);
    if (r < items_.size()) items_[r] = std::move(s);
  }

  // Forced continuations jump the line; used by the per-function phases.
  void push_front(std::string s) { items_.push_front(std::move(s)); }

  std::optional<std::string> pop() {
    if (items_.empty()) return std::nullopt;
    std::string s = std::move(items_.front());
    items_.pop_front();
    return s;
  }

  // Keeps a uniformly random subset of `cap` entries, preserving order.
  void shrink_to(std::size_t cap, std::mt19937_64& rng) {
    if (items_.size() <= cap) return;
    std::vector<std::size_t> idx(items_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < cap; ++i) {
      std::size_t j = std::uniform_int_distribution<std::size_t>(i, idx.size() - 1)(rng);
      std::swap(idx[i], idx[j]);
    }
    idx.resize(cap);
    std::sort(idx.begin(), idx.end());
    std::deque<std::string> kept;
    for (std::size_t i : idx) kept.push_back(std::move(items_[i]));
    items_ = std::move(kept);
  }

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const std::deque<std::string>& items() const { return items_; }

 private:
  std::deque<std::string> items_;
  std::optional<std::size_t> capacity_;
};

}  // namespace gmine
