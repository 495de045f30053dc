#pragma once

// Concurrent memo table: many readers, each key computed exactly once. A thread
// that requests a key it is itself still computing has hit a cycle; that is
// reported as a ConsistencyError instead of deadlocking.

#include "qvol/rat.hpp"

#include <future>
#include <map>
#include <memory>
#include <shared_mutex>
#include <thread>

namespace qvol {

template <class Key, class Value>
class MemoCache {
 public:
  template <class Fn>
  Value get_or_compute(const Key& key, Fn&& compute) {
    std::shared_ptr<Slot> slot;
    {
      // never wait while holding the lock: the owner needs it for sub-keys
      std::shared_lock lock(mu_);
      if (auto it = slots_.find(key); it != slots_.end()) slot = it->second;
    }
    if (slot) return wait(slot);
    {
      std::unique_lock lock(mu_);
      auto [it, inserted] = slots_.try_emplace(key);
      if (!inserted) {
        auto existing = it->second;
        lock.unlock();
        return wait(existing);
      }
      slot = std::make_shared<Slot>();
      slot->owner = std::this_thread::get_id();
      slot->future = slot->promise.get_future().share();
      it->second = slot;
    }
    try {
      slot->promise.set_value(compute());
    } catch (...) {
      slot->promise.set_exception(std::current_exception());
      std::unique_lock lock(mu_);
      slots_.erase(key);
      throw;
    }
    return slot->future.get();
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return slots_.size();
  }

 private:
  struct Slot {
    std::thread::id owner;
    std::promise<Value> promise;
    std::shared_future<Value> future;
  };

  static Value wait(const std::shared_ptr<Slot>& slot) {
    if (slot->owner == std::this_thread::get_id() &&
        slot->future.wait_for(std::chrono::seconds(0)) != std::future_status::ready)
      throw ConsistencyError("recursion cycle: key requested while being computed");
    return slot->future.get();
  }

  mutable std::shared_mutex mu_;
  std::map<Key, std::shared_ptr<Slot>> slots_;
};

}  // namespace qvol
