#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <vector>

namespace biseq {

// Finite multiset kept as a sorted vector. Requires a strict total order on T
// via operator<. Equality is order-insensitive, multiplicity-sensitive.
template <typename T>
class Multiset {
public:
  Multiset() = default;
  Multiset(std::initializer_list<T> xs) : items_(xs) { normalize(); }
  explicit Multiset(std::vector<T> xs) : items_(std::move(xs)) { normalize(); }

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const T& operator[](std::size_t i) const { return items_[i]; }

  void add(T x) {
    items_.insert(std::upper_bound(items_.begin(), items_.end(), x), std::move(x));
  }

  // Removes one occurrence; returns false if absent.
  bool remove_one(const T& x) {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || !(*it == x)) return false;
    items_.erase(it);
    return true;
  }

  bool contains(const T& x) const { return count(x) > 0; }

  std::size_t count(const T& x) const {
    auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), x);
    return static_cast<std::size_t>(hi - lo);
  }

  Multiset plus(const T& x) const {
    Multiset r = *this;
    r.add(x);
    return r;
  }

  Multiset minus(const T& x) const {
    Multiset r = *this;
    r.remove_one(x);
    return r;
  }

  Multiset sum(const Multiset& other) const {
    Multiset r = *this;
    for (const T& x : other.items_) r.add(x);
    return r;
  }

  // Multiset difference: removes one occurrence per element of other.
  // Returns false if other is not a submultiset.
  bool subtract(const Multiset& other, Multiset& out) const {
    out = *this;
    for (const T& x : other.items_)
      if (!out.remove_one(x)) return false;
    return true;
  }

  bool submultiset_of(const Multiset& other) const {
    Multiset tmp;
    return other.subtract(*this, tmp);
  }

  const std::vector<T>& items() const { return items_; }

  bool operator==(const Multiset& other) const { return items_ == other.items_; }

  auto operator<=>(const Multiset& other) const {
    return std::lexicographical_compare_three_way(
        items_.begin(), items_.end(), other.items_.begin(), other.items_.end());
  }

private:
  void normalize() { std::sort(items_.begin(), items_.end()); }

  std::vector<T> items_;
};

}  // namespace biseq
