#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>

#include "pointfree/seq.hpp"

namespace pointfree {

// Decidable subset of the finite sequences, given by a total membership
// test. The monotone flag is a claim by the constructor, not something this
// type enforces; operations that need it say so and the bounded checkers
// probe it.
class decidable_subset {
 public:
  decidable_subset() : member_([](const seq&) { return false; }) {}
  explicit decidable_subset(std::function<bool(const seq&)> member, bool claims_monotone = false)
      : member_(std::move(member)), claims_monotone_(claims_monotone) {}

  bool contains(const seq& a) const { return member_(a); }
  bool claims_monotone() const { return claims_monotone_; }

  static decidable_subset of_level(std::size_t k) {
    return decidable_subset([k](const seq& a) { return a.length() == k; });
  }

  // Bars of the form "length at least k" are monotone.
  static decidable_subset of_min_length(std::size_t k) {
    return decidable_subset([k](const seq& a) { return a.length() >= k; }, true);
  }

  static decidable_subset singleton(const seq& a) {
    return decidable_subset([a](const seq& b) { return b == a; });
  }

  static decidable_subset finite(std::set<seq> elements) {
    auto shared = std::make_shared<std::set<seq>>(std::move(elements));
    return decidable_subset([shared](const seq& a) { return shared->count(a) > 0; });
  }

  static decidable_subset complement_of(const seq& a) {
    return decidable_subset(
        [a](const seq& b) { return b.length() == a.length() && b != a; });
  }

 private:
  std::function<bool(const seq&)> member_;
  bool claims_monotone_ = false;
};

// Membership in the downward closure: some initial segment of a lies in u.
inline bool monotone_closure_member(const decidable_subset& u, const seq& a) {
  for (std::size_t k = 0; k <= a.length(); ++k)
    if (u.contains(initial_segment(a, k))) return true;
  return false;
}

inline decidable_subset downward_closure(const decidable_subset& u) {
  return decidable_subset([u](const seq& a) { return monotone_closure_member(u, a); }, true);
}

inline decidable_subset union_of(const decidable_subset& u, const decidable_subset& v) {
  return decidable_subset([u, v](const seq& a) { return u.contains(a) || v.contains(a); });
}

}  // namespace pointfree
