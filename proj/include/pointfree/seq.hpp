#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pointfree/errors.hpp"

namespace pointfree {

using nat = std::uint64_t;

// Finite sequence of naturals. Value type, totally ordered so it can key
// std::map / std::set; the order is length-lex and has no other meaning.
class seq {
 public:
  seq() = default;
  explicit seq(std::vector<nat> entries) : entries_(std::move(entries)) {}
  seq(std::initializer_list<nat> entries) : entries_(entries) {}

  std::size_t length() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  nat at(std::size_t i) const { return entries_.at(i); }
  const std::vector<nat>& entries() const { return entries_; }

  seq append(nat n) const {
    std::vector<nat> e = entries_;
    e.push_back(n);
    return seq(std::move(e));
  }

  friend bool operator==(const seq& a, const seq& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const seq& a, const seq& b) { return !(a == b); }
  friend bool operator<(const seq& a, const seq& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.entries_ < b.entries_;
  }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) os << ',';
      os << entries_[i];
    }
    os << ']';
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const seq& a) { return os << a.str(); }

 private:
  std::vector<nat> entries_;
};

inline const seq nil{};

inline seq concat(const seq& a, const seq& b) {
  std::vector<nat> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return seq(std::move(e));
}

inline seq initial_segment(const seq& a, std::size_t k) {
  if (k > a.length()) throw input_error("initial_segment: k exceeds length of " + a.str());
  return seq(std::vector<nat>(a.entries().begin(), a.entries().begin() + k));
}

// a <= b in the tree order: b is an initial segment of a. Longer sequences
// are smaller; every sequence is below nil.
inline bool leq_b(const seq& a, const seq& b) {
  if (b.length() > a.length()) return false;
  for (std::size_t i = 0; i < b.length(); ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

// head(a) = a without its last entry, tail(a) = the last entry.
inline std::pair<seq, nat> split_last(const seq& a) {
  if (a.empty()) throw empty_required("split_last: empty sequence");
  return {initial_segment(a, a.length() - 1), a.at(a.length() - 1)};
}

inline seq head(const seq& a) { return split_last(a).first; }
inline nat tail(const seq& a) { return split_last(a).second; }

}  // namespace pointfree
