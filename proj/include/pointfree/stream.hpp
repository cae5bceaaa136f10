#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "pointfree/seq.hpp"

namespace pointfree {

// Infinite sequence of naturals given by a pure index function. Purity is a
// contract: value(i) must not depend on evaluation order, otherwise prefixes
// would not be stable.
class choice_stream {
 public:
  choice_stream() : value_([](nat) { return 0; }) {}
  explicit choice_stream(std::function<nat(nat)> value) : value_(std::move(value)) {}

  nat value(nat i) const { return value_(i); }

  seq prefix(std::size_t k) const {
    std::vector<nat> e;
    e.reserve(k);
    for (std::size_t i = 0; i < k; ++i) e.push_back(value_(i));
    return seq(std::move(e));
  }

  static choice_stream zeros_after(const seq& a) {
    return choice_stream([a](nat i) { return i < a.length() ? a.at(i) : 0; });
  }

  static choice_stream periodic(const seq& p) {
    if (p.empty()) throw empty_required("choice_stream::periodic: empty period");
    return choice_stream([p](nat i) { return p.at(i % p.length()); });
  }

  static choice_stream table(const seq& prefix, nat pad) {
    return choice_stream([prefix, pad](nat i) { return i < prefix.length() ? prefix.at(i) : pad; });
  }

 private:
  std::function<nat(nat)> value_;
};

// The point alpha_a: the entries of a, then zeros.
inline choice_stream alpha_point(const seq& a) { return choice_stream::zeros_after(a); }

}  // namespace pointfree
