#pragma once

#include <limits>
#include <utility>

#include "pointfree/errors.hpp"
#include "pointfree/seq.hpp"

namespace pointfree {

// Diagonal pairing: pair_code(n,m) = (n+m)(n+m+1)/2 + m.
// Surjective onto the naturals, and both components are dominated by the
// code, so bounded searches over codes cover all argument pairs.
inline nat pair_code(nat n, nat m) {
  unsigned __int128 d = (unsigned __int128)n + m;
  unsigned __int128 c = d * (d + 1) / 2 + m;
  if (c > std::numeric_limits<nat>::max())
    throw arithmetic_overflow("pair_code: code does not fit in 64 bits");
  return (nat)c;
}

inline std::pair<nat, nat> unpair(nat c) {
  // Largest d with d*(d+1)/2 <= c, by increment; the codes this library
  // feeds in come from sequence lengths, so the linear scan is fine.
  nat d = 0, tri = 0;
  while (tri + (d + 1) <= c) {
    ++d;
    tri += d;
  }
  nat m = c - tri;
  return {d - m, m};
}

inline nat j0(nat c) { return unpair(c).first; }
inline nat j1(nat c) { return unpair(c).second; }

}  // namespace pointfree
