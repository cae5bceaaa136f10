#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pointfree/baire.hpp"
#include "pointfree/errors.hpp"
#include "pointfree/seq.hpp"
#include "pointfree/stream.hpp"
#include "pointfree/subset.hpp"

namespace pointfree {

// Decidable tree of naturals in which every node has an extension. The
// membership predicate is the authority; a hint proposing an extending digit
// only speeds up validation and never changes any semantics.
class spread {
 public:
  explicit spread(std::function<bool(const seq&)> member,
                  std::function<nat(const seq&)> hint = {})
      : member_(std::move(member)), hint_(std::move(hint)) {
    if (!member_(nil)) throw invalid_spread("the empty sequence is not in the tree");
  }

  bool member(const seq& a) const { return member_(a); }
  bool has_hint() const { return bool(hint_); }

  nat hint(const seq& a) const {
    if (!hint_) throw input_error("spread carries no extension hint");
    return hint_(a);
  }

  // Bounded structural check: prefix-closure over the full tree with entries
  // below the alphabet, extendability at every member node, both down to the
  // given depth. Extensions come from the hint when present, otherwise from
  // a least-digit scan bounded by fuel.
  void validate(nat depth, nat alphabet, nat fuel = 1000) const {
    closure_scan(nil, true, depth, alphabet);
    extension_scan(nil, depth, alphabet, fuel);
  }

  static spread binary() { return kary(2); }

  static spread kary(nat k) {
    if (k == 0) throw invalid_spread("zero-ary tree has no extensions");
    return spread(
        [k](const seq& a) {
          for (std::size_t i = 0; i < a.length(); ++i)
            if (a.at(i) >= k) return false;
          return true;
        },
        [](const seq&) { return nat(0); });
  }

  static spread min_entry(nat c) {
    return spread(
        [c](const seq& a) {
          for (std::size_t i = 0; i < a.length(); ++i)
            if (a.at(i) < c) return false;
          return true;
        },
        [c](const seq&) { return c; });
  }

  // Entry parity follows position parity.
  static spread parity() {
    return spread(
        [](const seq& a) {
          for (std::size_t i = 0; i < a.length(); ++i)
            if (a.at(i) % 2 != i % 2) return false;
          return true;
        },
        [](const seq& a) { return nat(a.length() % 2); });
  }

  // Pseudorandom tree over digits 0..7: each node blocks about a third of
  // the digits but always keeps one forced digit open.
  static spread seeded(nat seed) {
    auto state = [seed](const seq& a) {
      nat h = mix(seed + 0x5bd1e995);
      for (std::size_t i = 0; i < a.length(); ++i) h = mix(h ^ mix(a.at(i) + 0x100));
      return h;
    };
    auto allowed = [state](const seq& b, nat k) {
      if (k >= 8) return false;
      nat h = state(b);
      return k == mix(h ^ 0xabcdef) % 8 || mix(h ^ (k + 1)) % 3 != 0;
    };
    return spread(
        [allowed](const seq& a) {
          for (std::size_t i = 0; i < a.length(); ++i)
            if (!allowed(initial_segment(a, i), a.at(i))) return false;
          return true;
        },
        [state](const seq& a) { return mix(state(a) ^ 0xabcdef) % 8; });
  }

  // Finite table of member nodes plus a padding digit for everything deeper.
  // A node no longer than the table is a member iff it is listed; a longer
  // one must restrict to a listed node of maximal table depth and continue
  // with the pad digit only. The listing must be prefix-closed and every
  // listed node shorter than the table depth needs a listed child.
  static spread table(const std::vector<seq>& members, nat pad = 0) {
    auto m = std::make_shared<std::set<seq>>(members.begin(), members.end());
    m->insert(nil);
    std::size_t depth = 0;
    for (const auto& a : *m) depth = std::max(depth, a.length());
    for (const auto& a : *m)
      if (a.length() > 0 && !m->count(initial_segment(a, a.length() - 1)))
        throw invalid_spread("table is not closed under initial segments at " + a.str());
    for (const auto& a : *m) {
      if (a.length() >= depth) continue;
      bool extendable = false;
      for (const auto& b : *m)
        if (b.length() == a.length() + 1 && leq_b(b, a)) { extendable = true; break; }
      if (!extendable) throw invalid_spread("table member " + a.str() + " has no extension");
    }
    return spread(
        [m, depth, pad](const seq& a) {
          if (a.length() <= depth) return m->count(a) > 0;
          if (!m->count(initial_segment(a, depth))) return false;
          for (std::size_t i = depth; i < a.length(); ++i)
            if (a.at(i) != pad) return false;
          return true;
        },
        [m, depth, pad](const seq& a) {
          if (a.length() >= depth) return pad;
          for (const auto& b : *m)
            if (b.length() == a.length() + 1 && leq_b(b, a)) return b.at(a.length());
          return pad;
        });
  }

 private:
  static nat mix(nat x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  void closure_scan(const seq& a, bool parent_member, nat depth, nat alphabet) const {
    bool m = member_(a);
    if (m && !parent_member)
      throw invalid_spread("not closed under prefixes at " + a.str());
    if (a.length() == depth) return;
    for (nat n = 0; n < alphabet; ++n) closure_scan(a.append(n), m, depth, alphabet);
  }

  void extension_scan(const seq& a, nat depth, nat alphabet, nat fuel) const {
    if (hint_) {
      nat d = hint_(a);
      if (!member_(a.append(d)))
        throw invalid_spread("hint digit " + std::to_string(d) + " does not extend " +
                             a.str());
    } else {
      bool found = false;
      for (nat l = 0; l < fuel && !found; ++l) found = member_(a.append(l));
      if (!found)
        throw invalid_spread("no extension of " + a.str() + " among the first " +
                             std::to_string(fuel) + " digits");
    }
    if (a.length() == depth) return;
    for (nat n = 0; n < alphabet; ++n) {
      seq b = a.append(n);
      if (member_(b)) extension_scan(b, depth, alphabet, fuel);
    }
  }

  std::function<bool(const seq&)> member_;
  std::function<nat(const seq&)> hint_;
};

// The retraction of the full tree onto a spread: digits are kept when the
// retracted prefix extends with them, otherwise replaced by the least digit
// that stays inside. The hint is deliberately ignored here, the least digit
// is part of the definition.
inline seq retract_seq(const spread& u, const seq& a, nat fuel = 1000) {
  seq b = nil;
  for (std::size_t i = 0; i < a.length(); ++i) {
    seq kept = b.append(a.at(i));
    if (u.member(kept)) {
      b = kept;
      continue;
    }
    bool found = false;
    for (nat l = 0; l < fuel && !found; ++l) {
      seq c = b.append(l);
      if (u.member(c)) {
        b = c;
        found = true;
      }
    }
    if (!found)
      throw fuel_exhausted("no digit below " + std::to_string(fuel) + " extends " + b.str());
  }
  return b;
}

inline choice_stream retract_stream(const spread& u, const choice_stream& alpha,
                                    nat fuel = 1000) {
  return choice_stream([u, alpha, fuel](nat i) {
    return retract_seq(u, alpha.prefix(i + 1), fuel).at(i);
  });
}

// The relativized cover on a spread asks the full tree about the complement
// union the original subset.
struct spread_cover_problem {
  seq root;
  decidable_subset cover;
};

inline spread_cover_problem relativized_cover_via_baire(const spread& u, const seq& a,
                                                        const decidable_subset& v) {
  return {a, decidable_subset([u, v](const seq& b) { return !u.member(b) || v.contains(b); })};
}

// Bounded check of the relativized positivity: the stream must stay inside
// both the spread and the subset.
inline bounded_verdict spread_positivity_bounded(const spread& u, const choice_stream& alpha,
                                                 const decidable_subset& v, nat depth) {
  auto both = decidable_subset(
      [u, v](const seq& b) { return u.member(b) && v.contains(b); });
  return enters_positivity_bounded(alpha, both, depth);
}

namespace detail {

inline nat fan_depth_scan(const decidable_subset& u, const seq& a, nat fuel_depth) {
  if (u.contains(a)) return a.length();
  if (a.length() == fuel_depth)
    throw depth_exhausted("binary path " + a.str() + " has no neighbourhood in the subset");
  nat worst = 0;
  for (nat n = 0; n < 2; ++n)
    worst = std::max(worst, fan_depth_scan(u, a.append(n), fuel_depth));
  return worst;
}

}  // namespace detail

// Least k such that every binary sequence of length k has a prefix in the
// subset: the finite search whose success certifies that the subset bars
// the binary tree uniformly.
inline nat fan_uniform_depth(const decidable_subset& u, nat fuel_depth) {
  return detail::fan_depth_scan(u, nil, fuel_depth);
}

}  // namespace pointfree
