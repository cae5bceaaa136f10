#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "pointfree/errors.hpp"
#include "pointfree/pairing.hpp"
#include "pointfree/seq.hpp"
#include "pointfree/stream.hpp"
#include "pointfree/subset.hpp"

namespace pointfree {

// Relation between finite sequences and naturals, given by its fiber
// function. The monotone / single-valued flags are claims carried along for
// the record; check_pfunction_conditions probes them, evaluation enforces
// single-valuedness dynamically where it matters.
class seq_nat_relation {
 public:
  seq_nat_relation() : fiber_([](const seq&) { return std::vector<nat>{}; }) {}
  seq_nat_relation(std::function<std::vector<nat>(const seq&)> fiber, bool monotone,
                   bool single_valued)
      : fiber_(std::move(fiber)), monotone_(monotone), single_valued_(single_valued) {}

  std::vector<nat> evaluate(const seq& a) const {
    std::vector<nat> v = fiber_(a);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  bool claims_monotone() const { return monotone_; }
  bool claims_single_valued() const { return single_valued_; }

  static seq_nat_relation first_entry() {
    return seq_nat_relation(
        [](const seq& a) {
          return a.empty() ? std::vector<nat>{} : std::vector<nat>{a.at(0)};
        },
        true, true);
  }

  static seq_nat_relation sum_first_k(nat k) {
    return seq_nat_relation(
        [k](const seq& a) -> std::vector<nat> {
          if (a.length() < k) return {};
          nat s = 0;
          for (nat i = 0; i < k; ++i) s += a.at(i);
          return {s};
        },
        true, true);
  }

  static seq_nat_relation constant(nat n) {
    return seq_nat_relation([n](const seq&) { return std::vector<nat>{n}; }, true, true);
  }

  static seq_nat_relation table(std::map<seq, std::set<nat>> rows) {
    bool single = true;
    for (const auto& [a, vals] : rows) single = single && vals.size() <= 1;
    auto shared = std::make_shared<std::map<seq, std::set<nat>>>(std::move(rows));
    return seq_nat_relation(
        [shared](const seq& a) -> std::vector<nat> {
          auto it = shared->find(a);
          if (it == shared->end()) return {};
          return std::vector<nat>(it->second.begin(), it->second.end());
        },
        false, single);
  }

 private:
  std::function<std::vector<nat>(const seq&)> fiber_;
  bool monotone_ = false;
  bool single_valued_ = false;
};

// Composition with the tree order: the new fiber at a collects the fibers of
// all initial segments of a. Single-valuedness survives only when the input
// already had stable fibers along prefixes.
inline seq_nat_relation monotonise(const seq_nat_relation& s) {
  bool single = s.claims_monotone() && s.claims_single_valued();
  return seq_nat_relation(
      [s](const seq& a) {
        std::vector<nat> out;
        for (std::size_t k = 0; k <= a.length(); ++k)
          for (nat n : s.evaluate(initial_segment(a, k))) out.push_back(n);
        return out;
      },
      true, single);
}

struct modulus_result {
  seq neighbourhood;
  nat value = 0;
};

// Scans prefixes of the stream until one has a nonempty fiber. The prefix is
// a modulus of continuity: any stream through it gets the same value.
inline modulus_result modulus(const seq_nat_relation& s, const choice_stream& alpha,
                              nat fuel = 10000) {
  for (nat k = 0; k <= fuel; ++k) {
    seq a = alpha.prefix(k);
    std::vector<nat> v = s.evaluate(a);
    if (v.size() >= 2)
      throw not_single_valued("fiber at " + a.str() + " has " + std::to_string(v.size()) +
                              " values");
    if (v.size() == 1) return {a, v[0]};
  }
  throw fuel_exhausted("no fiber hit on the first " + std::to_string(fuel) + " prefixes");
}

inline nat eval_point(const seq_nat_relation& s, const choice_stream& alpha,
                      nat fuel = 10000) {
  return modulus(s, alpha, fuel).value;
}

struct pfunction_report {
  bool single_valued = true;
  seq sv_witness;  // fiber with two values, when found
  bool monotone = true;
  seq mono_witness;      // extension missing a value of its prefix
  nat mono_value = 0;    // the missing value
  bool bar_confirmed = false;
  nat bar_depth = 0;  // worst first-hit length over the probed tree
  seq bar_miss;       // a full-depth path that never hit the domain
};

namespace detail {

inline void pfunction_flags_scan(const seq_nat_relation& s, const seq& a, nat depth,
                                 nat alphabet, pfunction_report& r) {
  std::vector<nat> fiber = s.evaluate(a);
  if (r.single_valued && fiber.size() >= 2) {
    r.single_valued = false;
    r.sv_witness = a;
  }
  if (a.length() == depth) return;
  for (nat n = 0; n < alphabet; ++n) {
    seq b = a.append(n);
    if (r.monotone) {
      std::vector<nat> ext = s.evaluate(b);
      for (nat v : fiber)
        if (!std::binary_search(ext.begin(), ext.end(), v)) {
          r.monotone = false;
          r.mono_witness = b;
          r.mono_value = v;
          break;
        }
    }
    pfunction_flags_scan(s, b, depth, alphabet, r);
  }
}

// Paths stop at the first domain hit; a clean full-depth miss is recorded.
inline void pfunction_bar_scan(const seq_nat_relation& s, const seq& a, nat depth,
                               nat alphabet, pfunction_report& r, bool& missed) {
  if (!s.evaluate(a).empty()) {
    r.bar_depth = std::max(r.bar_depth, nat(a.length()));
    return;
  }
  if (a.length() == depth) {
    if (!missed) {
      missed = true;
      r.bar_miss = a;
    }
    return;
  }
  for (nat n = 0; n < alphabet; ++n)
    pfunction_bar_scan(s, a.append(n), depth, alphabet, r, missed);
}

}  // namespace detail

// Bounded verification of the partial-function conditions: single-valuedness
// and fiber growth over all sequences of length <= depth with entries
// < depth, and bar-ness of the domain over that same finite alphabet. A
// clean full-depth miss refutes nothing about the real bar, so it is
// reported as not confirmed rather than as a failure.
inline pfunction_report check_pfunction_conditions(const seq_nat_relation& s, nat depth) {
  pfunction_report r;
  bool missed = false;
  nat alphabet = depth > 0 ? depth : 1;
  detail::pfunction_flags_scan(s, nil, depth, alphabet, r);
  detail::pfunction_bar_scan(s, nil, depth, alphabet, r, missed);
  r.bar_confirmed = !missed;
  if (missed) r.bar_depth = 0;
  return r;
}

// Membership defined by an existential over the second coordinate.
struct sigma01_presentation {
  std::function<bool(const seq&, nat)> d;
};

// Membership defined by a universal over the second coordinate.
struct pi01_presentation {
  std::function<bool(const seq&, nat)> d;
};

// The decidable V with a in V iff D(a restricted to j0(lh a), j1(lh a)).
// Both unpaired components are dominated by the code, so the restriction is
// always defined; initial_segment asserts it.
inline decidable_subset sigma_to_decidable_bar(const sigma01_presentation& p) {
  return decidable_subset([d = p.d](const seq& a) {
    nat code = a.length();
    return d(initial_segment(a, j0(code)), j1(code));
  });
}

struct pi01_refutation {
  bool refuted = false;
  nat index = 0;  // the n with not D(a,n)
};

inline pi01_refutation refute_pi01_membership(const pi01_presentation& p, const seq& a,
                                              nat bound) {
  for (nat n = 0; n < bound; ++n)
    if (!p.d(a, n)) return {true, n};
  return {false, 0};
}

struct domain_refutation {
  bool refuted = false;
  seq extension;       // the b whose padded point evaluates differently
  nat base_value = 0;  // value on the zero-padded point of a itself
  nat value = 0;       // value on the padded point of a*b
};

namespace detail {

inline bool refuter_scan(const seq_nat_relation& s, const seq& a, const seq& b, nat base,
                         nat bound, nat fuel, domain_refutation& out) {
  if (!b.empty()) {
    nat v = eval_point(s, alpha_point(concat(a, b)), fuel);
    if (v != base) {
      out = {true, b, base, v};
      return true;
    }
  }
  if (b.length() == bound) return false;
  for (nat n = 0; n < bound; ++n)
    if (refuter_scan(s, a, b.append(n), base, bound, fuel, out)) return true;
  return false;
}

}  // namespace detail

// Looks for an extension b of a whose padded point evaluates differently
// from a's own: a witness that a is outside the domain of the induced
// modulus relation. Consistency up to the bound is not membership.
inline domain_refutation pi01_domain_refuter(const seq_nat_relation& s, const seq& a,
                                             nat bound, nat fuel = 10000) {
  domain_refutation out;
  out.base_value = eval_point(s, alpha_point(a), fuel);
  detail::refuter_scan(s, a, nil, out.base_value, bound, fuel, out);
  return out;
}

struct thm318_bundle {
  std::function<bool(const seq&)> dbar;
  pi01_presentation ubar;
  seq_nat_relation s;
  nat bound = 0;  // refutation bound gating the fibers of s
};

// The three constructions that turn a universal presentation into a
// neighbourhood relation: shift D one step along the sequence, conjoin it
// with the original membership, and read a value off the finite history of
// the shifted predicate. The history rule picks the last failing prefix
// length, or 1 when every prefix passes. Membership in the conjunction stays
// universal, so the fibers of s are gated by a bounded refuter with the
// given bound; on sequences whose membership the bound decides exactly, the
// domain of s is the conjunction itself.
inline thm318_bundle thm318_constructions(const pi01_presentation& p, nat refute_bound = 64) {
  auto dbar = [d = p.d](const seq& a) {
    if (a.empty()) return true;
    auto [h, t] = split_last(a);
    return d(h, t);
  };
  pi01_presentation ubar{
      [d = p.d, dbar](const seq& a, nat n) { return d(a, n) && dbar(a); }};
  seq_nat_relation s(
      [ubar, dbar, refute_bound](const seq& a) -> std::vector<nat> {
        if (refute_pi01_membership(ubar, a, refute_bound).refuted) return {};
        bool all_pass = true;
        nat last_fail = 0;
        for (std::size_t m = 0; m < a.length(); ++m)
          if (!dbar(initial_segment(a, m))) {
            all_pass = false;
            last_fail = m;
          }
        return {all_pass ? nat(1) : last_fail};
      },
      true, true);
  return {dbar, ubar, s, refute_bound};
}

// Bounded variant of a relation: value n is attached to a when n < lh(a)
// and some initial segment of a already carries n. Evaluates like the input
// on streams, with the fiber hit postponed until the length exceeds the
// value.
inline seq_nat_relation sbar_prime(const seq_nat_relation& s2) {
  bool single = s2.claims_monotone() && s2.claims_single_valued();
  return seq_nat_relation(
      [s2](const seq& a) {
        std::vector<nat> out;
        for (std::size_t k = 0; k <= a.length(); ++k)
          for (nat n : s2.evaluate(initial_segment(a, k)))
            if (n < a.length()) out.push_back(n);
        return out;
      },
      true, single);
}

}  // namespace pointfree
