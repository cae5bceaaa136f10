#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pointfree/errors.hpp"
#include "pointfree/rational.hpp"

namespace pointfree {

using nat = std::uint64_t;

// Basic opens of the real line: open intervals with rational endpoints.
struct rat_interval {
  rational p, q;

  rat_interval(rational lo, rational hi) : p(std::move(lo)), q(std::move(hi)) {
    if (!(p < q))
      throw input_error("interval needs p < q, got (" + p.str() + ", " + q.str() + ")");
  }

  std::string str() const { return "(" + p.str() + ", " + q.str() + ")"; }

  friend bool operator==(const rat_interval& a, const rat_interval& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const rat_interval& a, const rat_interval& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const rat_interval& x) {
    return os << x.str();
  }
};

// x sits below y when y is at least as wide on both sides.
inline bool leq_r(const rat_interval& x, const rat_interval& y) {
  return y.p <= x.p && x.q <= y.q;
}

// Strictly inside: room to spare at both ends.
inline bool lt_r(const rat_interval& x, const rat_interval& y) {
  return y.p < x.p && x.q < y.q;
}

enum class real_mode { reals, unit_interval };

// Union of the intervals as disjoint components. Two intervals chain only
// when they genuinely overlap; touching endpoints leave the shared point
// uncovered, so (0,1),(1,2) stays in two pieces.
inline std::vector<rat_interval> merge_strict_overlap(std::vector<rat_interval> u) {
  std::sort(u.begin(), u.end(), [](const rat_interval& a, const rat_interval& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  });
  std::vector<rat_interval> out;
  for (const auto& x : u) {
    if (!out.empty() && x.p < out.back().q) {
      if (out.back().q < x.q) out.back().q = x.q;
    } else {
      out.push_back(x);
    }
  }
  return out;
}

// Whether every compact segment strictly inside t lies under the union of u.
// On the unit interval the segments are first clipped to [0,1], which adds
// slack outside [0,1] but closes the ends at 0 and 1: a target reaching past
// 0 needs an interval that strictly contains 0, and symmetrically at 1.
inline bool finite_cover_decide(real_mode mode, const rat_interval& t,
                                const std::vector<rat_interval>& u) {
  const rational zero = rat(0, 1), one = rat(1, 1);
  if (mode == real_mode::unit_interval && (t.q <= zero || t.p >= one)) return true;
  for (const auto& c : merge_strict_overlap(u)) {
    bool left, right;
    if (mode == real_mode::reals) {
      left = c.p <= t.p;
      right = c.q >= t.q;
    } else {
      left = t.p < zero ? c.p < zero : c.p <= t.p;
      right = t.q > one ? c.q > one : c.q >= t.q;
    }
    if (left && right) return true;
  }
  return false;
}

struct grid_oracle_report {
  bool covered;
  std::optional<rational> witness;  // leftmost tested point missed by every interval
  std::size_t points_tested;
};

namespace detail {

inline bool in_some_interval(const rational& x, const std::vector<rat_interval>& u) {
  for (const auto& i : u)
    if (i.p < x && x < i.q) return true;
  return false;
}

inline bool oracle_wants(real_mode mode, const rat_interval& t, const rational& x) {
  if (!(t.p < x && x < t.q)) return false;
  if (mode == real_mode::unit_interval && (x < rat(0, 1) || x > rat(1, 1))) return false;
  return true;
}

}  // namespace detail

// Reference decision procedure, independent of the sweep. Candidates are
// every endpoint in sight plus the midpoint of each gap between consecutive
// endpoints. Between two adjacent endpoints no interval membership can
// change, so the verdict is the same as testing every point of the common
// refinement grid, at a handful of points instead of up to lcm-many.
inline grid_oracle_report grid_cover_oracle(real_mode mode, const rat_interval& t,
                                            const std::vector<rat_interval>& u) {
  std::vector<rational> cuts{t.p, t.q};
  if (mode == real_mode::unit_interval) {
    cuts.push_back(rat(0, 1));
    cuts.push_back(rat(1, 1));
  }
  for (const auto& i : u) {
    cuts.push_back(i.p);
    cuts.push_back(i.q);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  grid_oracle_report r{true, std::nullopt, 0};
  auto probe = [&](const rational& x) {
    if (!detail::oracle_wants(mode, t, x)) return true;
    ++r.points_tested;
    if (detail::in_some_interval(x, u)) return true;
    r.covered = false;
    r.witness = x;
    return false;
  };
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (!probe(cuts[i])) break;
    if (i + 1 < cuts.size() && !probe(midpoint(cuts[i], cuts[i + 1]))) break;
  }
  return r;
}

// The same check by brute force: every point i/N strictly inside the target,
// with N twice the lcm of all endpoint denominators. Only usable when that
// grid is small; the candidate oracle above answers identically.
inline grid_oracle_report grid_cover_oracle_full(real_mode mode, const rat_interval& t,
                                                 const std::vector<rat_interval>& u,
                                                 std::size_t point_limit = 200000) {
  using big = rational::big_int;
  big n = 1;
  auto fold = [&n](const rational& x) { n = boost::multiprecision::lcm(n, big(x.den())); };
  fold(t.p);
  fold(t.q);
  for (const auto& i : u) {
    fold(i.p);
    fold(i.q);
  }
  n *= 2;

  auto scaled = [&n](const rational& x) { return big(x.num() * (n / x.den())); };
  big i_lo = scaled(t.p) + 1;
  big i_hi = scaled(t.q) - 1;
  if (mode == real_mode::unit_interval) {
    if (i_lo < 0) i_lo = 0;
    if (i_hi > n) i_hi = n;
  }
  grid_oracle_report r{true, std::nullopt, 0};
  if (i_hi < i_lo) return r;
  big count = i_hi - i_lo + 1;
  if (count > point_limit)
    throw enumeration_too_large("full grid oracle would test " + count.str() + " points");
  for (big i = i_lo; i <= i_hi; ++i) {
    rational x(i, n);
    ++r.points_tested;
    if (!detail::in_some_interval(x, u)) {
      r.covered = false;
      r.witness = x;
      break;
    }
  }
  return r;
}

enum class real_rule { eta, leq_step, approx_step, split, discard_left, discard_right };

// Derivation tree for a finite cover. Constructors only fix the shape; side
// conditions are the validator's business, so ill-formed trees can be built
// and then rejected.
class real_certificate {
 public:
  static real_certificate eta(rat_interval c) {
    return make(real_rule::eta, std::move(c), std::nullopt, {});
  }
  static real_certificate leq_step(rat_interval c, real_certificate wider) {
    return make(real_rule::leq_step, std::move(c), std::nullopt, {std::move(wider)});
  }
  static real_certificate approx_step(rat_interval c, std::vector<real_certificate> inside) {
    return make(real_rule::approx_step, std::move(c), std::nullopt, std::move(inside));
  }
  static real_certificate split(rat_interval c, rational cut_lo, rational cut_hi,
                                real_certificate left, real_certificate right) {
    std::vector<real_certificate> kids{std::move(left), std::move(right)};
    return make(real_rule::split, std::move(c),
                std::make_pair(std::move(cut_lo), std::move(cut_hi)), std::move(kids));
  }
  static real_certificate discard_left(rat_interval c) {
    return make(real_rule::discard_left, std::move(c), std::nullopt, {});
  }
  static real_certificate discard_right(rat_interval c) {
    return make(real_rule::discard_right, std::move(c), std::nullopt, {});
  }

  real_rule rule() const { return n_->rule; }
  const rat_interval& conclusion() const { return n_->conclusion; }
  std::size_t child_count() const { return n_->children.size(); }
  const real_certificate& child(std::size_t i) const {
    if (i >= n_->children.size()) throw malformed_tree("certificate child index out of range");
    return n_->children[i];
  }
  // Split points p' (lower) and q' (upper); only split nodes carry them.
  const rational& cut_lo() const { return cut().first; }
  const rational& cut_hi() const { return cut().second; }

  std::string str() const {
    std::string out;
    print(out, 0);
    return out;
  }

 private:
  struct node {
    real_rule rule;
    rat_interval conclusion;
    std::optional<std::pair<rational, rational>> cut;
    std::vector<real_certificate> children;
  };

  explicit real_certificate(std::shared_ptr<const node> n) : n_(std::move(n)) {}

  static real_certificate make(real_rule r, rat_interval c,
                               std::optional<std::pair<rational, rational>> cut,
                               std::vector<real_certificate> kids) {
    return real_certificate(std::make_shared<const node>(
        node{r, std::move(c), std::move(cut), std::move(kids)}));
  }

  const std::pair<rational, rational>& cut() const {
    if (!n_->cut) throw malformed_tree("only split nodes carry cut points");
    return *n_->cut;
  }

  void print(std::string& out, int depth) const {
    out.append(static_cast<std::size_t>(2 * depth), ' ');
    switch (n_->rule) {
      case real_rule::eta:
        out += "eta " + conclusion().str();
        break;
      case real_rule::leq_step:
        out += "leq " + conclusion().str();
        break;
      case real_rule::approx_step:
        out += "approx " + conclusion().str();
        break;
      case real_rule::split:
        out += "split " + conclusion().str() + " at p'=" + cut().first.str() +
               " q'=" + cut().second.str();
        break;
      case real_rule::discard_left:
        out += "discard-left " + conclusion().str();
        break;
      case real_rule::discard_right:
        out += "discard-right " + conclusion().str();
        break;
    }
    out += "\n";
    for (const auto& c : n_->children) c.print(out, depth + 1);
  }

  std::shared_ptr<const node> n_;
};

struct real_cert_verdict {
  bool valid;
  std::string violation;  // empty when valid
};

// Node-local recheck of a certificate against the subset it claims to cover:
// eta leaves must be members, leq steps must widen, approximation witnesses
// must be strictly inside, split points must satisfy p < p' < q' < q with the
// premises concluding (p,q') and (p',q), and discards are unit-interval only.
inline real_cert_verdict check_real_certificate(real_mode mode, const real_certificate& cert,
                                                const std::vector<rat_interval>& u) {
  const rat_interval& c = cert.conclusion();
  auto fail = [&c](const std::string& why) {
    return real_cert_verdict{false, why + " at " + c.str()};
  };
  switch (cert.rule()) {
    case real_rule::eta:
      if (cert.child_count() != 0) return fail("eta must be a leaf");
      if (std::find(u.begin(), u.end(), c) == u.end())
        return fail("eta conclusion is not in the subset");
      return {true, ""};
    case real_rule::leq_step:
      if (cert.child_count() != 1) return fail("leq step needs exactly one premise");
      if (!leq_r(c, cert.child(0).conclusion())) return fail("leq step does not widen");
      break;
    case real_rule::approx_step:
      if (cert.child_count() == 0) return fail("approximation step needs witnesses");
      for (std::size_t i = 0; i < cert.child_count(); ++i)
        if (!lt_r(cert.child(i).conclusion(), c))
          return fail("approximation witness is not strictly inside");
      break;
    case real_rule::split: {
      if (cert.child_count() != 2) return fail("split needs exactly two premises");
      const rational& pp = cert.cut_lo();
      const rational& qq = cert.cut_hi();
      if (!(c.p < pp && pp < qq && qq < c.q))
        return fail("split points must satisfy p < p' < q' < q");
      if (cert.child(0).conclusion() != rat_interval(c.p, qq))
        return fail("left split premise concludes the wrong interval");
      if (cert.child(1).conclusion() != rat_interval(pp, c.q))
        return fail("right split premise concludes the wrong interval");
      break;
    }
    case real_rule::discard_left:
      if (mode != real_mode::unit_interval)
        return fail("discard rules only apply on the unit interval");
      if (cert.child_count() != 0) return fail("discard must be a leaf");
      if (!(c.q < rat(0, 1))) return fail("left discard needs q < 0");
      return {true, ""};
    case real_rule::discard_right:
      if (mode != real_mode::unit_interval)
        return fail("discard rules only apply on the unit interval");
      if (cert.child_count() != 0) return fail("discard must be a leaf");
      if (!(c.p > rat(1, 1))) return fail("right discard needs 1 < p");
      return {true, ""};
  }
  for (std::size_t i = 0; i < cert.child_count(); ++i) {
    auto sub = check_real_certificate(mode, cert.child(i), u);
    if (!sub.valid) return sub;
  }
  return {true, ""};
}

namespace detail {

// Greedy chain through u: start on the best interval the predicate accepts,
// then repeatedly take the interval overlapping the current reach that
// extends it furthest. Ties prefer the wider overlap.
inline std::vector<rat_interval> greedy_chain(
    const std::vector<rat_interval>& u, const std::function<bool(const rat_interval&)>& start_ok,
    const std::function<bool(const rational&)>& done) {
  const rat_interval* best = nullptr;
  for (const auto& x : u)
    if (start_ok(x) && (!best || x.q > best->q || (x.q == best->q && x.p < best->p))) best = &x;
  if (!best) throw not_coverable("no interval reaches the left end of the target");
  std::vector<rat_interval> chain{*best};
  while (!done(chain.back().q)) {
    const rational reach = chain.back().q;
    best = nullptr;
    for (const auto& x : u)
      if (x.p < reach && x.q > reach && (!best || x.q > best->q || (x.q == best->q && x.p < best->p)))
        best = &x;
    if (!best) throw not_coverable("the cover chain stalls at " + reach.str());
    chain.push_back(*best);
  }
  return chain;
}

// Certificate for a target spanned by chain[from..]: a single link swallows
// the target through a leq step, otherwise split inside the overlap window of
// the first two links and recurse. Split points are midpoints: q' halves the
// window, p' halves what is left of it.
inline real_certificate chain_certificate(const rat_interval& t,
                                          const std::vector<rat_interval>& chain,
                                          std::size_t from) {
  const rat_interval& g0 = chain[from];
  if (from + 1 == chain.size()) {
    if (g0 == t) return real_certificate::eta(t);
    return real_certificate::leq_step(t, real_certificate::eta(g0));
  }
  const rat_interval& g1 = chain[from + 1];
  const rational lo = max(g1.p, t.p), hi = min(g0.q, t.q);
  const rational qq = midpoint(lo, hi);
  const rational pp = midpoint(lo, qq);
  rat_interval left_t(t.p, qq), right_t(pp, t.q);
  real_certificate left = real_certificate::leq_step(left_t, real_certificate::eta(g0));
  return real_certificate::split(t, pp, qq, std::move(left),
                                 chain_certificate(right_t, chain, from + 1));
}

inline rat_interval strictly_inside(const rat_interval& t) {
  rational pp = midpoint(t.p, t.q);
  return rat_interval(pp, midpoint(pp, t.q));
}

}  // namespace detail

// Build a derivation tree for a decided cover. Mode reals walks a greedy
// chain of members across the target. On the unit interval the parts hanging
// past 0 and 1 are cut off first by split nodes whose outer pieces the
// discard rules dispose of; targets touching 0 or 1 exactly go through one
// approximation step, since the discards need strict overshoot.
inline real_certificate certify(real_mode mode, const rat_interval& t,
                                const std::vector<rat_interval>& u) {
  if (!finite_cover_decide(mode, t, u))
    throw not_coverable(t.str() + " is not covered by the given intervals");
  const rational zero = rat(0, 1), one = rat(1, 1);
  if (mode == real_mode::reals) {
    auto chain = detail::greedy_chain(
        u, [&t](const rat_interval& x) { return x.p <= t.p; },
        [&t](const rational& b) { return b >= t.q; });
    return detail::chain_certificate(t, chain, 0);
  }
  if (t.q < zero) return real_certificate::discard_left(t);
  if (t.p > one) return real_certificate::discard_right(t);
  if (t.q == zero || t.p == one)
    return real_certificate::approx_step(t, {certify(mode, detail::strictly_inside(t), u)});

  auto chain = detail::greedy_chain(
      u,
      [&t, &zero](const rat_interval& x) { return t.p < zero ? x.p < zero : x.p <= t.p; },
      [&t, &one](const rational& b) { return t.q > one ? b > one : b >= t.q; });

  rat_interval core = t;
  std::optional<std::pair<rational, rational>> left_cut, right_cut;
  if (t.p < zero) {
    const rational lo = max(chain.front().p, t.p);
    const rational qq = midpoint(lo, zero);
    const rational pp = midpoint(lo, qq);
    left_cut = std::make_pair(pp, qq);
    core = rat_interval(pp, core.q);
  }
  if (t.q > one) {
    const rational hi = min(chain.back().q, core.q);
    const rational qq = midpoint(one, hi);
    const rational pp = midpoint(one, qq);
    right_cut = std::make_pair(pp, qq);
    core = rat_interval(core.p, qq);
  }

  real_certificate cert = detail::chain_certificate(core, chain, 0);
  if (right_cut) {
    rat_interval mid(core.p, t.q);
    cert = real_certificate::split(mid, right_cut->first, right_cut->second, std::move(cert),
                                   real_certificate::discard_right(rat_interval(right_cut->first, t.q)));
  }
  if (left_cut) {
    cert = real_certificate::split(t, left_cut->first, left_cut->second,
                                   real_certificate::discard_left(rat_interval(t.p, left_cut->second)),
                                   std::move(cert));
  }
  return cert;
}

// A countable family of basic opens, one interval per index.
class enumerated_cover {
 public:
  explicit enumerated_cover(std::function<rat_interval(nat)> enumerate)
      : enumerate_(std::move(enumerate)) {
    if (!enumerate_) throw empty_required("enumerated cover needs a generator");
  }

  rat_interval at(nat i) const { return enumerate_(i); }

  // (1/2, 2) first, then a family creeping up on [0,1] from the left:
  // (-1/3, 1/3), (-1/4, 2/4), (-1/5, 3/5), ...
  static enumerated_cover shrinking() {
    return enumerated_cover([](nat i) {
      using big = rational::big_int;
      if (i == 0) return rat_interval(rat(1, 2), rat(2, 1));
      big n(i);
      return rat_interval(rational(big(-1), big(n + 2)), rational(n, big(n + 2)));
    });
  }

  static enumerated_cover constant(rat_interval i) {
    return enumerated_cover([i](nat) { return i; });
  }

  // Finite prefix list; indices past the end repeat the last entry.
  static enumerated_cover from_list(std::vector<rat_interval> items) {
    if (items.empty()) throw empty_required("enumerated cover list must be nonempty");
    return enumerated_cover(
        [items = std::move(items)](nat i) { return i < items.size() ? items[i] : items.back(); });
  }

 private:
  std::function<rat_interval(nat)> enumerate_;
};

// Shortest prefix of the enumeration that already covers the target; minimal
// because each k is tried in turn. Whether the whole enumeration covers is
// only semidecidable, so the search gives up past fuel.
inline std::vector<rat_interval> heine_borel(real_mode mode, const rat_interval& t,
                                             const enumerated_cover& cover, nat fuel) {
  std::vector<rat_interval> prefix;
  for (nat k = 0; k <= fuel; ++k) {
    prefix.push_back(cover.at(k));
    if (finite_cover_decide(mode, t, prefix)) return prefix;
  }
  throw fuel_exhausted("no covering prefix among the first " + std::to_string(fuel + 1) +
                       " intervals");
}

}  // namespace pointfree
