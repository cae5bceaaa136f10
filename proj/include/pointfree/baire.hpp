#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pointfree/errors.hpp"
#include "pointfree/seq.hpp"
#include "pointfree/stream.hpp"
#include "pointfree/subset.hpp"

namespace pointfree {

// Certificate tree for covers of finite sequences. Leaves assert membership,
// zeta nodes step back from an initial segment, fan nodes quantify over all
// one-step extensions through a total branch function that is only ever
// probed, never exhausted.
class derivation {
 public:
  enum class node_kind { eta, zeta, fan };

  static derivation eta(seq conclusion) {
    return derivation(std::make_shared<node>(
        node{node_kind::eta, std::move(conclusion), nullptr, {}}));
  }

  // concludes some extension of the child's conclusion
  static derivation zeta(seq conclusion, derivation child) {
    return derivation(std::make_shared<node>(
        node{node_kind::zeta, std::move(conclusion),
             std::make_shared<derivation>(std::move(child)), {}}));
  }

  // branch(n) must conclude conclusion*n
  static derivation fan(seq conclusion, std::function<derivation(nat)> branch) {
    return derivation(std::make_shared<node>(
        node{node_kind::fan, std::move(conclusion), nullptr, std::move(branch)}));
  }

  node_kind kind() const { return n_->kind; }
  const seq& conclusion() const { return n_->conclusion; }

  const derivation& child() const {
    if (n_->kind != node_kind::zeta) throw malformed_tree("not a zeta node");
    return *n_->child;
  }

  derivation branch(nat n) const {
    if (n_->kind != node_kind::fan) throw malformed_tree("not a fan node");
    return n_->branch(n);
  }

 private:
  struct node {
    node_kind kind;
    seq conclusion;
    std::shared_ptr<derivation> child;
    std::function<derivation(nat)> branch;
  };
  explicit derivation(std::shared_ptr<const node> n) : n_(std::move(n)) {}
  std::shared_ptr<const node> n_;
};

struct derivation_verdict {
  bool locally_valid = true;
  std::string violation;
  seq at;                        // conclusion of the violating node
  std::vector<seq> probed_paths; // the guides that were followed through fans
};

// Validates node-local side conditions along every path reachable by the
// probe guides. A probe picks fan branches positionally: at a fan concluding
// c it selects entry lh(c) of the guide, and the walk stops when the guide
// is too short to choose.
inline derivation_verdict check_derivation(const derivation& d, const decidable_subset& u,
                                           std::vector<seq> probes = {}) {
  if (probes.empty()) probes.push_back(nil);
  derivation_verdict verdict;
  verdict.probed_paths = probes;

  auto violate = [&](const seq& at, const std::string& what) {
    if (!verdict.locally_valid) return;
    verdict.locally_valid = false;
    verdict.violation = what;
    verdict.at = at;
  };

  for (const seq& probe : probes) {
    derivation cur = d;
    while (verdict.locally_valid) {
      const seq& c = cur.conclusion();
      if (cur.kind() == derivation::node_kind::eta) {
        if (!u.contains(c)) violate(c, "leaf conclusion is not in the subset");
        break;
      }
      if (cur.kind() == derivation::node_kind::zeta) {
        const derivation& ch = cur.child();
        if (!leq_b(c, ch.conclusion())) {
          violate(c, "zeta child does not conclude an initial segment");
          break;
        }
        cur = ch;
        continue;
      }
      // fan
      if (c.length() >= probe.length()) break;  // guide exhausted
      nat n = probe.at(c.length());
      derivation ch = cur.branch(n);
      if (ch.conclusion() != concat(c, seq{{n}})) {
        violate(c, "fan branch " + std::to_string(n) + " concludes the wrong sequence");
        break;
      }
      cur = ch;
    }
    if (!verdict.locally_valid) break;
  }
  return verdict;
}

namespace detail {

// Steps a zeta-free derivation concluding an initial segment of a down to a
// derivation concluding a itself. Fan nodes are descended along a, leaves
// stay leaves because the target subset is closed under extension.
inline derivation descend_to(const derivation& d, const seq& a) {
  derivation cur = d;
  for (;;) {
    const seq& c = cur.conclusion();
    if (!leq_b(a, c)) throw malformed_tree("conclusion left the guided path");
    if (cur.kind() == derivation::node_kind::eta) return derivation::eta(a);
    if (cur.kind() == derivation::node_kind::zeta)
      throw malformed_tree("zeta node in an eliminated derivation");
    if (c.length() == a.length()) return cur;
    nat n = a.at(c.length());
    derivation ch = cur.branch(n);
    if (ch.conclusion() != concat(c, seq{{n}}))
      throw malformed_tree("fan branch " + std::to_string(n) + " concludes the wrong sequence");
    cur = ch;
  }
}

}  // namespace detail

// Rewrites a derivation into one without zeta nodes whose conclusion covers
// the downward closure of the original subset. Fan branches are rewritten on
// demand as they are probed.
inline derivation zeta_eliminate(const derivation& d, const decidable_subset& u) {
  switch (d.kind()) {
    case derivation::node_kind::eta:
      return derivation::eta(d.conclusion());
    case derivation::node_kind::fan: {
      seq c = d.conclusion();
      return derivation::fan(c, [d, u](nat n) {
        derivation ch = d.branch(n);
        if (ch.conclusion() != concat(d.conclusion(), seq{{n}}))
          throw malformed_tree("fan branch " + std::to_string(n) +
                               " concludes the wrong sequence");
        return zeta_eliminate(ch, u);
      });
    }
    case derivation::node_kind::zeta: {
      const seq& c = d.conclusion();
      const derivation& ch = d.child();
      if (!leq_b(c, ch.conclusion()))
        throw malformed_tree("zeta child does not conclude an initial segment");
      return detail::descend_to(zeta_eliminate(ch, u), c);
    }
  }
  throw malformed_tree("unreachable node kind");
}

inline bool cover_singleton(const seq& a, const seq& b) { return leq_b(a, b); }

// a covered by all its extensions of the given relative depth
inline derivation level_derivation(const seq& a, nat n) {
  if (n == 0) return derivation::eta(a);
  return derivation::fan(a, [a, n](nat k) {
    return level_derivation(concat(a, seq{{k}}), n - 1);
  });
}

inline bool complement_member(const seq& a, const seq& b) {
  return b.length() == a.length() && b != a;
}

// Walks a derivation guided by a stream and returns a member of the subset
// lying on the stream. Each fan step consumes one unit of fuel.
inline seq split_cover(const choice_stream& alpha, const derivation& d,
                       const decidable_subset& u, nat fuel = 10000) {
  if (d.conclusion() != alpha.prefix(d.conclusion().length()))
    throw input_error("stream does not pass through the conclusion");
  derivation cur = d;
  for (;;) {
    const seq& c = cur.conclusion();
    switch (cur.kind()) {
      case derivation::node_kind::eta:
        if (!u.contains(c)) throw malformed_tree("leaf conclusion is not in the subset");
        return c;
      case derivation::node_kind::zeta: {
        const derivation& ch = cur.child();
        if (!leq_b(c, ch.conclusion()))
          throw malformed_tree("zeta child does not conclude an initial segment");
        cur = ch;
        break;
      }
      case derivation::node_kind::fan: {
        if (fuel == 0) throw fuel_exhausted("fan steps exceeded the fuel bound");
        --fuel;
        nat n = alpha.value(c.length());
        derivation ch = cur.branch(n);
        if (ch.conclusion() != concat(c, seq{{n}}))
          throw malformed_tree("fan branch " + std::to_string(n) +
                               " concludes the wrong sequence");
        cur = ch;
        break;
      }
    }
  }
}

// Exhaustive decision of the cover on the binary fragment, for subsets whose
// membership is settled by the given level: every binary extension of a to
// that length must meet the downward closure.
inline bool cantor_covers(const seq& a, const decidable_subset& u, nat level,
                          nat expand_limit = 25) {
  nat depth = level > a.length() ? level - a.length() : 0;
  if (depth > expand_limit)
    throw depth_exhausted("binary expansion of depth " + std::to_string(depth) +
                          " exceeds the limit");
  std::uint64_t total = std::uint64_t(1) << depth;
  for (std::uint64_t code = 0; code < total; ++code) {
    seq ext = a;
    for (nat i = 0; i < depth; ++i) ext = concat(ext, seq{{nat((code >> i) & 1)}});
    if (!monotone_closure_member(u, ext)) return false;
  }
  return true;
}

// Certificate for a binary-fragment cover: fans down to the deciding level,
// leaves discharged by membership or by stepping back to a member prefix.
// Branches are built on demand; probing a path that escapes the cover throws.
inline derivation cantor_derivation(const seq& a, const decidable_subset& u, nat level) {
  if (monotone_closure_member(u, a)) {
    if (u.contains(a)) return derivation::eta(a);
    for (nat k = a.length(); k-- > 0;) {
      seq b = initial_segment(a, k);
      if (u.contains(b)) return derivation::zeta(a, derivation::eta(b));
    }
    throw input_error("no member prefix despite closure membership");
  }
  if (a.length() >= level)
    throw input_error("sequence " + a.str() + " escapes the cover at the deciding level");
  return derivation::fan(a, [a, u, level](nat n) {
    return cantor_derivation(concat(a, seq{{n}}), u, level);
  });
}

struct bounded_verdict {
  bool consistent = true;
  nat failure_level = 0;  // meaningful only when inconsistent
};

// Checks that every prefix of the stream up to the depth stays inside the
// subset: a bounded confirmer and sound refuter for positivity witnessed by
// a stream.
inline bounded_verdict enters_positivity_bounded(const choice_stream& alpha,
                                                 const decidable_subset& u, nat depth) {
  for (nat k = 0; k <= depth; ++k)
    if (!u.contains(alpha.prefix(k))) return {false, k};
  return {true, 0};
}

}  // namespace pointfree
