#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pointfree/errors.hpp"

namespace pointfree::fin {

// Finite positive topologies, small enough that subsets of the base are
// enumerable. Atoms are indices into the base; a subset is a bitmask.
using atom = unsigned;
using amask = std::uint32_t;

constexpr unsigned max_base = 5;

inline amask abit(atom a) { return amask(1) << a; }

struct axiom {
  atom a;
  amask u;
};

inline unsigned popcount(amask m) { return (unsigned)__builtin_popcount(m); }

class topology {
 public:
  // Cover = least relation containing the axioms, closed under reflexivity,
  // transitivity and down-right, computed by joint fixpoint iteration over
  // the finite lattice (the down operator is recomputed from the singleton
  // covers of the current stage until everything stabilises).
  static topology from_axioms(unsigned n, const std::vector<axiom>& axioms,
                              const std::optional<std::vector<std::pair<atom, amask>>>& pos_pairs =
                                  std::nullopt) {
    check_base_size(n);
    topology t;
    t.n_ = n;
    t.cover_.assign(subset_count(n), 0);
    for (amask u = 0; u < t.cover_.size(); ++u) t.cover_[u] = u;
    for (const axiom& ax : axioms) {
      if (ax.a >= n || ax.u >= t.cover_.size())
        throw invalid_topology("axiom refers to an atom outside the base");
      t.cover_[ax.u] |= abit(ax.a);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (amask u = 0; u < t.cover_.size(); ++u) {
        for (amask v = 0; v < t.cover_.size(); ++v) {
          if ((u & ~t.cover_[v]) == 0) {                      // U covered by V
            amask grown = t.cover_[v] | t.cover_[u];          // transitivity
            if (grown != t.cover_[v]) {
              t.cover_[v] = grown;
              changed = true;
            }
          }
          amask common = t.cover_[u] & t.cover_[v];
          if (common) {                                       // down-right
            amask w = t.down(u, v);
            amask grown = t.cover_[w] | common;
            if (grown != t.cover_[w]) {
              t.cover_[w] = grown;
              changed = true;
            }
          }
        }
      }
    }
    if (pos_pairs) {
      t.pos_.assign(subset_count(n), 0);
      for (auto [a, u] : *pos_pairs) {
        if (a >= n || u >= t.pos_.size())
          throw invalid_topology("positivity pair refers outside the base");
        t.pos_[u] |= abit(a);
      }
      t.validate_positivity();
    } else {
      t.pos_ = greatest_positivity_table(t.cover_, n);
    }
    return t;
  }

  // Explicit tables; every law is validated exhaustively.
  static topology from_tables(unsigned n, std::vector<amask> cover, std::vector<amask> pos) {
    check_base_size(n);
    if (cover.size() != subset_count(n) || pos.size() != subset_count(n))
      throw invalid_topology("table size does not match the base");
    topology t;
    t.n_ = n;
    t.cover_ = std::move(cover);
    t.pos_ = std::move(pos);
    t.validate_cover();
    t.validate_positivity();
    return t;
  }

  unsigned base_size() const { return n_; }
  amask full() const { return amask((1u << n_) - 1); }
  amask subsets() const { return amask(1u << n_); }

  bool covers(atom a, amask u) const { return (cover_[u] >> a) & 1; }
  bool set_covers(amask w, amask u) const { return (w & ~cover_[u]) == 0; }
  bool positive(atom a, amask u) const { return (pos_[u] >> a) & 1; }
  bool set_positive(amask w, amask u) const { return (w & pos_[u]) != 0; }

  amask covered_atoms(amask u) const { return cover_[u]; }
  amask positive_atoms(amask u) const { return pos_[u]; }

  amask down_atoms(atom b, atom c) const { return cover_[abit(b)] & cover_[abit(c)]; }

  amask down(amask u, amask v) const {
    amask w = 0;
    for (atom b = 0; b < n_; ++b) {
      if (!((u >> b) & 1)) continue;
      for (atom c = 0; c < n_; ++c)
        if ((v >> c) & 1) w |= down_atoms(b, c);
    }
    return w;
  }

  const std::vector<amask>& cover_table() const { return cover_; }
  const std::vector<amask>& positivity_table() const { return pos_; }

  friend bool operator==(const topology& a, const topology& b) {
    return a.n_ == b.n_ && a.cover_ == b.cover_ && a.pos_ == b.pos_;
  }

  // Greatest positivity compatible with the cover: a is positive with U iff
  // some V with a in V, V contained in U, meets every W whose covered
  // atoms it meets. Brute force over V and W.
  static std::vector<amask> greatest_positivity_table(const std::vector<amask>& cover,
                                                      unsigned n) {
    check_base_size(n);
    std::vector<amask> pos(subset_count(n), 0);
    amask all = amask(subset_count(n));
    for (amask u = 0; u < all; ++u) {
      for (atom a = 0; a < n; ++a) {
        if (!((u >> a) & 1)) continue;
        bool found = false;
        // V ranges over subsets of U containing a.
        for (amask v = u;; v = (v - 1) & u) {
          if ((v >> a) & 1) {
            bool good = true;
            for (amask w = 0; w < all && good; ++w)
              if ((v & cover[w]) != 0 && (v & w) == 0) good = false;
            if (good) {
              found = true;
              break;
            }
          }
          if (v == 0) break;
        }
        if (found) pos[u] |= abit(a);
      }
    }
    return pos;
  }

  topology with_positivity(std::vector<amask> pos) const {
    return from_tables(n_, cover_, std::move(pos));
  }

  // Law checks, also used on externally supplied tables.
  void validate_cover() const {
    for (amask u = 0; u < subsets(); ++u)
      if ((u & ~cover_[u]) != 0) throw invalid_topology("cover violates reflexivity");
    for (amask u = 0; u < subsets(); ++u)
      for (amask v = 0; v < subsets(); ++v)
        if ((u & ~cover_[v]) == 0 && (cover_[u] & ~cover_[v]) != 0)
          throw invalid_topology("cover violates transitivity");
    for (amask u = 0; u < subsets(); ++u)
      for (amask v = 0; v < subsets(); ++v) {
        amask common = cover_[u] & cover_[v];
        if (common && (common & ~cover_[down(u, v)]) != 0)
          throw invalid_topology("cover violates down-right");
      }
  }

  void validate_positivity() const {
    for (amask u = 0; u < subsets(); ++u)
      if ((pos_[u] & ~u) != 0) throw invalid_topology("positivity violates coreflexivity");
    for (amask u = 0; u < subsets(); ++u)
      for (amask v = 0; v < subsets(); ++v)
        if ((pos_[u] & ~v) == 0 && (pos_[u] & ~pos_[v]) != 0)
          throw invalid_topology("positivity violates cotransitivity");
    for (amask u = 0; u < subsets(); ++u)
      for (amask v = 0; v < subsets(); ++v) {
        // compatibility: a covered by U and positive with V forces U
        // positive with V
        amask bad = cover_[u] & pos_[v];
        if (bad && (u & pos_[v]) == 0)
          throw invalid_topology("cover and positivity are not compatible");
      }
  }

 private:
  topology() = default;

  static void check_base_size(unsigned n) {
    if (n > max_base)
      throw base_too_large("base of size " + std::to_string(n) + " exceeds the bound " +
                           std::to_string(max_base));
  }
  static std::size_t subset_count(unsigned n) { return std::size_t(1) << n; }

  unsigned n_ = 0;
  std::vector<amask> cover_, pos_;
};

// Ideal points: inhabited, filtering, splitting the cover, entering the
// positivity. All subsets of the base are candidates.
inline std::vector<amask> ideal_points(const topology& t) {
  std::vector<amask> pts;
  for (amask cand = 1; cand < t.subsets(); ++cand) {
    bool ok = true;
    for (atom a = 0; a < t.base_size() && ok; ++a) {
      if (!((cand >> a) & 1)) continue;
      for (atom b = 0; b < t.base_size() && ok; ++b) {
        if (!((cand >> b) & 1)) continue;
        if ((cand & t.down_atoms(a, b)) == 0) ok = false;  // filtering
      }
      for (amask u = 0; u < t.subsets() && ok; ++u) {
        if (t.covers(a, u) && (cand & u) == 0) ok = false;  // splits the cover
        if ((cand & ~u) == 0 && !t.positive(a, u)) ok = false;  // enters the positivity
      }
    }
    if (ok) pts.push_back(cand);
  }
  return pts;
}

inline topology greatest_positivity(const topology& t) {
  topology g = t.with_positivity(
      topology::greatest_positivity_table(t.cover_table(), t.base_size()));
  return g;
}

}  // namespace pointfree::fin
