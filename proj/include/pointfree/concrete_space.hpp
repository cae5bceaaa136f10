#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pointfree/errors.hpp"
#include "pointfree/finite_topology.hpp"

namespace pointfree::fin {

using pmask = std::uint64_t;  // subset of points

constexpr unsigned max_points = 32;

// Finite concrete space: points, atoms and a forcing relation whose basic
// extents behave like a base (B1: extents are closed under the pointwise
// meet through the down operator, B2: every point lies in some extent).
class space {
 public:
  static space make(unsigned npoints, unsigned natoms,
                    const std::vector<std::pair<unsigned, atom>>& forcing) {
    if (npoints > max_points)
      throw base_too_large("spaces with more than " + std::to_string(max_points) +
                           " points are not supported");
    if (natoms > max_base)
      throw base_too_large("base of size " + std::to_string(natoms) + " exceeds the bound " +
                           std::to_string(max_base));
    space x;
    x.npts_ = npoints;
    x.natoms_ = natoms;
    x.diamond_.assign(npoints, 0);
    x.ext_.assign(natoms, 0);
    for (auto [p, a] : forcing) {
      if (p >= npoints || a >= natoms)
        throw concrete_space_invalid("forcing pair outside points or base");
      x.diamond_[p] |= abit(a);
      x.ext_[a] |= pmask(1) << p;
    }
    x.validate();
    return x;
  }

  unsigned points() const { return npts_; }
  unsigned base_size() const { return natoms_; }
  amask diamond(unsigned p) const { return diamond_[p]; }
  pmask ext_atom(atom a) const { return ext_[a]; }

  pmask ext_set(amask u) const {
    pmask e = 0;
    for (atom a = 0; a < natoms_; ++a)
      if ((u >> a) & 1) e |= ext_[a];
    return e;
  }

  // rest U: points all of whose neighbourhoods lie in U.
  pmask rest(amask u) const {
    pmask r = 0;
    for (unsigned p = 0; p < npts_; ++p)
      if ((diamond_[p] & ~u) == 0) r |= pmask(1) << p;
    return r;
  }

  // Pointwise down: atoms whose extent is inside both given extents.
  amask down_atoms(atom a, atom b) const {
    amask w = 0;
    pmask cap = ext_[a] & ext_[b];
    for (atom c = 0; c < natoms_; ++c)
      if ((ext_[c] & ~cap) == 0) w |= abit(c);
    return w;
  }

  amask down(amask u, amask v) const {
    amask w = 0;
    for (atom a = 0; a < natoms_; ++a) {
      if (!((u >> a) & 1)) continue;
      for (atom b = 0; b < natoms_; ++b)
        if ((v >> b) & 1) w |= down_atoms(a, b);
    }
    return w;
  }

  // The positive topology this space represents.
  topology representable() const {
    std::size_t count = std::size_t(1) << natoms_;
    std::vector<amask> cover(count, 0), pos(count, 0);
    for (amask u = 0; u < count; ++u) {
      pmask eu = ext_set(u);
      pmask ru = rest(u);
      for (atom a = 0; a < natoms_; ++a) {
        if ((ext_[a] & ~eu) == 0) cover[u] |= abit(a);
        if ((ext_[a] & ru) != 0) pos[u] |= abit(a);
      }
    }
    return topology::from_tables(natoms_, std::move(cover), std::move(pos));
  }

 private:
  space() = default;

  void validate() const {
    for (unsigned p = 0; p < npts_; ++p)
      if (diamond_[p] == 0)
        throw concrete_space_invalid("B2 fails: point " + std::to_string(p) +
                                     " is in no basic extent");
    for (atom a = 0; a < natoms_; ++a)
      for (atom b = 0; b < natoms_; ++b) {
        pmask cap = ext_[a] & ext_[b];
        pmask viadown = 0;
        amask d = down_atoms(a, b);
        for (atom c = 0; c < natoms_; ++c)
          if ((d >> c) & 1) viadown |= ext_[c];
        if (cap != viadown)
          throw concrete_space_invalid("B1 fails on atoms " + std::to_string(a) + "," +
                                       std::to_string(b));
      }
  }

  unsigned npts_ = 0, natoms_ = 0;
  std::vector<amask> diamond_;
  std::vector<pmask> ext_;
};

// Space of ideal points: points are the ideal points themselves, forcing is
// membership.
inline space ideal_point_space(const topology& t) {
  std::vector<amask> pts = ideal_points(t);
  if (pts.size() > max_points)
    throw base_too_large("too many ideal points");
  std::vector<std::pair<unsigned, atom>> forcing;
  for (unsigned i = 0; i < pts.size(); ++i)
    for (atom a = 0; a < t.base_size(); ++a)
      if ((pts[i] >> a) & 1) forcing.emplace_back(i, a);
  return space::make((unsigned)pts.size(), t.base_size(), forcing);
}

inline topology ideal_point_topology(const topology& t) {
  return ideal_point_space(t).representable();
}

struct bispatiality_report {
  bool spatial = true;
  bool reducible = true;
  // Counterexamples, when present, are (atom, subset) pairs.
  std::optional<std::pair<atom, amask>> spatial_witness;
  std::optional<std::pair<atom, amask>> reducible_witness;
  bool bi_spatial() const { return spatial && reducible; }
};

// Spatiality: the pointwise cover implies the pointfree one; reducibility:
// the pointfree positivity implies the pointwise one. The two converse
// directions hold always and are asserted here.
inline bispatiality_report check_bispatiality(const topology& t) {
  topology ip = ideal_point_topology(t);
  bispatiality_report rep;
  for (amask u = 0; u < t.subsets(); ++u) {
    amask cov = t.covered_atoms(u), covip = ip.covered_atoms(u);
    amask pos = t.positive_atoms(u), posip = ip.positive_atoms(u);
    if ((cov & ~covip) != 0) throw error("internal: pointfree cover not below pointwise cover");
    if ((posip & ~pos) != 0)
      throw error("internal: pointwise positivity not below pointfree one");
    if (rep.spatial && covip != cov) {
      rep.spatial = false;
      amask diff = covip & ~cov;
      rep.spatial_witness = {atom(__builtin_ctz(diff)), u};
    }
    if (rep.reducible && posip != pos) {
      rep.reducible = false;
      amask diff = pos & ~posip;
      rep.reducible_witness = {atom(__builtin_ctz(diff)), u};
    }
  }
  return rep;
}

}  // namespace pointfree::fin
