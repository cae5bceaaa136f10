#pragma once

#include <string>
#include <vector>

#include "pointfree/concrete_space.hpp"
#include "pointfree/finite_maps.hpp"
#include "pointfree/finite_topology.hpp"

// Exhaustive verification battery over generated families of small topologies,
// relations and concrete spaces. Used by the CLI and by the acceptance run.

namespace pointfree::fin {

struct check_result {
  std::string name;
  bool pass = true;
  std::string detail;  // first counterexample when failing
};

inline std::string mask_str(amask m, unsigned n) {
  std::string s = "{";
  bool first = true;
  for (atom a = 0; a < n; ++a)
    if ((m >> a) & 1) {
      if (!first) s += ",";
      s += std::to_string(a);
      first = false;
    }
  return s + "}";
}

struct generated_topology {
  unsigned n = 0;
  std::vector<axiom> axioms;
  topology t;
};

// Every axiom set of at most max_axioms axioms over bases of size 1..max_n,
// closed with the greatest positivity.
inline std::vector<generated_topology> axiom_family(unsigned max_n, unsigned max_axioms) {
  std::vector<generated_topology> out;
  for (unsigned n = 1; n <= max_n; ++n) {
    std::vector<axiom> universe;
    for (atom a = 0; a < n; ++a)
      for (amask u = 0; u < (1u << n); ++u) universe.push_back({a, u});
    std::vector<std::vector<axiom>> sets;
    sets.push_back({});
    if (max_axioms >= 1)
      for (const axiom& ax : universe) sets.push_back({ax});
    if (max_axioms >= 2)
      for (std::size_t i = 0; i < universe.size(); ++i)
        for (std::size_t j = i + 1; j < universe.size(); ++j)
          sets.push_back({universe[i], universe[j]});
    for (auto& s : sets) out.push_back({n, s, topology::from_axioms(n, s)});
  }
  return out;
}

// All positivity tables (coreflexive and cotransitive) on a base of size n,
// independent of any cover.
inline std::vector<std::vector<amask>> positivity_law_tables(unsigned n) {
  std::size_t count = std::size_t(1) << n;
  std::vector<std::vector<amask>> out;
  std::vector<amask> cur(count, 0);
  auto cotransitive = [&]() {
    for (amask u = 0; u < count; ++u)
      for (amask v = 0; v < count; ++v)
        if ((cur[u] & ~v) == 0 && (cur[u] & ~cur[v]) != 0) return false;
    return true;
  };
  // depth-first product over the subsets, coreflexivity built in
  std::vector<amask> stack;
  auto rec = [&](auto&& self, amask u) -> void {
    if (u == count) {
      if (cotransitive()) out.push_back(cur);
      return;
    }
    for (amask p = u;; p = (p - 1) & u) {
      cur[u] = p;
      self(self, u + 1);
      if (p == 0) break;
    }
  };
  rec(rec, 0);
  return out;
}

inline bool positivity_compatible(const std::vector<amask>& cover, const std::vector<amask>& pos) {
  for (std::size_t u = 0; u < cover.size(); ++u)
    for (std::size_t v = 0; v < cover.size(); ++v)
      if ((cover[u] & pos[v]) != 0 && (amask(u) & pos[v]) == 0) return false;
  return true;
}

// Distinct two-atom topologies: every cover reachable from at most two
// axioms, paired with every compatible positivity.
inline std::vector<topology> two_atom_instances() {
  std::vector<std::vector<amask>> covers;
  for (const generated_topology& g : axiom_family(2, 2)) {
    if (g.n != 2) continue;
    bool seen = false;
    for (const auto& c : covers)
      if (c == g.t.cover_table()) seen = true;
    if (!seen) covers.push_back(g.t.cover_table());
  }
  std::vector<topology> out;
  for (const auto& cover : covers)
    for (const auto& pos : positivity_law_tables(2))
      if (positivity_compatible(cover, pos)) out.push_back(topology::from_tables(2, cover, pos));
  return out;
}

// Valid concrete spaces with every forcing relation on the given shape.
inline std::vector<space> space_family(unsigned max_points_, unsigned max_atoms) {
  std::vector<space> out;
  for (unsigned np = 1; np <= max_points_; ++np)
    for (unsigned na = 1; na <= max_atoms; ++na) {
      std::uint64_t total = std::uint64_t(1) << (np * na);
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::pair<unsigned, atom>> forcing;
        for (unsigned p = 0; p < np; ++p)
          for (atom a = 0; a < na; ++a)
            if ((code >> (p * na + a)) & 1) forcing.emplace_back(p, a);
        try {
          out.push_back(space::make(np, na, forcing));
        } catch (const concrete_space_invalid&) {
        }
      }
    }
  return out;
}

inline std::vector<check_result> run_finite_battery() {
  std::vector<check_result> results;
  auto fail = [&](check_result& r, const std::string& detail) {
    if (!r.pass) return;
    r.pass = false;
    r.detail = detail;
  };

  std::vector<generated_topology> family = axiom_family(3, 2);
  std::vector<std::vector<std::vector<amask>>> pos_tables(4);
  for (unsigned n = 1; n <= 3; ++n) pos_tables[n] = positivity_law_tables(n);

  {
    check_result r{"cover and positivity laws hold on the generated family"};
    for (const generated_topology& g : family) {
      try {
        topology::from_tables(g.n, g.t.cover_table(), g.t.positivity_table());
      } catch (const invalid_topology& e) {
        fail(r, std::string(e.what()) + " on a base of size " + std::to_string(g.n));
      }
    }
    results.push_back(r);
  }

  {
    check_result r{"cover closure is monotone in the covered subset"};
    for (const generated_topology& g : family)
      for (amask u = 0; u < g.t.subsets(); ++u)
        for (amask v = 0; v < g.t.subsets(); ++v)
          if ((u & ~v) == 0 && (g.t.covered_atoms(u) & ~g.t.covered_atoms(v)) != 0)
            fail(r, "subset " + mask_str(u, g.n) + " inside " + mask_str(v, g.n));
    results.push_back(r);
  }

  // per-topology lists of compatible positivities, reused below
  std::vector<std::vector<const std::vector<amask>*>> compat(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (const auto& pos : pos_tables[family[i].n])
      if (positivity_compatible(family[i].t.cover_table(), pos)) compat[i].push_back(&pos);

  {
    check_result r{"greatest positivity contains every compatible positivity"};
    for (std::size_t i = 0; i < family.size(); ++i) {
      const topology& t = family[i].t;
      for (const auto* pos : compat[i])
        for (amask u = 0; u < t.subsets(); ++u)
          if (((*pos)[u] & ~t.positive_atoms(u)) != 0)
            fail(r, "positivity exceeds the greatest one at " + mask_str(u, t.base_size()));
    }
    results.push_back(r);
  }

  {
    check_result r{"compatibility descends along nested covers"};
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (family[i].n != family[j].n || i == j) continue;
        const auto& small = family[i].t.cover_table();
        const auto& big = family[j].t.cover_table();
        bool nested = true;
        for (std::size_t u = 0; u < small.size() && nested; ++u)
          if ((small[u] & ~big[u]) != 0) nested = false;
        if (!nested) continue;
        for (const auto* pos : compat[j])
          if (!positivity_compatible(small, *pos))
            fail(r, "a positivity compatible with the larger cover fails on the smaller");
      }
    results.push_back(r);
  }

  {
    check_result r{"representable topologies are bi-spatial"};
    check_result r2{"every neighbourhood filter is an ideal point of the representable topology"};
    for (const space& x : space_family(3, 3)) {
      if (std::uint64_t(x.points()) * x.base_size() > 9) continue;
      topology t = x.representable();
      bispatiality_report rep = check_bispatiality(t);
      if (!rep.bi_spatial())
        fail(r, "space with " + std::to_string(x.points()) + " points over " +
                    std::to_string(x.base_size()) + " atoms");
      std::vector<amask> pts = ideal_points(t);
      for (unsigned p = 0; p < x.points(); ++p) {
        bool found = false;
        for (amask alpha : pts)
          if (alpha == x.diamond(p)) found = true;
        if (!found) fail(r2, "point " + std::to_string(p) + " of a generated space");
      }
    }
    results.push_back(r);
    results.push_back(r2);
  }

  std::vector<topology> pairs_family = two_atom_instances();

  {
    check_result r{"pointwise behaviour matches the map conditions over the point cover"};
    for (const topology& src : pairs_family)
      for (const topology& tgt : pairs_family) {
        pointwise_equivalence_report rep = check_pointwise_equivalences(src, tgt);
        if (!rep.ok) fail(r, "equivalence item " + rep.failure->item);
      }
    results.push_back(r);
  }

  {
    check_result r{"formal maps send ideal points to ideal points"};
    check_result r2{"image structure satisfies all laws except down-right"};
    check_result r3{"meet and cover transfer make the image a positive topology"};
    check_result r4{"factoring through the image is equivalent to the covering condition"};
    check_result r5{"including the image is equivalent to positivity transfer"};
    check_result r6{"a formal map equals the composite of its factorization"};
    relation id = relation::identity(2);
    for (const topology& src : pairs_family)
      for (const topology& tgt : pairs_family)
        for (const relation& s : all_relations(2, 2)) {
          formal_map_report fm = check_formal_map(s, src, tgt);
          if (fm.all() && !maps_points(s, src, tgt)) fail(r, "a formal map misses a point");
          image_structure im = image_topology(s, src, tgt);
          std::string law = check_image_laws_except_downright(im);
          if (!law.empty()) fail(r2, law);
          if (fm.fm2 && fm.fm3) {
            if (!im.downright_holds) {
              fail(r3, "down-right fails despite meet and cover transfer");
              continue;
            }
            topology imt = im.as_topology();
            if (check_formal_map(s, src, imt).all() != fm.fm1)
              fail(r4, "factorization mismatch");
            if (check_formal_map(id, imt, tgt).all() != fm.fm4)
              fail(r5, "inclusion mismatch");
            if (fm.fm1 && fm.fm4 && !equal_formal_maps(compose(s, id), s, src))
              fail(r6, "composite differs from the original map");
          }
        }
    results.push_back(r);
    results.push_back(r2);
    results.push_back(r3);
    results.push_back(r4);
    results.push_back(r5);
    results.push_back(r6);
  }

  {
    check_result r{"positivity transfer is automatic onto a greatest-positivity target"};
    for (const topology& src : pairs_family)
      for (const topology& tgt : pairs_family) {
        if (tgt.positivity_table() !=
            topology::greatest_positivity_table(tgt.cover_table(), tgt.base_size()))
          continue;
        for (const relation& s : all_relations(2, 2)) {
          formal_map_report fm = check_formal_map(s, src, tgt);
          if (fm.fm1 && fm.fm2 && fm.fm3 && !fm.fm4)
            fail(r, "fourth condition fails despite the first three");
        }
      }
    results.push_back(r);
  }

  {
    check_result r{"point-preserving relations out of bi-spatial sources are formal maps"};
    check_result r2{
        "point-preserving relations from spatial sources into greatest positivity are formal "
        "maps"};
    for (const topology& src : pairs_family) {
      bispatiality_report b = check_bispatiality(src);
      for (const topology& tgt : pairs_family) {
        bool tgt_greatest =
            tgt.positivity_table() ==
            topology::greatest_positivity_table(tgt.cover_table(), tgt.base_size());
        if (!b.bi_spatial() && !(b.spatial && tgt_greatest)) continue;
        pointwise_continuity_report rep = check_pointwise_continuity(src, tgt);
        if (b.bi_spatial() && !rep.holds) fail(r, "counterexample relation found");
        if (b.spatial && tgt_greatest && !rep.holds) fail(r2, "counterexample relation found");
      }
    }
    results.push_back(r);
    results.push_back(r2);
  }

  {
    check_result r{"the pointless topology breaks pointfree continuity via the empty relation"};
    topology np = topology::from_axioms(1, {}, std::vector<std::pair<atom, amask>>{});
    pointwise_continuity_report rep = check_pointwise_continuity(np, topology::from_axioms(1, {}));
    if (rep.holds)
      fail(r, "expected failure did not occur");
    else if (!(rep.witness == relation::empty(1, 1)) || rep.witness_fm.fm1)
      fail(r, "unexpected witness");
    results.push_back(r);
  }

  {
    check_result r{"convergent pairs induce formal maps between the represented topologies"};
    check_result r2{"every formal map between represented topologies extends to a pair"};
    check_result r3{"pair equality coincides with formal map equality"};
    std::vector<space> spaces = space_family(2, 2);
    std::vector<topology> reps;
    reps.reserve(spaces.size());
    for (const space& x : spaces) reps.push_back(x.representable());
    for (std::size_t i = 0; i < spaces.size(); ++i)
      for (std::size_t j = 0; j < spaces.size(); ++j) {
        const space &x = spaces[i], &y = spaces[j];
        std::vector<std::pair<point_relation, relation>> conv;
        for (const point_relation& pr : all_point_relations(x.points(), y.points()))
          for (const relation& s : all_relations(x.base_size(), y.base_size()))
            if (check_convergent_pair(pr, s, x, y).convergent()) conv.emplace_back(pr, s);
        for (const auto& [pr, s] : conv)
          if (!check_formal_map(s, reps[i], reps[j]).all())
            fail(r, "a convergent pair whose atom relation is not a formal map");
        for (const relation& s : all_relations(x.base_size(), y.base_size())) {
          if (!check_formal_map(s, reps[i], reps[j]).all()) continue;
          point_relation pr = induced_point_relation(s, x, y);
          if (!check_convergent_pair(pr, s, x, y).convergent())
            fail(r2, "induced point relation is not convergent");
        }
        for (const auto& [pr1, s1] : conv)
          for (const auto& [pr2, s2] : conv)
            if (equal_pairs(pr1, pr2, y) != equal_formal_maps(s1, s2, reps[i]))
              fail(r3, "equality notions disagree");
      }
    results.push_back(r);
    results.push_back(r2);
    results.push_back(r3);
  }

  return results;
}

// Checks applicable to a single externally supplied topology.
inline std::vector<check_result> verify_topology_instance(const std::string& name,
                                                          const topology& t) {
  std::vector<check_result> results;

  {
    check_result r{name + ": spatial"};
    bispatiality_report rep = check_bispatiality(t);
    if (!rep.spatial) {
      r.pass = false;
      r.detail = "atom " + std::to_string(rep.spatial_witness->first) + " under " +
                 mask_str(rep.spatial_witness->second, t.base_size()) +
                 " holds pointwise only";
    }
    results.push_back(r);
    check_result r2{name + ": reducible"};
    if (!rep.reducible) {
      r2.pass = false;
      r2.detail = "atom " + std::to_string(rep.reducible_witness->first) + " positive with " +
                  mask_str(rep.reducible_witness->second, t.base_size()) +
                  " pointfree only";
    }
    results.push_back(r2);
  }

  {
    check_result r{name + ": point-preserving relations into the one-atom base are formal maps"};
    pointwise_continuity_report rep = check_pointwise_continuity(t, topology::from_axioms(1, {}));
    if (!rep.holds) {
      r.pass = false;
      std::string fibers;
      for (atom a = 0; a < t.base_size(); ++a) {
        if (a) fibers += " ";
        fibers += std::to_string(a) + "->" + mask_str(rep.witness->fiber[a], 1);
      }
      r.detail = "relation [" + fibers + "] preserves points but fails";
      if (!rep.witness_fm.fm1)
        r.detail += " the covering condition at atom " +
                    std::to_string(*rep.witness_fm.fm1_witness);
    }
    results.push_back(r);
  }

  return results;
}

}  // namespace pointfree::fin
