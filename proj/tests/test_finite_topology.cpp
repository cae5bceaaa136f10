#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "pointfree/concrete_space.hpp"
#include "pointfree/finite_topology.hpp"

using namespace pointfree;
using namespace pointfree::fin;

namespace {

// Two atoms a=0, b=1 with the single axiom a -> {b}.
topology sierpinski() { return topology::from_axioms(2, {{0, 0b10}}); }

topology discrete(unsigned n) { return topology::from_axioms(n, {}); }

topology no_point() {
  return topology::from_axioms(1, {}, std::vector<std::pair<atom, amask>>{});
}

// Coreflexive candidate positivity tables for exhaustive containment checks.
void for_each_candidate_positivity(unsigned n, const std::function<void(const std::vector<amask>&)>& f) {
  std::size_t count = std::size_t(1) << n;
  std::vector<amask> table(count, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t u) {
    if (u == count) {
      f(table);
      return;
    }
    // submasks of u, including empty
    amask m = amask(u);
    for (amask v = m;; v = (v - 1) & m) {
      table[u] = v;
      rec(u + 1);
      if (v == 0) break;
    }
  };
  rec(0);
}

bool is_positivity_compatible(const topology& t, const std::vector<amask>& pos) {
  for (amask u = 0; u < t.subsets(); ++u)
    if ((pos[u] & ~u) != 0) return false;
  for (amask u = 0; u < t.subsets(); ++u)
    for (amask v = 0; v < t.subsets(); ++v)
      if ((pos[u] & ~v) == 0 && (pos[u] & ~pos[v]) != 0) return false;
  for (amask u = 0; u < t.subsets(); ++u)
    for (amask v = 0; v < t.subsets(); ++v)
      if ((t.covered_atoms(u) & pos[v]) != 0 && (u & pos[v]) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("closure of the one-axiom two-atom topology matches the hand table") {
  topology t = sierpinski();
  // Masks: bit0 = a, bit1 = b; subsets indexed 00,01,10,11.
  CHECK(t.cover_table() == std::vector<amask>{0b00, 0b01, 0b11, 0b11});
  CHECK(t.covers(0, 0b10));
  CHECK_FALSE(t.covers(1, 0b01));
}

TEST_CASE("closure with no axioms is membership") {
  topology t = discrete(3);
  for (amask u = 0; u < t.subsets(); ++u) CHECK(t.covered_atoms(u) == u);
}

TEST_CASE("derived cover satisfies the three cover laws") {
  for (const topology& t :
       {sierpinski(), discrete(3), topology::from_axioms(3, {{0, 0b110}, {2, 0b001}})}) {
    CHECK_NOTHROW(t.validate_cover());
    // weakening follows from the laws; spot-check it directly
    for (amask u = 0; u < t.subsets(); ++u)
      for (amask v = u;; v = (v + 1) | u) {
        CHECK((t.covered_atoms(u) & ~t.covered_atoms(v)) == 0);
        if (v == t.full()) break;
      }
  }
}

TEST_CASE("membership cover is below every closure") {
  for (const topology& t :
       {sierpinski(), topology::from_axioms(3, {{0, 0b110}, {2, 0b001}})}) {
    for (amask u = 0; u < t.subsets(); ++u) CHECK((u & ~t.covered_atoms(u)) == 0);
  }
}

TEST_CASE("down-right can collapse an atom onto the empty set") {
  // Axiom a -> {b,c} with nothing else. By hand: initially the singleton
  // covers are bare, so b^a = c^a = {} in the down operator; down-right on
  // a covered-by {b,c} and a covered-by {a} derives a covered-by {}, and
  // transitivity from {} then puts a below every subset.
  topology t = topology::from_axioms(3, {{0, 0b110}});
  for (amask u = 0; u < t.subsets(); ++u) CHECK(t.covered_atoms(u) == (u | 0b001));
  // such an atom can never be positive
  for (amask u = 0; u < t.subsets(); ++u) CHECK_FALSE(t.positive(0, u));
}

TEST_CASE("greatest positivity of the one-axiom topology matches the hand table") {
  topology t = sierpinski();
  CHECK(t.positivity_table() == std::vector<amask>{0b00, 0b00, 0b10, 0b11});
}

TEST_CASE("greatest positivity of a membership cover is membership") {
  topology t = discrete(3);
  for (amask u = 0; u < t.subsets(); ++u) CHECK(t.positive_atoms(u) == u);
}

TEST_CASE("greatest positivity contains every compatible positivity") {
  for (const topology& t : {sierpinski(), discrete(2),
                            topology::from_axioms(3, {{0, 0b110}, {2, 0b001}}),
                            topology::from_axioms(3, {{1, 0b000}})}) {
    const std::vector<amask>& greatest = t.positivity_table();
    unsigned compatible_count = 0;
    for_each_candidate_positivity(t.base_size(), [&](const std::vector<amask>& cand) {
      if (!is_positivity_compatible(t, cand)) return;
      ++compatible_count;
      for (amask u = 0; u < t.subsets(); ++u) CHECK((cand[u] & ~greatest[u]) == 0);
    });
    CHECK(compatible_count > 0);  // bottom is always there
  }
}

TEST_CASE("no-point example: bottom positivity is valid but not greatest") {
  topology t = no_point();
  CHECK(t.cover_table() == std::vector<amask>{0, 1});
  CHECK(t.positivity_table() == std::vector<amask>{0, 0});
  CHECK(ideal_points(t).empty());
  topology g = greatest_positivity(t);
  CHECK(g.positivity_table() == std::vector<amask>{0, 1});  // membership
}

TEST_CASE("ideal points") {
  CHECK(ideal_points(discrete(3)) == std::vector<amask>{0b001, 0b010, 0b100});
  // For the one-axiom topology, {b} and {a,b} are the points, {a} is not
  // because a is covered by {b}.
  CHECK(ideal_points(sierpinski()) == std::vector<amask>{0b10, 0b11});
}

TEST_CASE("explicit tables are validated") {
  // missing reflexivity
  CHECK_THROWS_AS(topology::from_tables(1, {0, 0}, {0, 0}), invalid_topology);
  // positivity beyond its subset
  CHECK_THROWS_AS(topology::from_tables(1, {0, 1}, {1, 1}), invalid_topology);
  // compatibility: a covered by {b} but positive with a set avoiding {b}
  auto bad_pos = std::vector<std::pair<atom, amask>>{{0, 0b01}, {0, 0b11}};
  CHECK_THROWS_AS(topology::from_axioms(2, {{0, 0b10}}, bad_pos), invalid_topology);
  // cotransitivity: positive with {a,b} but not with a superset of the
  // positive atoms
  CHECK_THROWS_AS(
      topology::from_axioms(2, {}, std::vector<std::pair<atom, amask>>{{0, 0b11}}),
      invalid_topology);
}

TEST_CASE("base size bound") {
  CHECK_THROWS_AS(discrete(6), base_too_large);
  CHECK_NOTHROW(discrete(5));
}

TEST_CASE("two-point space: representable tables and bi-spatiality") {
  // x=0 forces a; y=1 forces a and b.
  space x = space::make(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  topology t = x.representable();
  CHECK(t.cover_table() == std::vector<amask>{0b00, 0b11, 0b10, 0b11});
  CHECK(t.positivity_table() == std::vector<amask>{0b00, 0b01, 0b00, 0b11});
  CHECK(check_bispatiality(t).bi_spatial());
}

TEST_CASE("space validation") {
  // B2 fails: a point forcing nothing
  CHECK_THROWS_AS(space::make(2, 1, {{0, 0}}), concrete_space_invalid);
  // B1 fails: two atoms overlap but nothing refines the overlap
  CHECK_THROWS_AS(space::make(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}}), concrete_space_invalid);
}

TEST_CASE("representable topologies are bi-spatial (all small spaces)") {
  // Every forcing relation on 2 points x 2 atoms that validates.
  unsigned valid = 0;
  for (unsigned code = 0; code < 16; ++code) {
    std::vector<std::pair<unsigned, atom>> forcing;
    for (unsigned p = 0; p < 2; ++p)
      for (atom a = 0; a < 2; ++a)
        if ((code >> (p * 2 + a)) & 1) forcing.emplace_back(p, a);
    try {
      space x = space::make(2, 2, forcing);
      ++valid;
      CHECK(check_bispatiality(x.representable()).bi_spatial());
    } catch (const concrete_space_invalid&) {
    }
  }
  CHECK(valid > 0);
}

TEST_CASE("the no-point topology is reducible but not spatial") {
  bispatiality_report rep = check_bispatiality(no_point());
  CHECK_FALSE(rep.spatial);
  CHECK(rep.reducible);
  REQUIRE(rep.spatial_witness.has_value());
  // pointwise, the single atom is covered even by the empty set
  CHECK(rep.spatial_witness->first == 0);
  CHECK(rep.spatial_witness->second == 0);
}
