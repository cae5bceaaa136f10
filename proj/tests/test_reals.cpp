#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <random>
#include <vector>

#include "pointfree/reals.hpp"

using namespace pointfree;

namespace {

rational rand_rat(std::mt19937_64& rng, long long max_den) {
  std::uniform_int_distribution<long long> den(1, max_den);
  long long d = den(rng);
  std::uniform_int_distribution<long long> num(-2 * d, 3 * d);
  return rat(num(rng), d);
}

rat_interval rand_interval(std::mt19937_64& rng, long long max_den) {
  for (;;) {
    rational a = rand_rat(rng, max_den);
    rational b = rand_rat(rng, max_den);
    if (a == b) continue;
    return a < b ? rat_interval(a, b) : rat_interval(b, a);
  }
}

std::vector<rat_interval> rand_cover(std::mt19937_64& rng, long long max_den,
                                     std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size(0, max_size);
  std::vector<rat_interval> u;
  for (std::size_t n = size(rng); n > 0; --n) u.push_back(rand_interval(rng, max_den));
  return u;
}

const std::vector<real_mode> both_modes{real_mode::reals, real_mode::unit_interval};

// Point of the target region that the oracle is entitled to test.
bool in_target_region(real_mode mode, const rat_interval& t, const rational& x) {
  if (!(t.p < x && x < t.q)) return false;
  if (mode == real_mode::unit_interval && (x < rat(0, 1) || x > rat(1, 1))) return false;
  return true;
}

bool member_of_some(const rational& x, const std::vector<rat_interval>& u) {
  for (const auto& i : u)
    if (i.p < x && x < i.q) return true;
  return false;
}

}  // namespace

TEST_CASE("interval order relations compare endpoint room") {
  rat_interval t(rat(0, 1), rat(1, 1));
  CHECK(leq_r(t, t));
  CHECK_FALSE(lt_r(t, t));
  CHECK(leq_r(t, rat_interval(rat(-1, 1), rat(2, 1))));
  CHECK(lt_r(t, rat_interval(rat(-1, 1), rat(2, 1))));
  CHECK(leq_r(rat_interval(rat(0, 1), rat(1, 2)), t));
  CHECK_FALSE(leq_r(t, rat_interval(rat(0, 1), rat(1, 2))));
  CHECK_FALSE(lt_r(rat_interval(rat(0, 1), rat(1, 2)), t));  // shares the left endpoint
  CHECK(rat_interval(rat(1, 2), rat(3, 4)).str() == "(1/2, 3/4)");
  CHECK_THROWS_AS(rat_interval(rat(1, 1), rat(1, 1)), input_error);
  CHECK_THROWS_AS(rat_interval(rat(2, 1), rat(1, 1)), input_error);
}

TEST_CASE("merging joins intervals only across genuine overlap") {
  auto merged = merge_strict_overlap({rat_interval(rat(0, 1), rat(1, 1)),
                                      rat_interval(rat(1, 1), rat(2, 1))});
  REQUIRE(merged.size() == 2);  // the shared endpoint 1 stays uncovered
  CHECK(merged[0] == rat_interval(rat(0, 1), rat(1, 1)));
  CHECK(merged[1] == rat_interval(rat(1, 1), rat(2, 1)));

  merged = merge_strict_overlap({rat_interval(rat(1, 2), rat(2, 1)),
                                 rat_interval(rat(-1, 1), rat(3, 5))});
  REQUIRE(merged.size() == 1);
  CHECK(merged[0] == rat_interval(rat(-1, 1), rat(2, 1)));

  // nested and duplicate intervals collapse into their hull
  merged = merge_strict_overlap({rat_interval(rat(0, 1), rat(4, 1)),
                                 rat_interval(rat(1, 1), rat(2, 1)),
                                 rat_interval(rat(0, 1), rat(4, 1))});
  REQUIRE(merged.size() == 1);
  CHECK(merged[0] == rat_interval(rat(0, 1), rat(4, 1)));

  // a third interval straddling the touching point glues the first two
  merged = merge_strict_overlap({rat_interval(rat(0, 1), rat(1, 1)),
                                 rat_interval(rat(1, 1), rat(2, 1)),
                                 rat_interval(rat(3, 4), rat(5, 4))});
  REQUIRE(merged.size() == 1);
  CHECK(merged[0] == rat_interval(rat(0, 1), rat(2, 1)));

  CHECK(merge_strict_overlap({}).empty());
}

TEST_CASE("finite covers are decided by the endpoint sweep") {
  const rat_interval unit(rat(0, 1), rat(1, 1));

  CHECK(finite_cover_decide(real_mode::reals, unit, {unit}));
  CHECK_FALSE(finite_cover_decide(real_mode::reals, rat_interval(rat(0, 1), rat(2, 1)),
                                  {rat_interval(rat(0, 1), rat(1, 1)),
                                   rat_interval(rat(1, 1), rat(2, 1))}));
  CHECK(finite_cover_decide(real_mode::reals, unit,
                            {rat_interval(rat(-1, 1), rat(3, 5)),
                             rat_interval(rat(1, 2), rat(2, 1))}));
  CHECK(finite_cover_decide(real_mode::unit_interval, rat_interval(rat(2, 1), rat(3, 1)), {}));
  CHECK(finite_cover_decide(real_mode::unit_interval, rat_interval(rat(-1, 2), rat(3, 2)),
                            {rat_interval(rat(-1, 10), rat(11, 10))}));

  // strictness at the clip points: targets ending at 0 or starting at 1 are
  // vacuous, targets crossing them are not
  CHECK(finite_cover_decide(real_mode::unit_interval, rat_interval(rat(-2, 1), rat(0, 1)), {}));
  CHECK(finite_cover_decide(real_mode::unit_interval, rat_interval(rat(1, 1), rat(2, 1)), {}));
  CHECK_FALSE(finite_cover_decide(real_mode::unit_interval,
                                  rat_interval(rat(-2, 1), rat(1, 100)), {}));
  CHECK_FALSE(finite_cover_decide(real_mode::reals, rat_interval(rat(1, 1), rat(2, 1)), {}));

  // the open unit target is covered by itself, but a target that strictly
  // contains [0,1] needs intervals that overshoot both ends
  CHECK(finite_cover_decide(real_mode::unit_interval, unit, {unit}));
  CHECK_FALSE(finite_cover_decide(real_mode::unit_interval,
                                  rat_interval(rat(-1, 10), rat(11, 10)), {unit}));
  CHECK_FALSE(finite_cover_decide(real_mode::unit_interval,
                                  rat_interval(rat(-1, 10), rat(1, 2)), {unit}));
  CHECK(finite_cover_decide(real_mode::unit_interval, rat_interval(rat(1, 10), rat(11, 10)),
                            {rat_interval(rat(0, 1), rat(21, 20))}));
}

TEST_CASE("the grid oracle pins down a dozen hand-checked covers") {
  struct row {
    real_mode mode;
    rat_interval t;
    std::vector<rat_interval> u;
    bool covered;
    std::optional<rational> witness;
  };
  const rat_interval unit(rat(0, 1), rat(1, 1));
  const std::vector<row> rows{
      {real_mode::reals, unit, {unit}, true, {}},
      {real_mode::reals,
       rat_interval(rat(0, 1), rat(2, 1)),
       {unit, rat_interval(rat(1, 1), rat(2, 1))},
       false,
       rat(1, 1)},
      {real_mode::reals,
       unit,
       {rat_interval(rat(-1, 1), rat(3, 5)), rat_interval(rat(1, 2), rat(2, 1))},
       true,
       {}},
      {real_mode::unit_interval, rat_interval(rat(2, 1), rat(3, 1)), {}, true, {}},
      {real_mode::unit_interval,
       rat_interval(rat(-1, 2), rat(3, 2)),
       {rat_interval(rat(-1, 10), rat(11, 10))},
       true,
       {}},
      {real_mode::unit_interval, rat_interval(rat(-1, 1), rat(2, 1)), {unit}, false, rat(0, 1)},
      {real_mode::unit_interval, unit, {unit}, true, {}},
      {real_mode::unit_interval,
       rat_interval(rat(-1, 10), rat(11, 10)),
       {unit},
       false,
       rat(0, 1)},
      {real_mode::reals,
       unit,
       {rat_interval(rat(0, 1), rat(1, 2)), rat_interval(rat(1, 2), rat(1, 1))},
       false,
       rat(1, 2)},
      {real_mode::reals,
       rat_interval(rat(-1, 1), rat(1, 1)),
       {rat_interval(rat(-2, 1), rat(-1, 3)), rat_interval(rat(-1, 2), rat(2, 1))},
       true,
       {}},
      {real_mode::unit_interval, rat_interval(rat(1, 1), rat(2, 1)), {}, true, {}},
      {real_mode::reals, rat_interval(rat(1, 1), rat(2, 1)), {}, false, rat(3, 2)},
  };

  for (const auto& r : rows) {
    CAPTURE(r.t.str(), r.covered);
    auto report = grid_cover_oracle(r.mode, r.t, r.u);
    CHECK(report.covered == r.covered);
    if (r.witness) {
      REQUIRE(report.witness.has_value());
      CHECK(*report.witness == *r.witness);
    } else {
      CHECK_FALSE(report.witness.has_value());
    }
  }

  // vacuous unit-interval targets have nothing to test
  CHECK(grid_cover_oracle(real_mode::unit_interval, rat_interval(rat(2, 1), rat(3, 1)), {})
            .points_tested == 0);
  CHECK(grid_cover_oracle(real_mode::reals, unit, {unit}).points_tested > 0);
}

TEST_CASE("candidate and exhaustive grids answer alike") {
  std::mt19937_64 rng(0x5ea1);
  for (int it = 0; it < 300; ++it) {
    rat_interval t = rand_interval(rng, 6);
    auto u = rand_cover(rng, 6, 4);
    for (real_mode mode : both_modes) {
      CAPTURE(it, t.str());
      auto fast = grid_cover_oracle(mode, t, u);
      auto full = grid_cover_oracle_full(mode, t, u);
      CHECK(fast.covered == full.covered);
      if (!full.covered) {
        REQUIRE(full.witness.has_value());
        CHECK(in_target_region(mode, t, *full.witness));
        CHECK_FALSE(member_of_some(*full.witness, u));
      }
    }
  }

  CHECK_THROWS_AS(grid_cover_oracle_full(real_mode::reals,
                                         rat_interval(rat(0, 1), rat(1, 1)),
                                         {rat_interval(rat(1, 7), rat(13, 11))}, 10),
                  enumeration_too_large);
}

TEST_CASE("sweep and oracle agree across randomized instances") {
  std::mt19937_64 rng(20260814);
  for (int it = 0; it < 1000; ++it) {
    rat_interval t = rand_interval(rng, 32);
    auto u = rand_cover(rng, 32, 6);
    for (real_mode mode : both_modes) {
      CAPTURE(it, t.str(), u.size());
      bool swept = finite_cover_decide(mode, t, u);
      auto report = grid_cover_oracle(mode, t, u);
      CHECK(swept == report.covered);
      if (!report.covered) {
        REQUIRE(report.witness.has_value());
        CHECK(in_target_region(mode, t, *report.witness));
        CHECK_FALSE(member_of_some(*report.witness, u));
      }
    }
  }
}

TEST_CASE("adding intervals never uncovers") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 400; ++it) {
    rat_interval t = rand_interval(rng, 16);
    auto u = rand_cover(rng, 16, 4);
    auto extended = u;
    extended.push_back(rand_interval(rng, 16));
    extended.push_back(rand_interval(rng, 16));
    for (real_mode mode : both_modes) {
      if (finite_cover_decide(mode, t, u)) CHECK(finite_cover_decide(mode, t, extended));
    }
  }
}

TEST_CASE("decided covers survive shrinking the target") {
  std::mt19937_64 rng(1789);
  int refuted = 0;
  for (int it = 0; it < 400; ++it) {
    rat_interval t = rand_interval(rng, 12);
    auto u = rand_cover(rng, 12, 4);
    const rational width = t.q - t.p;
    for (real_mode mode : both_modes) {
      CAPTURE(it, t.str());
      if (finite_cover_decide(mode, t, u)) {
        // every sampled target below or strictly inside t stays covered
        const std::vector<std::pair<int, int>> shrinks{{1, 1}, {1, 4}, {4, 1}, {5, 5}};
        for (auto [i, j] : shrinks) {
          rat_interval inner(t.p + width * rat(i, 16), t.q - width * rat(j, 16));
          CHECK(lt_r(inner, t));
          CHECK(finite_cover_decide(mode, inner, u));
        }
      } else {
        // and around a refuting point there is a strictly inner target that
        // already fails, witnessing the approximation direction
        auto report = grid_cover_oracle(mode, t, u);
        REQUIRE(report.witness.has_value());
        const rational& w = *report.witness;
        rat_interval inner(midpoint(t.p, w), midpoint(w, t.q));
        CHECK(lt_r(inner, t));
        CHECK_FALSE(finite_cover_decide(mode, inner, u));
        ++refuted;
      }
    }
  }
  CHECK(refuted > 100);  // the sample genuinely exercises both branches
}

TEST_CASE("certificates from the builder recheck cleanly") {
  const rat_interval unit(rat(0, 1), rat(1, 1));

  SECTION("a member of the cover is its own one-leaf certificate") {
    auto cert = certify(real_mode::reals, unit, {unit});
    CHECK(cert.rule() == real_rule::eta);
    CHECK(cert.conclusion() == unit);
    CHECK(cert.child_count() == 0);
    CHECK(check_real_certificate(real_mode::reals, cert, {unit}).valid);
    CHECK(cert.str() == "eta (0/1, 1/1)\n");
  }

  SECTION("a two-interval chain splits once inside the overlap") {
    const std::vector<rat_interval> u{rat_interval(rat(-1, 1), rat(3, 5)),
                                      rat_interval(rat(1, 2), rat(2, 1))};
    auto cert = certify(real_mode::reals, unit, u);
    REQUIRE(cert.rule() == real_rule::split);
    // overlap window (1/2, 3/5): q' halves it, p' halves its left part
    CHECK(cert.cut_hi() == rat(11, 20));
    CHECK(cert.cut_lo() == rat(21, 40));
    REQUIRE(cert.child_count() == 2);
    const auto& left = cert.child(0);
    const auto& right = cert.child(1);
    CHECK(left.conclusion() == rat_interval(rat(0, 1), rat(11, 20)));
    CHECK(left.rule() == real_rule::leq_step);
    CHECK(left.child(0).rule() == real_rule::eta);
    CHECK(left.child(0).conclusion() == u[0]);
    CHECK(right.conclusion() == rat_interval(rat(21, 40), rat(1, 1)));
    CHECK(right.rule() == real_rule::leq_step);
    CHECK(right.child(0).conclusion() == u[1]);
    CHECK(check_real_certificate(real_mode::reals, cert, u).valid);
  }

  SECTION("unit-interval overshoot is cut off and discarded at both ends") {
    const rat_interval t(rat(-1, 1), rat(2, 1));
    const std::vector<rat_interval> u{rat_interval(rat(-1, 10), rat(11, 10))};
    auto cert = certify(real_mode::unit_interval, t, u);

    REQUIRE(cert.rule() == real_rule::split);
    CHECK(cert.cut_lo() == rat(-3, 40));
    CHECK(cert.cut_hi() == rat(-1, 20));
    CHECK(cert.child(0).rule() == real_rule::discard_left);
    CHECK(cert.child(0).conclusion() == rat_interval(rat(-1, 1), rat(-1, 20)));

    const auto& rest = cert.child(1);
    REQUIRE(rest.rule() == real_rule::split);
    CHECK(rest.conclusion() == rat_interval(rat(-3, 40), rat(2, 1)));
    CHECK(rest.cut_lo() == rat(41, 40));
    CHECK(rest.cut_hi() == rat(21, 20));
    CHECK(rest.child(1).rule() == real_rule::discard_right);
    CHECK(rest.child(1).conclusion() == rat_interval(rat(41, 40), rat(2, 1)));

    const auto& core = rest.child(0);
    CHECK(core.rule() == real_rule::leq_step);
    CHECK(core.conclusion() == rat_interval(rat(-3, 40), rat(21, 20)));
    CHECK(core.child(0).rule() == real_rule::eta);
    CHECK(core.child(0).conclusion() == u[0]);

    CHECK(check_real_certificate(real_mode::unit_interval, cert, u).valid);
    CHECK(cert.str() == certify(real_mode::unit_interval, t, u).str());
  }

  SECTION("targets beyond the unit interval discard outright") {
    auto cert = certify(real_mode::unit_interval, rat_interval(rat(2, 1), rat(3, 1)), {});
    CHECK(cert.rule() == real_rule::discard_right);
    CHECK(check_real_certificate(real_mode::unit_interval, cert, {}).valid);

    cert = certify(real_mode::unit_interval, rat_interval(rat(-3, 1), rat(-2, 1)), {});
    CHECK(cert.rule() == real_rule::discard_left);
  }

  SECTION("targets touching 0 or 1 exactly need one approximation step") {
    auto cert = certify(real_mode::unit_interval, rat_interval(rat(-2, 1), rat(0, 1)), {});
    REQUIRE(cert.rule() == real_rule::approx_step);
    REQUIRE(cert.child_count() == 1);
    CHECK(cert.child(0).rule() == real_rule::discard_left);
    CHECK(cert.child(0).conclusion() == rat_interval(rat(-1, 1), rat(-1, 2)));
    CHECK(check_real_certificate(real_mode::unit_interval, cert, {}).valid);

    cert = certify(real_mode::unit_interval, rat_interval(rat(1, 1), rat(3, 1)), {});
    REQUIRE(cert.rule() == real_rule::approx_step);
    CHECK(cert.child(0).rule() == real_rule::discard_right);
    CHECK(cert.child(0).conclusion() == rat_interval(rat(2, 1), rat(5, 2)));
    CHECK(check_real_certificate(real_mode::unit_interval, cert, {}).valid);
  }

  SECTION("uncoverable targets are refused") {
    CHECK_THROWS_AS(certify(real_mode::reals, rat_interval(rat(0, 1), rat(2, 1)),
                            {rat_interval(rat(0, 1), rat(1, 1)),
                             rat_interval(rat(1, 1), rat(2, 1))}),
                    not_coverable);
    CHECK_THROWS_AS(certify(real_mode::reals, unit, {}), not_coverable);
  }
}

TEST_CASE("hand-built certificates fail for the right reasons") {
  const rat_interval unit(rat(0, 1), rat(1, 1));
  const std::vector<rat_interval> u{unit};

  auto verdict = check_real_certificate(real_mode::reals,
                                        real_certificate::eta(rat_interval(rat(0, 1), rat(2, 1))), u);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation.find("not in the subset") != std::string::npos);

  verdict = check_real_certificate(
      real_mode::reals,
      real_certificate::leq_step(rat_interval(rat(-1, 1), rat(1, 1)), real_certificate::eta(unit)),
      u);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation.find("does not widen") != std::string::npos);

  verdict = check_real_certificate(
      real_mode::reals,
      real_certificate::approx_step(unit, {real_certificate::eta(unit)}), u);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation.find("strictly inside") != std::string::npos);

  verdict = check_real_certificate(real_mode::reals, real_certificate::approx_step(unit, {}), u);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation.find("needs witnesses") != std::string::npos);

  // split: cut points out of order, then a child concluding the wrong piece
  verdict = check_real_certificate(
      real_mode::reals,
      real_certificate::split(unit, rat(3, 4), rat(1, 4),
                              real_certificate::eta(rat_interval(rat(0, 1), rat(1, 4))),
                              real_certificate::eta(rat_interval(rat(3, 4), rat(1, 1)))),
      u);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation.find("p < p' < q' < q") != std::string::npos);

  verdict = check_real_certificate(
      real_mode::reals,
      real_certificate::split(unit, rat(1, 4), rat(3, 4),
                              real_certificate::eta(rat_interval(rat(0, 1), rat(1, 2))),
                              real_certificate::eta(rat_interval(rat(1, 4), rat(1, 1)))),
      u);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation.find("left split premise") != std::string::npos);

  // discards: wrong mode, then failed strictness
  verdict = check_real_certificate(real_mode::reals,
                                   real_certificate::discard_left(rat_interval(rat(-2, 1), rat(-1, 1))),
                                   u);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation.find("unit interval") != std::string::npos);

  verdict = check_real_certificate(real_mode::unit_interval,
                                   real_certificate::discard_left(rat_interval(rat(-2, 1), rat(0, 1))),
                                   u);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation.find("q < 0") != std::string::npos);

  verdict = check_real_certificate(real_mode::unit_interval,
                                   real_certificate::discard_right(rat_interval(rat(1, 1), rat(2, 1))),
                                   u);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation.find("1 < p") != std::string::npos);

  // a violation deep inside an otherwise fine tree still surfaces
  verdict = check_real_certificate(
      real_mode::reals,
      real_certificate::split(
          unit, rat(1, 4), rat(3, 4),
          real_certificate::leq_step(rat_interval(rat(0, 1), rat(3, 4)), real_certificate::eta(unit)),
          real_certificate::leq_step(rat_interval(rat(1, 4), rat(1, 1)),
                                     real_certificate::eta(rat_interval(rat(0, 1), rat(2, 1))))),
      u);
  CHECK_FALSE(verdict.valid);
  CHECK(verdict.violation.find("not in the subset") != std::string::npos);

  CHECK_THROWS_AS(real_certificate::eta(unit).cut_lo(), malformed_tree);
  CHECK_THROWS_AS(real_certificate::eta(unit).child(0), malformed_tree);
}

TEST_CASE("random covers certify and validate") {
  std::mt19937_64 rng(0xc0fe);
  int built = 0;
  for (int it = 0; it < 600; ++it) {
    rat_interval t = rand_interval(rng, 16);
    auto u = rand_cover(rng, 16, 5);
    for (real_mode mode : both_modes) {
      CAPTURE(it, t.str());
      if (!finite_cover_decide(mode, t, u)) {
        CHECK_THROWS_AS(certify(mode, t, u), not_coverable);
        continue;
      }
      auto cert = certify(mode, t, u);
      CHECK(cert.conclusion() == t);
      auto verdict = check_real_certificate(mode, cert, u);
      CAPTURE(verdict.violation);
      CHECK(verdict.valid);
      ++built;
    }
  }
  CHECK(built > 150);
}

TEST_CASE("enumerated families yield minimal covering prefixes") {
  auto shrinking = enumerated_cover::shrinking();
  CHECK(shrinking.at(0) == rat_interval(rat(1, 2), rat(2, 1)));
  CHECK(shrinking.at(1) == rat_interval(rat(-1, 3), rat(1, 3)));
  CHECK(shrinking.at(3) == rat_interval(rat(-1, 5), rat(3, 5)));

  const rat_interval wide(rat(-1, 1), rat(2, 1));
  auto prefix = heine_borel(real_mode::unit_interval, wide, shrinking, 100);
  REQUIRE(prefix.size() == 4);  // (-1/5, 3/5) finally overlaps (1/2, 2)
  CHECK(prefix.back() == rat_interval(rat(-1, 5), rat(3, 5)));
  CHECK(finite_cover_decide(real_mode::unit_interval, wide, prefix));
  prefix.pop_back();
  CHECK_FALSE(finite_cover_decide(real_mode::unit_interval, wide, prefix));
  CHECK_THROWS_AS(heine_borel(real_mode::unit_interval, wide, shrinking, 2), fuel_exhausted);

  const rat_interval unit(rat(0, 1), rat(1, 1));
  auto constant = enumerated_cover::constant(rat_interval(rat(-1, 1), rat(2, 1)));
  prefix = heine_borel(real_mode::reals, unit, constant, 5);
  REQUIRE(prefix.size() == 1);
  CHECK(prefix[0] == rat_interval(rat(-1, 1), rat(2, 1)));

  // both ends of (0,1) stay shy of the enumeration, so the search exhausts
  auto shy = enumerated_cover([](nat n) {
    using big = rational::big_int;
    big d(n + 3);
    return rat_interval(rational(big(1), d), rational(big(d - 1), d));
  });
  CHECK_THROWS_AS(heine_borel(real_mode::reals, unit, shy, 25), fuel_exhausted);

  auto listed = enumerated_cover::from_list(
      {rat_interval(rat(-1, 1), rat(1, 2)), rat_interval(rat(1, 4), rat(2, 1))});
  prefix = heine_borel(real_mode::reals, unit, listed, 10);
  CHECK(prefix.size() == 2);
  CHECK(listed.at(7) == rat_interval(rat(1, 4), rat(2, 1)));  // the list repeats its last entry
  CHECK_THROWS_AS(enumerated_cover::from_list({}), empty_required);
  CHECK_THROWS_AS(heine_borel(real_mode::reals, unit,
                              enumerated_cover::constant(rat_interval(rat(5, 1), rat(6, 1))), 8),
                  fuel_exhausted);
}
