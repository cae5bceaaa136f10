#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pointfree/concrete_space.hpp"
#include "pointfree/errors.hpp"
#include "pointfree/finite_topology.hpp"

namespace pointfree::fin {

constexpr unsigned max_relation_bits = 12;

// Relation between two finite bases, stored fiber-wise.
struct relation {
  unsigned nsrc = 0, ntgt = 0;
  std::vector<amask> fiber;  // fiber[a] = targets related to source atom a

  static relation empty(unsigned nsrc, unsigned ntgt) {
    return relation{nsrc, ntgt, std::vector<amask>(nsrc, 0)};
  }

  static relation identity(unsigned n) {
    relation s = empty(n, n);
    for (atom a = 0; a < n; ++a) s.fiber[a] = abit(a);
    return s;
  }

  bool related(atom a, atom b) const { return (fiber[a] >> b) & 1; }

  amask preimage_atom(atom b) const {  // s⁻b
    amask m = 0;
    for (atom a = 0; a < nsrc; ++a)
      if (related(a, b)) m |= abit(a);
    return m;
  }

  amask preimage_set(amask v) const {  // s⁻V
    amask m = 0;
    for (atom b = 0; b < ntgt; ++b)
      if ((v >> b) & 1) m |= preimage_atom(b);
    return m;
  }

  amask image_set(amask d) const {  // existential image
    amask m = 0;
    for (atom a = 0; a < nsrc; ++a)
      if ((d >> a) & 1) m |= fiber[a];
    return m;
  }

  amask star(amask v) const {  // s*V: sources whose whole fiber lies in V
    amask m = 0;
    for (atom a = 0; a < nsrc; ++a)
      if ((fiber[a] & ~v) == 0) m |= abit(a);
    return m;
  }

  friend relation compose(const relation& first, const relation& then) {
    relation r = empty(first.nsrc, then.ntgt);
    for (atom a = 0; a < first.nsrc; ++a) r.fiber[a] = then.image_set(first.fiber[a]);
    return r;
  }

  friend bool operator==(const relation& a, const relation& b) {
    return a.nsrc == b.nsrc && a.ntgt == b.ntgt && a.fiber == b.fiber;
  }
};

inline std::vector<relation> all_relations(unsigned nsrc, unsigned ntgt) {
  if (nsrc * ntgt > max_relation_bits)
    throw enumeration_too_large("relation space of " + std::to_string(nsrc * ntgt) +
                                " bits exceeds the enumeration bound");
  std::vector<relation> out;
  std::uint64_t total = std::uint64_t(1) << (nsrc * ntgt);
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    relation s = relation::empty(nsrc, ntgt);
    for (atom a = 0; a < nsrc; ++a)
      s.fiber[a] = amask((code >> (a * ntgt)) & ((1u << ntgt) - 1));
    out.push_back(std::move(s));
  }
  return out;
}

struct formal_map_report {
  bool fm1 = true, fm2 = true, fm3 = true, fm4 = true;
  std::optional<atom> fm1_witness;                      // source atom not covered by s⁻T
  std::optional<std::tuple<atom, atom, atom>> fm2_witness;  // (b, c, offending source atom)
  std::optional<std::tuple<atom, amask, atom>> fm3_witness;  // (b, V, offending source atom)
  std::optional<std::pair<atom, amask>> fm4_witness;    // (b, V)

  bool all() const { return fm1 && fm2 && fm3 && fm4; }
};

// The four formal-map conditions, checked exhaustively with first-found
// counterexamples.
inline formal_map_report check_formal_map(const relation& s, const topology& src,
                                          const topology& tgt) {
  if (s.nsrc != src.base_size() || s.ntgt != tgt.base_size())
    throw input_error("relation does not match the bases");
  formal_map_report rep;

  amask pre_all = s.preimage_set(tgt.full());
  for (atom a = 0; a < src.base_size() && rep.fm1; ++a)
    if (!src.covers(a, pre_all)) {
      rep.fm1 = false;
      rep.fm1_witness = a;
    }

  for (atom b = 0; b < tgt.base_size() && rep.fm2; ++b)
    for (atom c = 0; c < tgt.base_size() && rep.fm2; ++c) {
      amask lhs = src.down(s.preimage_atom(b), s.preimage_atom(c));
      amask rhs = s.preimage_set(tgt.down_atoms(b, c));
      for (atom a = 0; a < src.base_size() && rep.fm2; ++a)
        if (((lhs >> a) & 1) && !src.covers(a, rhs)) {
          rep.fm2 = false;
          rep.fm2_witness = {b, c, a};
        }
    }

  for (atom b = 0; b < tgt.base_size() && rep.fm3; ++b)
    for (amask v = 0; v < tgt.subsets() && rep.fm3; ++v) {
      if (!tgt.covers(b, v)) continue;
      amask pre_b = s.preimage_atom(b), pre_v = s.preimage_set(v);
      for (atom a = 0; a < src.base_size() && rep.fm3; ++a)
        if (((pre_b >> a) & 1) && !src.covers(a, pre_v)) {
          rep.fm3 = false;
          rep.fm3_witness = {b, v, a};
        }
    }

  for (atom b = 0; b < tgt.base_size() && rep.fm4; ++b)
    for (amask v = 0; v < tgt.subsets() && rep.fm4; ++v)
      if (src.set_positive(s.preimage_atom(b), s.star(v)) && !tgt.positive(b, v)) {
        rep.fm4 = false;
        rep.fm4_witness = {b, v};
      }

  return rep;
}

// Formal-map equality: both relations pull every target atom back to
// covers of the same source atoms.
inline bool equal_formal_maps(const relation& s, const relation& s2, const topology& src) {
  if (s.nsrc != s2.nsrc || s.ntgt != s2.ntgt || s.nsrc != src.base_size())
    throw input_error("relations do not share a shape over the source base");
  for (atom b = 0; b < s.ntgt; ++b) {
    amask ca = src.covered_atoms(s.preimage_atom(b));
    amask cb = src.covered_atoms(s2.preimage_atom(b));
    if (ca != cb) return false;
  }
  return true;
}

// Image structure on the target base induced by a relation: cover and
// positivity pulled through preimages. Down-right can fail, so the result
// keeps raw tables plus the law flags.
struct image_structure {
  unsigned n = 0;
  std::vector<amask> cover, pos;
  bool downright_holds = false;

  bool is_positive_topology() const { return downright_holds; }

  topology as_topology() const {
    if (!downright_holds)
      throw invalid_topology("image structure is not a positive topology (down-right fails)");
    return topology::from_tables(n, cover, pos);
  }
};

inline image_structure image_topology(const relation& s, const topology& src,
                                      const topology& tgt) {
  if (s.nsrc != src.base_size() || s.ntgt != tgt.base_size())
    throw input_error("relation does not match the bases");
  image_structure im;
  im.n = tgt.base_size();
  std::size_t count = std::size_t(1) << im.n;
  im.cover.assign(count, 0);
  im.pos.assign(count, 0);
  for (amask v = 0; v < count; ++v) {
    amask pre_v = s.preimage_set(v), star_v = s.star(v);
    for (atom b = 0; b < im.n; ++b) {
      if (src.set_covers(s.preimage_atom(b), pre_v)) im.cover[v] |= abit(b);
      if (src.set_positive(s.preimage_atom(b), star_v)) im.pos[v] |= abit(b);
    }
  }

  // Down-right for the image structure, with the down operator computed
  // from the image cover itself.
  auto down_im = [&](amask u, amask v) {
    amask w = 0;
    for (atom b = 0; b < im.n; ++b) {
      if (!((u >> b) & 1)) continue;
      for (atom c = 0; c < im.n; ++c) {
        if (!((v >> c) & 1)) continue;
        w |= im.cover[abit(b)] & im.cover[abit(c)];
      }
    }
    return w;
  };
  im.downright_holds = true;
  for (amask u = 0; u < count && im.downright_holds; ++u)
    for (amask v = 0; v < count && im.downright_holds; ++v) {
      amask common = im.cover[u] & im.cover[v];
      if (common && (common & ~im.cover[down_im(u, v)]) != 0) im.downright_holds = false;
    }
  return im;
}

// All properties of a positive topology except down-right, for the image
// structure. Returns a description of the first failure, empty when fine.
inline std::string check_image_laws_except_downright(const image_structure& im) {
  std::size_t count = std::size_t(1) << im.n;
  for (amask u = 0; u < count; ++u)
    if ((u & ~im.cover[u]) != 0) return "reflexivity fails";
  for (amask u = 0; u < count; ++u)
    for (amask v = 0; v < count; ++v)
      if ((u & ~im.cover[v]) == 0 && (im.cover[u] & ~im.cover[v]) != 0)
        return "transitivity fails";
  for (amask u = 0; u < count; ++u)
    if ((im.pos[u] & ~u) != 0) return "coreflexivity fails";
  for (amask u = 0; u < count; ++u)
    for (amask v = 0; v < count; ++v)
      if ((im.pos[u] & ~v) == 0 && (im.pos[u] & ~im.pos[v]) != 0)
        return "cotransitivity fails";
  for (amask u = 0; u < count; ++u)
    for (amask v = 0; v < count; ++v)
      if ((im.cover[u] & im.pos[v]) != 0 && (u & im.pos[v]) == 0)
        return "compatibility fails";
  return "";
}

// Does the existential image send every ideal point to an ideal point?
inline bool maps_points(const relation& s, const topology& src, const topology& tgt) {
  auto tgt_points = ideal_points(tgt);
  for (amask alpha : ideal_points(src)) {
    amask im = s.image_set(alpha);
    bool found = false;
    for (amask beta : tgt_points)
      if (beta == im) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

struct pointwise_continuity_report {
  bool holds = true;
  std::optional<relation> witness;  // maps points but is not a formal map
  formal_map_report witness_fm;
};

// Pointfree continuity between two finite topologies: every relation whose
// image maps ideal points to ideal points is a formal map.
inline pointwise_continuity_report check_pointwise_continuity(const topology& src, const topology& tgt) {
  pointwise_continuity_report rep;
  for (const relation& s : all_relations(src.base_size(), tgt.base_size())) {
    if (!maps_points(s, src, tgt)) continue;
    formal_map_report fm = check_formal_map(s, src, tgt);
    if (!fm.all()) {
      rep.holds = false;
      rep.witness = s;
      rep.witness_fm = fm;
      return rep;
    }
  }
  return rep;
}

struct equivalence_failure {
  relation witness;
  std::string item;  // which equivalence broke
};

struct pointwise_equivalence_report {
  bool ok = true;
  std::optional<equivalence_failure> failure;
};

// The pointwise/pointfree equivalences for all relations between two small
// bases: each formal-map condition over the pointwise cover of the source
// matches the corresponding behaviour of the existential image on ideal
// points, and the conjunction matches "image maps points to points".
inline pointwise_equivalence_report check_pointwise_equivalences(const topology& src, const topology& tgt) {
  pointwise_equivalence_report rep;
  topology src_ip = ideal_point_topology(src);
  std::vector<amask> src_points = ideal_points(src);

  for (const relation& s : all_relations(src.base_size(), tgt.base_size())) {
    formal_map_report fm = check_formal_map(s, src_ip, tgt);

    bool all_inhabited = true, all_filtering = true, all_split = true, all_enter = true;
    for (amask alpha : src_points) {
      amask im = s.image_set(alpha);
      if (im == 0) all_inhabited = false;
      for (atom b = 0; b < tgt.base_size(); ++b) {
        if (!((im >> b) & 1)) continue;
        for (atom c = 0; c < tgt.base_size(); ++c) {
          if (!((im >> c) & 1)) continue;
          if ((im & tgt.down_atoms(b, c)) == 0) all_filtering = false;
        }
        for (amask v = 0; v < tgt.subsets(); ++v) {
          if (tgt.covers(b, v) && (im & v) == 0) all_split = false;
          if ((im & ~v) == 0 && !tgt.positive(b, v)) all_enter = false;
        }
      }
    }

    auto mismatch = [&](const char* item) {
      rep.ok = false;
      rep.failure = equivalence_failure{s, item};
    };
    if (fm.fm1 != all_inhabited) return mismatch("inhabited"), rep;
    if (fm.fm2 != all_filtering) return mismatch("filtering"), rep;
    if (fm.fm3 != all_split) return mismatch("splits"), rep;
    if (fm.fm4 != all_enter) return mismatch("enters"), rep;

    bool pointwise = maps_points(s, src, tgt);
    bool wanted = all_inhabited && all_filtering && all_split && all_enter;
    if (pointwise != wanted) return mismatch("maps-points"), rep;
    if (pointwise != fm.all()) return mismatch("formal-map-over-point-cover"), rep;
  }
  return rep;
}

// Relation pair between concrete spaces: r on points next to s on atoms.
struct point_relation {
  unsigned nsrc = 0, ntgt = 0;
  std::vector<pmask> fiber;  // fiber[x] = target points related to x

  static point_relation empty(unsigned nsrc, unsigned ntgt) {
    return point_relation{nsrc, ntgt, std::vector<pmask>(nsrc, 0)};
  }
  bool related(unsigned x, unsigned y) const { return (fiber[x] >> y) & 1; }
};

inline std::vector<point_relation> all_point_relations(unsigned nsrc, unsigned ntgt) {
  if (nsrc * ntgt > max_relation_bits)
    throw enumeration_too_large("point relation space of " + std::to_string(nsrc * ntgt) +
                                " bits exceeds the enumeration bound");
  std::vector<point_relation> out;
  std::uint64_t total = std::uint64_t(1) << (nsrc * ntgt);
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    point_relation r = point_relation::empty(nsrc, ntgt);
    for (unsigned x = 0; x < nsrc; ++x)
      r.fiber[x] = pmask((code >> (x * ntgt)) & ((std::uint64_t(1) << ntgt) - 1));
    out.push_back(std::move(r));
  }
  return out;
}

// Pair equality: composing the target forcing after either point relation
// gives the same relation between source points and target atoms.
inline bool equal_pairs(const point_relation& r, const point_relation& r2, const space& y) {
  if (r.nsrc != r2.nsrc || r.ntgt != r2.ntgt || r.ntgt != y.points())
    throw input_error("point relations do not share a shape over the target space");
  for (unsigned x = 0; x < r.nsrc; ++x) {
    amask ca = 0, cb = 0;
    for (unsigned q = 0; q < y.points(); ++q) {
      if (r.related(x, q)) ca |= y.diamond(q);
      if (r2.related(x, q)) cb |= y.diamond(q);
    }
    if (ca != cb) return false;
  }
  return true;
}

struct pair_report {
  bool commutes = true;  // forcing after r equals s after forcing
  bool c1 = true;        // preimages respect pointwise meets
  bool c2 = true;        // preimage of the whole target base is dense
  std::optional<std::pair<unsigned, atom>> commute_witness;  // (point of X, atom of T)
  std::optional<std::pair<atom, atom>> c1_witness;
  bool convergent() const { return commutes && c1 && c2; }
};

inline pair_report check_convergent_pair(const point_relation& r, const relation& s,
                                         const space& x, const space& y) {
  if (r.nsrc != x.points() || r.ntgt != y.points() || s.nsrc != x.base_size() ||
      s.ntgt != y.base_size())
    throw input_error("relation pair does not match the spaces");
  pair_report rep;

  for (unsigned p = 0; p < x.points() && rep.commutes; ++p)
    for (atom b = 0; b < y.base_size() && rep.commutes; ++b) {
      bool lhs = (r.fiber[p] & y.ext_atom(b)) != 0;      // some r-successor forces b
      bool rhs = (x.diamond(p) & s.preimage_atom(b)) != 0;  // some neighbourhood maps to b
      if (lhs != rhs) {
        rep.commutes = false;
        rep.commute_witness = {p, b};
      }
    }

  for (atom a = 0; a < y.base_size() && rep.c1; ++a)
    for (atom b = 0; b < y.base_size() && rep.c1; ++b) {
      pmask lhs = x.ext_set(x.down(s.preimage_atom(a), s.preimage_atom(b)));
      pmask rhs = x.ext_set(s.preimage_set(y.down_atoms(a, b)));
      if (lhs != rhs) {
        rep.c1 = false;
        rep.c1_witness = {a, b};
      }
    }

  rep.c2 = x.ext_set(amask((1u << x.base_size()) - 1)) ==
           x.ext_set(s.preimage_set(amask((1u << y.base_size()) - 1)));
  return rep;
}

// The point relation induced by a formal map between representable
// topologies: x goes to y when every neighbourhood of y comes from some
// neighbourhood of x.
inline point_relation induced_point_relation(const relation& s, const space& x, const space& y) {
  point_relation r = point_relation::empty(x.points(), y.points());
  for (unsigned p = 0; p < x.points(); ++p) {
    amask image = s.image_set(x.diamond(p));
    for (unsigned q = 0; q < y.points(); ++q)
      if ((y.diamond(q) & ~image) == 0) r.fiber[p] |= pmask(1) << q;
  }
  return r;
}

}  // namespace pointfree::fin
