#pragma once

// Text formats for the command line tools. Everything is line oriented:
// '#' starts a comment, blank lines are skipped, and errors carry the
// source label and line number. The short builder specs (level:3,
// periodic:[0,1], table:PATH, ...) live here too so the tools and the
// tests share one grammar.

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pointfree/baire.hpp"
#include "pointfree/concrete_space.hpp"
#include "pointfree/errors.hpp"
#include "pointfree/finite_topology.hpp"
#include "pointfree/nbhd.hpp"
#include "pointfree/rational.hpp"
#include "pointfree/reals.hpp"
#include "pointfree/seq.hpp"
#include "pointfree/spread.hpp"
#include "pointfree/stream.hpp"
#include "pointfree/subset.hpp"

namespace pointfree {

namespace parse_detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Content lines with their 1-based line numbers, comments and blanks removed.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(no, line);
  }
  return out;
}

inline parse_error at(const std::string& label, std::size_t line, const std::string& msg) {
  return parse_error(label + ", line " + std::to_string(line) + ": " + msg);
}

inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace parse_detail

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline nat parse_nat(const std::string& tok) {
  std::string t = parse_detail::trim(tok);
  if (!parse_detail::all_digits(t))
    throw parse_error("expected an unsigned number, got '" + tok + "'");
  try {
    return std::stoull(t);
  } catch (const std::out_of_range&) {
    throw parse_error("number out of range: '" + tok + "'");
  }
}

// Sequence literal: [] or [1,0,2], spaces allowed around entries.
inline seq parse_seq(const std::string& tok) {
  const std::string t = parse_detail::trim(tok);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
  };
  if (i >= t.size() || t[i] != '[')
    throw parse_error("expected a sequence like [1,0,2], got '" + tok + "'");
  ++i;
  skip();
  std::vector<nat> entries;
  if (i < t.size() && t[i] == ']') {
    ++i;
  } else {
    for (;;) {
      skip();
      std::size_t start = i;
      while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
      if (start == i) throw parse_error("expected a number entry in sequence '" + tok + "'");
      entries.push_back(parse_nat(t.substr(start, i - start)));
      skip();
      if (i < t.size() && t[i] == ',') {
        ++i;
        continue;
      }
      if (i < t.size() && t[i] == ']') {
        ++i;
        break;
      }
      throw parse_error("expected ',' or ']' in sequence '" + tok + "'");
    }
  }
  skip();
  if (i != t.size()) throw parse_error("trailing characters after sequence in '" + tok + "'");
  return seq(std::move(entries));
}

inline rational parse_rational(const std::string& tok) {
  const std::string t = parse_detail::trim(tok);
  auto slash = t.find('/');
  if (slash == std::string::npos)
    throw parse_error("expected a rational like -3/4, got '" + tok + "'");
  std::string num = parse_detail::trim(t.substr(0, slash));
  std::string den = parse_detail::trim(t.substr(slash + 1));
  bool neg = !num.empty() && num[0] == '-';
  if (!parse_detail::all_digits(neg ? num.substr(1) : num) || !parse_detail::all_digits(den))
    throw parse_error("expected a rational like -3/4, got '" + tok + "'");
  rational::big_int d{den};
  if (d == 0) throw parse_error("zero denominator in '" + tok + "'");
  return rational(rational::big_int(num), d);
}

// Interval literal p/q,r/s as used in cover files.
inline rat_interval parse_interval(const std::string& tok) {
  const std::string t = parse_detail::trim(tok);
  auto comma = t.find(',');
  if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos)
    throw parse_error("expected an interval like -1/2,3/4, got '" + tok + "'");
  rational p = parse_rational(t.substr(0, comma));
  rational q = parse_rational(t.substr(comma + 1));
  if (!(p < q))
    throw parse_error("interval endpoints must satisfy p < q in '" + tok + "'");
  return rat_interval(p, q);
}

// Target literal p/q..r/s as used on the command line.
inline rat_interval parse_target(const std::string& tok) {
  const std::string t = parse_detail::trim(tok);
  auto dots = t.find("..");
  if (dots == std::string::npos)
    throw parse_error("expected a target like 0/1..2/1, got '" + tok + "'");
  rational p = parse_rational(t.substr(0, dots));
  rational q = parse_rational(t.substr(dots + 2));
  if (!(p < q))
    throw parse_error("target endpoints must satisfy p < q in '" + tok + "'");
  return rat_interval(p, q);
}

inline real_mode parse_mode(const std::string& tok) {
  const std::string t = parse_detail::trim(tok);
  if (t == "r") return real_mode::reals;
  if (t == "i01") return real_mode::unit_interval;
  throw parse_error("unknown mode '" + tok + "'; expected r or i01");
}

// Cover file: one interval per line.
inline std::vector<rat_interval> parse_cover_lines(const std::string& text,
                                                   const std::string& label) {
  std::vector<rat_interval> out;
  for (const auto& [no, line] : parse_detail::content_lines(text)) {
    try {
      out.push_back(parse_interval(line));
    } catch (const parse_error& e) {
      throw parse_detail::at(label, no, e.what());
    }
  }
  return out;
}

// Sequence list file: one sequence literal per line.
inline std::set<seq> parse_seq_lines(const std::string& text, const std::string& label) {
  std::set<seq> out;
  for (const auto& [no, line] : parse_detail::content_lines(text)) {
    try {
      out.insert(parse_seq(line));
    } catch (const parse_error& e) {
      throw parse_detail::at(label, no, e.what());
    }
  }
  return out;
}

namespace parse_detail {

// Atom set literal {0,2} or {} against a known base size.
inline fin::amask parse_atom_set(const std::string& tok, unsigned base) {
  const std::string t = trim(tok);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw parse_error("expected an atom set like {0,2}, got '" + tok + "'");
  std::string inner = trim(t.substr(1, t.size() - 2));
  fin::amask m = 0;
  if (inner.empty()) return m;
  std::istringstream in(inner);
  std::string part;
  while (std::getline(in, part, ',')) {
    nat a = parse_nat(part);
    if (a >= base)
      throw parse_error("atom " + std::to_string(a) + " is outside the base of size " +
                        std::to_string(base));
    m |= fin::abit(static_cast<fin::atom>(a));
  }
  return m;
}

}  // namespace parse_detail

// Topology document:
//   base: 3
//   axioms:
//   0 -> {1,2}
//   pos:            (optional; when present the listed pairs are the whole relation)
//   0 ~ {0,1}
inline fin::topology parse_topology_document(const std::string& text, const std::string& label) {
  auto lines = parse_detail::content_lines(text);
  std::size_t i = 0;
  auto fail = [&](std::size_t no, const std::string& msg) -> parse_error {
    return parse_detail::at(label, no, msg);
  };
  if (lines.empty()) throw parse_error(label + ": empty topology document");
  if (lines[i].second.rfind("base:", 0) != 0)
    throw fail(lines[i].first, "topology documents start with 'base: N'");
  nat base = parse_nat(lines[i].second.substr(5));
  if (base == 0 || base > 32) throw fail(lines[i].first, "base size must be between 1 and 32");
  ++i;
  if (i >= lines.size() || lines[i].second != "axioms:")
    throw fail(i < lines.size() ? lines[i].first : lines.back().first,
               "expected an 'axioms:' section after the base");
  ++i;
  std::vector<fin::axiom> axioms;
  while (i < lines.size() && lines[i].second != "pos:") {
    const auto& [no, line] = lines[i];
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw fail(no, "expected an axiom like '0 -> {1,2}', got '" + line + "'");
    nat a = parse_nat(line.substr(0, arrow));
    if (a >= base)
      throw fail(no, "atom " + std::to_string(a) + " is outside the base of size " +
                     std::to_string(base));
    fin::amask u;
    try {
      u = parse_detail::parse_atom_set(line.substr(arrow + 2), static_cast<unsigned>(base));
    } catch (const parse_error& e) {
      throw fail(no, e.what());
    }
    axioms.push_back({static_cast<fin::atom>(a), u});
    ++i;
  }
  std::optional<std::vector<std::pair<fin::atom, fin::amask>>> pos;
  if (i < lines.size()) {
    ++i;  // the pos: header
    pos.emplace();
    while (i < lines.size()) {
      const auto& [no, line] = lines[i];
      auto tilde = line.find('~');
      if (tilde == std::string::npos)
        throw fail(no, "expected a positivity pair like '0 ~ {0,1}', got '" + line + "'");
      nat a = parse_nat(line.substr(0, tilde));
      if (a >= base)
        throw fail(no, "atom " + std::to_string(a) + " is outside the base of size " +
                       std::to_string(base));
      fin::amask u;
      try {
        u = parse_detail::parse_atom_set(line.substr(tilde + 1), static_cast<unsigned>(base));
      } catch (const parse_error& e) {
        throw fail(no, e.what());
      }
      pos->emplace_back(static_cast<fin::atom>(a), u);
      ++i;
    }
  }
  return fin::topology::from_axioms(static_cast<unsigned>(base), axioms, pos);
}

// Space document:
//   points: 2
//   base: 2
//   forcing:
//   0 |- 0
inline fin::space parse_space_document(const std::string& text, const std::string& label) {
  auto lines = parse_detail::content_lines(text);
  std::size_t i = 0;
  auto fail = [&](std::size_t no, const std::string& msg) -> parse_error {
    return parse_detail::at(label, no, msg);
  };
  if (lines.empty()) throw parse_error(label + ": empty space document");
  if (lines[i].second.rfind("points:", 0) != 0)
    throw fail(lines[i].first, "space documents start with 'points: N'");
  nat npoints = parse_nat(lines[i].second.substr(7));
  ++i;
  if (i >= lines.size() || lines[i].second.rfind("base:", 0) != 0)
    throw fail(i < lines.size() ? lines[i].first : lines.back().first,
               "expected 'base: N' after the point count");
  nat natoms = parse_nat(lines[i].second.substr(5));
  ++i;
  if (i >= lines.size() || lines[i].second != "forcing:")
    throw fail(i < lines.size() ? lines[i].first : lines.back().first,
               "expected a 'forcing:' section");
  ++i;
  std::vector<std::pair<unsigned, fin::atom>> forcing;
  while (i < lines.size()) {
    const auto& [no, line] = lines[i];
    auto bar = line.find("|-");
    if (bar == std::string::npos)
      throw fail(no, "expected a forcing pair like '0 |- 1', got '" + line + "'");
    nat x = parse_nat(line.substr(0, bar));
    nat a = parse_nat(line.substr(bar + 2));
    if (x >= npoints)
      throw fail(no, "point " + std::to_string(x) + " is outside the point set");
    if (a >= natoms)
      throw fail(no, "atom " + std::to_string(a) + " is outside the base");
    forcing.emplace_back(static_cast<unsigned>(x), static_cast<fin::atom>(a));
    ++i;
  }
  return fin::space::make(static_cast<unsigned>(npoints), static_cast<unsigned>(natoms), forcing);
}

namespace parse_detail {

// Fiber table lines '[a] -> n', fibers accumulate across repeated rows.
inline std::map<seq, std::set<nat>> parse_fiber_rows(const std::string& text,
                                                     const std::string& label) {
  std::map<seq, std::set<nat>> rows;
  for (const auto& [no, line] : content_lines(text)) {
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw at(label, no, "expected a row like '[0,1] -> 2', got '" + line + "'");
    try {
      rows[parse_seq(line.substr(0, arrow))].insert(parse_nat(line.substr(arrow + 2)));
    } catch (const parse_error& e) {
      throw at(label, no, e.what());
    }
  }
  return rows;
}

}  // namespace parse_detail

inline seq_nat_relation parse_relation_table(const std::string& text, const std::string& label) {
  return seq_nat_relation::table(parse_detail::parse_fiber_rows(text, label));
}

// Spread table file: member sequences one per line, optional 'pad: N' row.
inline spread parse_spread_table(const std::string& text, const std::string& label) {
  std::vector<seq> members;
  std::optional<nat> pad;
  for (const auto& [no, line] : parse_detail::content_lines(text)) {
    if (line.rfind("pad:", 0) == 0) {
      if (pad) throw parse_detail::at(label, no, "duplicate 'pad:' row");
      pad = parse_nat(line.substr(4));
      continue;
    }
    try {
      members.push_back(parse_seq(line));
    } catch (const parse_error& e) {
      throw parse_detail::at(label, no, e.what());
    }
  }
  try {
    return spread::table(members, pad.value_or(0));
  } catch (const invalid_spread& e) {
    throw parse_error(label + ": " + e.what());
  }
}

// Derivation document: a 'conclude: [a]' header, then one tree expression
//   node   := (eta) | (zeta [b] node) | (fan branch... (default eta)?)
//   branch := (N node)
// A zeta premise names its own conclusion [b]; fan branch N concludes the
// parent conclusion extended by N. Branches missing from the table fall back
// to the default when one is given and are an input error otherwise.
inline derivation parse_derivation_document(const std::string& text, const std::string& label) {
  auto lines = parse_detail::content_lines(text);
  if (lines.empty()) throw parse_error(label + ": empty derivation document");
  if (lines[0].second.rfind("conclude:", 0) != 0)
    throw parse_detail::at(label, lines[0].first,
                           "derivation documents start with 'conclude: [a]'");
  seq root;
  try {
    root = parse_seq(lines[0].second.substr(9));
  } catch (const parse_error& e) {
    throw parse_detail::at(label, lines[0].first, e.what());
  }

  std::string body;
  for (std::size_t i = 1; i < lines.size(); ++i) body += lines[i].second + " ";

  std::vector<std::string> toks;
  for (std::size_t i = 0; i < body.size();) {
    char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      toks.emplace_back(1, c);
      ++i;
    } else if (c == '[') {
      auto close = body.find(']', i);
      if (close == std::string::npos)
        throw parse_error(label + ": unterminated sequence literal in tree");
      toks.push_back(body.substr(i, close - i + 1));
      i = close + 1;
    } else {
      std::size_t start = i;
      while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])) &&
             body[i] != '(' && body[i] != ')' && body[i] != '[')
        ++i;
      toks.push_back(body.substr(start, i - start));
    }
  }

  std::size_t pos = 0;
  auto peek = [&]() -> const std::string& {
    static const std::string none;
    return pos < toks.size() ? toks[pos] : none;
  };
  auto next = [&]() -> std::string {
    if (pos >= toks.size()) throw parse_error(label + ": tree expression ends early");
    return toks[pos++];
  };
  auto expect = [&](const std::string& t) {
    std::string got = next();
    if (got != t)
      throw parse_error(label + ": expected '" + t + "' in tree, got '" + got + "'");
  };

  std::function<derivation(const seq&)> parse_node = [&](const seq& ctx) -> derivation {
    expect("(");
    std::string head = next();
    if (head == "eta") {
      expect(")");
      return derivation::eta(ctx);
    }
    if (head == "zeta") {
      seq premise = parse_seq(next());
      derivation child = parse_node(premise);
      expect(")");
      return derivation::zeta(ctx, std::move(child));
    }
    if (head == "fan") {
      auto table = std::make_shared<std::map<nat, derivation>>();
      bool has_default = false;
      while (peek() == "(") {
        expect("(");
        std::string tag = next();
        if (tag == "default") {
          expect("eta");
          expect(")");
          has_default = true;
          continue;
        }
        nat n = parse_nat(tag);
        if (table->count(n))
          throw parse_error(label + ": duplicate fan branch " + std::to_string(n));
        table->emplace(n, parse_node(ctx.append(n)));
        expect(")");
      }
      expect(")");
      seq c = ctx;
      return derivation::fan(ctx, [table, has_default, c](nat n) -> derivation {
        auto it = table->find(n);
        if (it != table->end()) return it->second;
        if (has_default) return derivation::eta(c.append(n));
        throw input_error("fan node at " + c.str() + " has no branch for " +
                          std::to_string(n));
      });
    }
    throw parse_error(label + ": unknown tree head '" + head + "'");
  };

  derivation d = parse_node(root);
  if (pos != toks.size())
    throw parse_error(label + ": trailing tokens after the tree expression");
  return d;
}

// ---- short builder specs ----------------------------------------------

namespace parse_detail {

inline std::optional<std::string> tail_of(const std::string& spec, const std::string& prefix) {
  if (spec.rfind(prefix, 0) == 0) return spec.substr(prefix.size());
  return std::nullopt;
}

}  // namespace parse_detail

// level:K | min-len:K | singleton:[a] | file:PATH | downclose:SPEC
inline decidable_subset parse_subset_spec(const std::string& spec) {
  using parse_detail::tail_of;
  if (auto t = tail_of(spec, "level:")) return decidable_subset::of_level(parse_nat(*t));
  if (auto t = tail_of(spec, "min-len:")) return decidable_subset::of_min_length(parse_nat(*t));
  if (auto t = tail_of(spec, "singleton:")) return decidable_subset::singleton(parse_seq(*t));
  if (auto t = tail_of(spec, "file:"))
    return decidable_subset::finite(parse_seq_lines(read_text_file(*t), *t));
  if (auto t = tail_of(spec, "downclose:")) return downward_closure(parse_subset_spec(*t));
  throw parse_error("unknown subset spec '" + spec +
                    "'; expected level:K, min-len:K, singleton:[a], file:PATH, or downclose:SPEC");
}

// zeros-after:[a] | periodic:[p] | table:[p];pad=N
inline choice_stream parse_stream_spec(const std::string& spec) {
  using parse_detail::tail_of;
  if (auto t = tail_of(spec, "zeros-after:")) return choice_stream::zeros_after(parse_seq(*t));
  if (auto t = tail_of(spec, "periodic:")) {
    seq p = parse_seq(*t);
    if (p.empty()) throw parse_error("periodic stream needs a nonempty period");
    return choice_stream::periodic(p);
  }
  if (auto t = tail_of(spec, "table:")) {
    auto semi = t->find(';');
    nat pad = 0;
    std::string head = *t;
    if (semi != std::string::npos) {
      std::string rest = parse_detail::trim(t->substr(semi + 1));
      if (rest.rfind("pad=", 0) != 0)
        throw parse_error("expected ';pad=N' after the table prefix in '" + spec + "'");
      pad = parse_nat(rest.substr(4));
      head = t->substr(0, semi);
    }
    return choice_stream::table(parse_seq(head), pad);
  }
  throw parse_error("unknown stream spec '" + spec +
                    "'; expected zeros-after:[a], periodic:[p], or table:[p];pad=N");
}

// first-entry | sum-first-k:K | constant:N | table:PATH
inline seq_nat_relation parse_relation_spec(const std::string& spec) {
  using parse_detail::tail_of;
  if (spec == "first-entry") return seq_nat_relation::first_entry();
  if (auto t = tail_of(spec, "sum-first-k:")) return seq_nat_relation::sum_first_k(parse_nat(*t));
  if (auto t = tail_of(spec, "constant:")) return seq_nat_relation::constant(parse_nat(*t));
  if (auto t = tail_of(spec, "table:")) return parse_relation_table(read_text_file(*t), *t);
  throw parse_error("unknown relation spec '" + spec +
                    "'; expected first-entry, sum-first-k:K, constant:N, or table:PATH");
}

// binary | kary:K | min-entry:C | parity | seeded:N | table:PATH
inline spread parse_spread_spec(const std::string& spec) {
  using parse_detail::tail_of;
  if (spec == "binary") return spread::binary();
  if (spec == "parity") return spread::parity();
  if (auto t = tail_of(spec, "kary:")) {
    nat k = parse_nat(*t);
    if (k == 0) throw parse_error("kary spread needs a positive alphabet");
    return spread::kary(k);
  }
  if (auto t = tail_of(spec, "min-entry:")) return spread::min_entry(parse_nat(*t));
  if (auto t = tail_of(spec, "seeded:")) return spread::seeded(parse_nat(*t));
  if (auto t = tail_of(spec, "table:")) return parse_spread_table(read_text_file(*t), *t);
  throw parse_error("unknown spread spec '" + spec +
                    "'; expected binary, kary:K, min-entry:C, parity, seeded:N, or table:PATH");
}

// always | never | len-ge:K | value-lt:C | table:PATH
inline sigma01_presentation parse_sigma_spec(const std::string& spec) {
  using parse_detail::tail_of;
  if (spec == "always") return {[](const seq&, nat) { return true; }};
  if (spec == "never") return {[](const seq&, nat) { return false; }};
  if (auto t = tail_of(spec, "len-ge:")) {
    nat k = parse_nat(*t);
    return {[k](const seq& a, nat) { return a.length() >= k; }};
  }
  if (auto t = tail_of(spec, "value-lt:")) {
    nat c = parse_nat(*t);
    return {[c](const seq&, nat n) { return n < c; }};
  }
  if (auto t = tail_of(spec, "table:")) {
    auto rows = std::make_shared<std::map<seq, std::set<nat>>>(
        parse_detail::parse_fiber_rows(read_text_file(*t), *t));
    return {[rows](const seq& a, nat n) {
      auto it = rows->find(a);
      return it != rows->end() && it->second.count(n) > 0;
    }};
  }
  throw parse_error("unknown existential spec '" + spec +
                    "'; expected always, never, len-ge:K, value-lt:C, or table:PATH");
}

// shrinking | constant:p/q,r/s | file:PATH
inline enumerated_cover parse_enumerated_cover_spec(const std::string& spec) {
  using parse_detail::tail_of;
  if (spec == "shrinking") return enumerated_cover::shrinking();
  if (auto t = tail_of(spec, "constant:")) return enumerated_cover::constant(parse_interval(*t));
  if (auto t = tail_of(spec, "file:"))
    return enumerated_cover::from_list(parse_cover_lines(read_text_file(*t), *t));
  throw parse_error("unknown cover family spec '" + spec +
                    "'; expected shrinking, constant:p/q,r/s, or file:PATH");
}

}  // namespace pointfree
