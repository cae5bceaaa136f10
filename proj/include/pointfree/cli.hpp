#pragma once

// Command line surface. run() parses one subcommand, executes it, and maps
// outcomes onto the exit codes: 0 success or true, 1 false or refuted with a
// witness printed, 2 out of fuel or enumeration budget, 3 malformed input.
// Every command is deterministic; --seed is accepted everywhere so invoking
// scripts can pass one uniformly, and it is echoed in the structured output.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pointfree/baire.hpp"
#include "pointfree/concrete_space.hpp"
#include "pointfree/errors.hpp"
#include "pointfree/finite_topology.hpp"
#include "pointfree/nbhd.hpp"
#include "pointfree/parse.hpp"
#include "pointfree/reals.hpp"
#include "pointfree/seq.hpp"
#include "pointfree/spread.hpp"
#include "pointfree/stream.hpp"
#include "pointfree/subset.hpp"
#include "pointfree/verify_suite.hpp"

namespace pointfree::cli {

using nlohmann::json;

namespace cli_detail {

struct context {
  bool json_mode = false;
  nat seed = 0;
  std::string command;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

// Structured success envelope; text output is the command's own business.
inline void emit(const context& cx, int code, const json& data) {
  if (!cx.json_mode) return;
  json j{{"command", cx.command}, {"ok", code == 0}, {"exit", code},
         {"seed", cx.seed}, {"data", data}};
  *cx.out << j.dump(2) << "\n";
}

inline void emit_error(const context& cx, int code, const std::string& kind,
                       const std::string& message) {
  if (cx.json_mode) {
    json j{{"command", cx.command}, {"ok", false}, {"exit", code},
           {"seed", cx.seed}, {"error", {{"kind", kind}, {"message", message}}}};
    *cx.out << j.dump(2) << "\n";
  } else {
    *cx.err << "error: " << message << "\n";
  }
}

inline const char* rule_name(real_rule r) {
  switch (r) {
    case real_rule::eta: return "eta";
    case real_rule::leq_step: return "leq";
    case real_rule::approx_step: return "approx";
    case real_rule::split: return "split";
    case real_rule::discard_left: return "discard-left";
    case real_rule::discard_right: return "discard-right";
  }
  return "?";
}

inline json certificate_json(const real_certificate& c) {
  json j{{"rule", rule_name(c.rule())}, {"conclusion", c.conclusion().str()}};
  if (c.rule() == real_rule::split) j["cut"] = {c.cut_lo().str(), c.cut_hi().str()};
  json kids = json::array();
  for (std::size_t i = 0; i < c.child_count(); ++i) kids.push_back(certificate_json(c.child(i)));
  if (!kids.empty()) j["children"] = kids;
  return j;
}

inline std::string interval_token(const rat_interval& x) {
  return x.p.str() + "," + x.q.str();
}

inline int cmd_finite_verify(const context& cx, const std::vector<std::string>& files,
                             const std::vector<std::string>& spaces) {
  std::vector<fin::check_result> checks = fin::run_finite_battery();
  for (const auto& f : files) {
    fin::topology t = parse_topology_document(read_text_file(f), f);
    for (auto& r : fin::verify_topology_instance(f, t)) checks.push_back(std::move(r));
  }
  for (const auto& f : spaces) {
    fin::space s = parse_space_document(read_text_file(f), f);
    for (auto& r : fin::verify_topology_instance(f, s.representable()))
      checks.push_back(std::move(r));
  }
  std::size_t failures = 0;
  for (const auto& r : checks)
    if (!r.pass) ++failures;
  int code = failures ? 1 : 0;
  if (cx.json_mode) {
    json rows = json::array();
    for (const auto& r : checks)
      rows.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    emit(cx, code, {{"checks", rows}, {"failures", failures}});
  } else {
    for (const auto& r : checks) {
      if (r.pass)
        *cx.out << "pass  " << r.name << "\n";
      else
        *cx.out << "FAIL  " << r.name << ": " << r.detail << "\n";
    }
    *cx.out << checks.size() << " checks, " << failures << " failures\n";
  }
  return code;
}

inline int cmd_baire_split(const context& cx, const std::string& derivation_file,
                           const std::string& set_spec, const std::string& stream_spec,
                           nat fuel) {
  derivation d = parse_derivation_document(read_text_file(derivation_file), derivation_file);
  decidable_subset u = parse_subset_spec(set_spec);
  choice_stream alpha = parse_stream_spec(stream_spec);
  seq b = split_cover(alpha, d, u, fuel);
  if (cx.json_mode)
    emit(cx, 0, {{"neighbourhood", b.str()}});
  else
    *cx.out << b.str() << "\n";
  return 0;
}

inline int cmd_maps_eval(const context& cx, const std::string& relation_spec,
                         const std::string& stream_spec, bool want_modulus, nat fuel) {
  seq_nat_relation s = parse_relation_spec(relation_spec);
  choice_stream alpha = parse_stream_spec(stream_spec);
  modulus_result m = modulus(s, alpha, fuel);
  if (cx.json_mode) {
    json data{{"value", m.value}};
    if (want_modulus) data["modulus"] = m.neighbourhood.str();
    emit(cx, 0, data);
  } else {
    *cx.out << m.value << "\n";
    if (want_modulus) *cx.out << "modulus: " << m.neighbourhood.str() << "\n";
  }
  return 0;
}

inline int cmd_maps_sigma2dec(const context& cx, const std::string& d_spec,
                              const std::string& probe_tok) {
  sigma01_presentation p = parse_sigma_spec(d_spec);
  seq probe = parse_seq(probe_tok);
  bool member = sigma_to_decidable_bar(p).contains(probe);
  int code = member ? 0 : 1;
  if (cx.json_mode) {
    emit(cx, code, {{"member", member}, {"probe", probe.str()}});
  } else {
    *cx.out << (member ? "true" : "false") << "\n";
    if (!member) *cx.out << "witness: " << probe.str() << "\n";
  }
  return code;
}

inline int cmd_spread_retract(const context& cx, const std::string& spread_spec,
                              const std::string& input_tok, const std::string& stream_spec,
                              nat levels, nat fuel) {
  spread sp = parse_spread_spec(spread_spec);
  if (!input_tok.empty() && !stream_spec.empty())
    throw input_error("spread retract takes --input or --stream, not both");
  seq result;
  if (!input_tok.empty()) {
    result = retract_seq(sp, parse_seq(input_tok), fuel);
  } else if (!stream_spec.empty()) {
    choice_stream alpha = parse_stream_spec(stream_spec);
    result = retract_stream(sp, alpha, fuel).prefix(levels);
  } else {
    throw input_error("spread retract needs --input or --stream");
  }
  if (cx.json_mode)
    emit(cx, 0, {{"output", result.str()}});
  else
    *cx.out << result.str() << "\n";
  return 0;
}

inline int cmd_fan_depth(const context& cx, const std::string& set_spec, nat max_depth) {
  nat depth = fan_uniform_depth(parse_subset_spec(set_spec), max_depth);
  if (cx.json_mode)
    emit(cx, 0, {{"depth", depth}});
  else
    *cx.out << depth << "\n";
  return 0;
}

inline int cmd_reals_decide(const context& cx, const std::string& mode_tok,
                            const std::string& target_tok, const std::string& cover_file) {
  real_mode mode = parse_mode(mode_tok);
  rat_interval target = parse_target(target_tok);
  std::vector<rat_interval> u = parse_cover_lines(read_text_file(cover_file), cover_file);
  bool covered = finite_cover_decide(mode, target, u);
  int code = covered ? 0 : 1;
  json data{{"covered", covered}};
  if (!covered) {
    grid_oracle_report rep = grid_cover_oracle(mode, target, u);
    if (rep.witness) data["witness"] = rep.witness->str();
    if (cx.json_mode) {
      emit(cx, code, data);
    } else {
      *cx.out << "not covered\n";
      if (rep.witness) *cx.out << "witness: " << rep.witness->str() << "\n";
    }
  } else if (cx.json_mode) {
    emit(cx, code, data);
  } else {
    *cx.out << "covered\n";
  }
  return code;
}

inline int cmd_reals_certify(const context& cx, const std::string& mode_tok,
                             const std::string& target_tok, const std::string& cover_file) {
  real_mode mode = parse_mode(mode_tok);
  rat_interval target = parse_target(target_tok);
  std::vector<rat_interval> u = parse_cover_lines(read_text_file(cover_file), cover_file);
  try {
    real_certificate cert = certify(mode, target, u);
    if (cx.json_mode)
      emit(cx, 0, {{"certificate", certificate_json(cert)}});
    else
      *cx.out << cert.str();
    return 0;
  } catch (const not_coverable& e) {
    grid_oracle_report rep = grid_cover_oracle(mode, target, u);
    json data{{"covered", false}, {"reason", e.what()}};
    if (rep.witness) data["witness"] = rep.witness->str();
    if (cx.json_mode) {
      emit(cx, 1, data);
    } else {
      *cx.out << "not coverable: " << e.what() << "\n";
      if (rep.witness) *cx.out << "witness: " << rep.witness->str() << "\n";
    }
    return 1;
  }
}

inline int cmd_reals_heine_borel(const context& cx, const std::string& mode_tok,
                                 const std::string& target_tok, const std::string& enum_spec,
                                 nat fuel) {
  real_mode mode = parse_mode(mode_tok);
  rat_interval target = parse_target(target_tok);
  enumerated_cover family = parse_enumerated_cover_spec(enum_spec);
  std::vector<rat_interval> prefix = heine_borel(mode, target, family, fuel);
  if (cx.json_mode) {
    json rows = json::array();
    for (const auto& x : prefix) rows.push_back(interval_token(x));
    emit(cx, 0, {{"count", prefix.size()}, {"prefix", rows}});
  } else {
    for (const auto& x : prefix) *cx.out << interval_token(x) << "\n";
  }
  return 0;
}

}  // namespace cli_detail

// args holds everything after the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  context cx;
  cx.out = &out;
  cx.err = &err;

  CLI::App app{"workbench for inductively generated covers"};
  app.require_subcommand(1);
  app.add_flag("--json", cx.json_mode, "emit structured output");
  app.add_option("--seed", cx.seed, "seed for randomized commands (echoed; all current commands are deterministic)");

  int code = 0;

  auto* finite = app.add_subcommand("finite", "finite topology checks");
  finite->require_subcommand(1);
  auto* verify = finite->add_subcommand("verify", "run the exhaustive battery, then check each document");
  auto verify_files = std::make_shared<std::vector<std::string>>();
  auto verify_spaces = std::make_shared<std::vector<std::string>>();
  verify->add_option("files", *verify_files, "topology documents");
  verify->add_option("--space", *verify_spaces, "concrete space documents, checked through their representable topology");
  verify->callback([&, verify_files, verify_spaces] {
    cx.command = "finite verify";
    code = cmd_finite_verify(cx, *verify_files, *verify_spaces);
  });

  auto* baire = app.add_subcommand("baire", "derivations over the tree of finite sequences");
  baire->require_subcommand(1);
  auto* split = baire->add_subcommand("split", "walk a derivation along a stream to a covered neighbourhood");
  auto split_deriv = std::make_shared<std::string>();
  auto split_set = std::make_shared<std::string>();
  auto split_stream = std::make_shared<std::string>();
  auto split_fuel = std::make_shared<nat>(10000);
  split->add_option("--derivation", *split_deriv, "derivation document")->required();
  split->add_option("--set", *split_set, "subset spec")->required();
  split->add_option("--stream", *split_stream, "stream spec")->required();
  split->add_option("--fuel", *split_fuel, "fan steps allowed");
  split->callback([&, split_deriv, split_set, split_stream, split_fuel] {
    cx.command = "baire split";
    code = cmd_baire_split(cx, *split_deriv, *split_set, *split_stream, *split_fuel);
  });

  auto* maps = app.add_subcommand("maps", "continuous operations given by relations");
  maps->require_subcommand(1);
  auto* eval = maps->add_subcommand("eval", "evaluate a relation on a stream");
  auto eval_rel = std::make_shared<std::string>();
  auto eval_stream = std::make_shared<std::string>();
  auto eval_fuel = std::make_shared<nat>(10000);
  auto eval_modulus = std::make_shared<bool>(false);
  eval->add_option("--relation", *eval_rel, "relation spec")->required();
  eval->add_option("--stream", *eval_stream, "stream spec")->required();
  eval->add_flag("--modulus", *eval_modulus, "also print the deciding prefix");
  eval->add_option("--fuel", *eval_fuel, "prefixes scanned before giving up");
  eval->callback([&, eval_rel, eval_stream, eval_modulus, eval_fuel] {
    cx.command = "maps eval";
    code = cmd_maps_eval(cx, *eval_rel, *eval_stream, *eval_modulus, *eval_fuel);
  });

  auto* sigma = maps->add_subcommand("sigma2dec", "compress an existential presentation to a decidable set and probe it");
  auto sigma_d = std::make_shared<std::string>();
  auto sigma_probe = std::make_shared<std::string>();
  sigma->add_option("--d", *sigma_d, "existential spec")->required();
  sigma->add_option("--probe", *sigma_probe, "sequence to test")->required();
  sigma->callback([&, sigma_d, sigma_probe] {
    cx.command = "maps sigma2dec";
    code = cmd_maps_sigma2dec(cx, *sigma_d, *sigma_probe);
  });

  auto* spread_cmd = app.add_subcommand("spread", "decidable trees with extensions");
  spread_cmd->require_subcommand(1);
  auto* retract = spread_cmd->add_subcommand("retract", "project a sequence or stream onto a spread");
  auto retract_spread = std::make_shared<std::string>();
  auto retract_input = std::make_shared<std::string>();
  auto retract_stream_spec = std::make_shared<std::string>();
  auto retract_levels = std::make_shared<nat>(0);
  auto retract_fuel = std::make_shared<nat>(1000);
  retract->add_option("--spread", *retract_spread, "spread spec")->required();
  retract->add_option("--input", *retract_input, "finite sequence to retract");
  retract->add_option("--stream", *retract_stream_spec, "stream spec to retract levelwise");
  retract->add_option("--levels", *retract_levels, "prefix length printed for --stream");
  retract->add_option("--fuel", *retract_fuel, "digit scans allowed per level");
  retract->callback([&, retract_spread, retract_input, retract_stream_spec, retract_levels,
                     retract_fuel] {
    cx.command = "spread retract";
    code = cmd_spread_retract(cx, *retract_spread, *retract_input, *retract_stream_spec,
                              *retract_levels, *retract_fuel);
  });

  auto* fan = app.add_subcommand("fan", "uniform bounds over the binary tree");
  fan->require_subcommand(1);
  auto* depth = fan->add_subcommand("depth", "least uniform depth at which a subset bars the binary tree");
  auto depth_set = std::make_shared<std::string>();
  auto depth_max = std::make_shared<nat>(0);
  depth->add_option("--set", *depth_set, "subset spec")->required();
  depth->add_option("--max", *depth_max, "depth budget")->required();
  depth->callback([&, depth_set, depth_max] {
    cx.command = "fan depth";
    code = cmd_fan_depth(cx, *depth_set, *depth_max);
  });

  auto* reals = app.add_subcommand("reals", "finite covers of rational intervals");
  reals->require_subcommand(1);
  auto* decide = reals->add_subcommand("decide", "decide whether a finite cover reaches the target");
  auto decide_mode = std::make_shared<std::string>();
  auto decide_target = std::make_shared<std::string>();
  auto decide_cover = std::make_shared<std::string>();
  decide->add_option("--mode", *decide_mode, "r or i01")->required();
  decide->add_option("--target", *decide_target, "target interval p/q..r/s")->required();
  decide->add_option("--cover", *decide_cover, "cover file, one interval per line")->required();
  decide->callback([&, decide_mode, decide_target, decide_cover] {
    cx.command = "reals decide";
    code = cmd_reals_decide(cx, *decide_mode, *decide_target, *decide_cover);
  });

  auto* certify_cmd = reals->add_subcommand("certify", "derive a checkable covering certificate");
  auto certify_mode = std::make_shared<std::string>();
  auto certify_target = std::make_shared<std::string>();
  auto certify_cover = std::make_shared<std::string>();
  certify_cmd->add_option("--mode", *certify_mode, "r or i01")->required();
  certify_cmd->add_option("--target", *certify_target, "target interval p/q..r/s")->required();
  certify_cmd->add_option("--cover", *certify_cover, "cover file, one interval per line")->required();
  certify_cmd->callback([&, certify_mode, certify_target, certify_cover] {
    cx.command = "reals certify";
    code = cmd_reals_certify(cx, *certify_mode, *certify_target, *certify_cover);
  });

  auto* hb = reals->add_subcommand("heine-borel", "find a covering prefix of an enumerated family");
  auto hb_mode = std::make_shared<std::string>();
  auto hb_target = std::make_shared<std::string>();
  auto hb_enum = std::make_shared<std::string>();
  auto hb_fuel = std::make_shared<nat>(1000);
  hb->add_option("--mode", *hb_mode, "r or i01")->required();
  hb->add_option("--target", *hb_target, "target interval p/q..r/s")->required();
  hb->add_option("--enum", *hb_enum, "cover family spec")->required();
  hb->add_option("--fuel", *hb_fuel, "prefix lengths tried");
  hb->callback([&, hb_mode, hb_target, hb_enum, hb_fuel] {
    cx.command = "reals heine-borel";
    code = cmd_reals_heine_borel(cx, *hb_mode, *hb_target, *hb_enum, *hb_fuel);
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("pointfree");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 3;
  } catch (const input_error& e) {
    emit_error(cx, 3, "input", e.what());
    return 3;
  } catch (const resource_error& e) {
    emit_error(cx, 2, "resource", e.what());
    return 2;
  } catch (const arithmetic_overflow& e) {
    emit_error(cx, 2, "overflow", e.what());
    return 2;
  } catch (const not_coverable& e) {
    emit_error(cx, 1, "refuted", e.what());
    return 1;
  }
  return code;
}

}  // namespace pointfree::cli
