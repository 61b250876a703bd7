#include "mil/cli.hpp"

#include <iostream>

#include "CLI11.hpp"
#include "mil/json_io.hpp"

namespace mil {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

struct Options {
  std::string system = "mi";
  std::string formula;
  std::string file;
  std::string file2;
  std::string islo_file;
  std::string frame_file;
  std::string op;
  int max_worlds = 3;
  int depth = 2;
  int state = 0;
  int state2 = 0;
  bool as_json = false;
};

System need_system(const Options& o) {
  auto s = system_from_name(o.system);
  if (!s) throw JsonError("unknown system: " + o.system);
  return *s;
}

void emit(std::ostream& out, const Options& o, const json& doc,
          const std::string& text) {
  if (o.as_json)
    out << doc.dump(2) << "\n";
  else
    out << text << "\n";
}

int cmd_parse(const Options& o, std::ostream& out) {
  Formula f = parse(o.formula);
  json doc{{"formula", print(f)},
           {"letters", f.letters()},
           {"height", f.height()},
           {"modal_depth", f.modal_depth()}};
  emit(out, o, doc, print(f));
  return kOk;
}

int cmd_check_proof(const Options& o, std::ostream& out) {
  Proof p = proof_from_json(load_json_file(o.file));
  CheckResult r = check_proof(need_system(o), p);
  json doc{{"ok", r.ok}};
  std::string text;
  if (r.ok) {
    text = "valid: " + print(p.conclusion());
    doc["concl"] = print(p.conclusion());
  } else {
    doc["path"] = r.path;
    doc["reason"] = r.reason;
    text = "invalid at node [" + r.path + "]: " + r.reason;
  }
  emit(out, o, doc, text);
  return r.ok ? kOk : kRefuted;
}

int cmd_transform(const Options& o, std::ostream& out) {
  json doc;
  std::string text;
  if (o.op == "deduction") {
    Proof p = proof_from_json(load_json_file(o.file));
    Proof q = deduction(p, parse(o.formula));
    doc = proof_to_json(q);
    text = doc.dump(2);
  } else if (o.op == "undeduction") {
    Proof p = proof_from_json(load_json_file(o.file));
    Proof q = undeduction(p);
    doc = proof_to_json(q);
    text = doc.dump(2);
  } else if (o.op == "weaken") {
    Proof p = proof_from_json(load_json_file(o.file));
    Proof q = weaken(p, parse(o.formula));
    doc = proof_to_json(q);
    text = doc.dump(2);
  } else if (o.op == "h2e") {
    Proof p = proof_from_json(load_json_file(o.file));
    EqProof q = hilbert_to_eq(p);
    doc = eq_proof_to_json(q);
    text = doc.dump(2);
  } else if (o.op == "e2h") {
    EqProof p = eq_proof_from_json(load_json_file(o.file));
    auto [fwd, bwd] = eq_to_hilbert(p);
    doc = json{{"forward", proof_to_json(fwd)},
               {"backward", proof_to_json(bwd)}};
    text = doc.dump(2);
  } else {
    throw JsonError("unknown transform: " + o.op);
  }
  out << text << "\n";
  return kOk;
}

int cmd_countermodel(const Options& o, std::ostream& out) {
  SearchSpec spec;
  spec.system = need_system(o);
  spec.target = parse(o.formula);
  spec.max_worlds = o.max_worlds;
  auto cm = find_countermodel(spec);
  if (cm) {
    json doc = countermodel_to_json(*cm);
    emit(out, o, doc,
         "countermodel found (" + std::to_string(cm->model.frame.size()) +
             " worlds, refuted at world " + std::to_string(cm->world) +
             ")\n" + doc.dump(2));
    return kRefuted;
  }
  json doc{{"countermodel", nullptr},
           {"note", "no countermodel up to " + std::to_string(o.max_worlds) +
                        " worlds; this is not a proof of theoremhood"}};
  emit(out, o, doc,
       "no countermodel with at most " + std::to_string(o.max_worlds) +
           " worlds (not a proof of theoremhood)");
  return kOk;
}

int cmd_validate_frame(const Options& o, std::ostream& out) {
  json j = load_json_file(o.file);
  // Reuse the model loader for structure checks, but report per condition.
  FiniteSemilattice sl = semilattice_from_json(j.at("semilattice"));
  auto imp = implicative_witness(sl);
  json doc;
  std::string kind = j.value("kind", std::string("i"));
  std::vector<std::string> violations;
  if (!imp) violations.push_back("semilattice is not implicative");
  if (imp && kind == "box") {
    IFrame base{sl, *imp};
    std::vector<Mask> rel(sl.size(), 0);
    for (const auto& p : j.value("R", json::array()))
      rel[p.at(0).get<int>()] |= mask_bit(p.at(1).get<int>());
    FrameCheck c = check_box_frame(base, rel);
    violations.insert(violations.end(), c.violations.begin(),
                      c.violations.end());
  } else if (imp && kind == "mon") {
    try {
      (void)model_from_json(j);
    } catch (const JsonError& e) {
      violations.push_back(e.what());
    }
  } else if (imp && kind == "i") {
    // nothing beyond implicativity
  } else if (kind != "box" && kind != "mon" && kind != "i") {
    violations.push_back("unknown kind " + kind);
  }
  doc["ok"] = violations.empty();
  doc["violations"] = violations;
  std::string text = violations.empty() ? "valid " + kind + " frame"
                                        : "invalid frame:";
  for (const auto& v : violations) text += "\n  - " + v;
  emit(out, o, doc, text);
  return violations.empty() ? kOk : kRefuted;
}

int cmd_dualize(const Options& o, std::ostream& out) {
  if (!o.islo_file.empty()) {
    Islo a = islo_from_json(load_json_file(o.islo_file));
    Frame f = dual_frame(a);
    Model m;
    m.frame = f;
    json doc = model_to_json(m);
    out << doc.dump(2) << "\n";
    return kOk;
  }
  Model m = model_from_json(load_json_file(o.frame_file));
  if (m.frame.kind == FrameKind::Box) {
    Islo a = complex_algebra(m.frame);
    out << islo_to_json(a).dump(2) << "\n";
  } else if (m.frame.kind == FrameKind::Mon) {
    MonAlgebra a = complex_algebra_mon(m.frame);
    out << mon_algebra_to_json(a).dump(2) << "\n";
  } else {
    throw JsonError("dualize: frame must be of kind box or mon");
  }
  return kOk;
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  IsoReport r;
  if (!o.islo_file.empty()) {
    Islo a = islo_from_json(load_json_file(o.islo_file));
    r = duality_roundtrip_algebra(a);
  } else {
    Model m = model_from_json(load_json_file(o.frame_file));
    r = duality_roundtrip_frame(m.frame);
  }
  json doc{{"iso", r.iso}, {"witness", r.witness}};
  if (!r.iso) doc["failure"] = r.failure;
  std::string text = r.iso ? "isomorphic via the canonical witness"
                           : "round trip failed: " + r.failure;
  emit(out, o, doc, text);
  return r.iso ? kOk : kRefuted;
}

int cmd_filter_extension(const Options& o, std::ostream& out) {
  Model m = model_from_json(load_json_file(o.file));
  Extension ext = filter_extension(m.frame);
  Model transported = transport_model(m, ext);
  json doc{{"extension", model_to_json(transported)}, {"eta", ext.eta}};
  emit(out, o, doc, doc.dump(2));
  return kOk;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  Model m1 = model_from_json(load_json_file(o.file));
  Model m2 = model_from_json(load_json_file(o.file2.empty() ? o.file : o.file2));
  if (o.state < 0 || o.state >= m1.frame.size() || o.state2 < 0 ||
      o.state2 >= m2.frame.size())
    throw JsonError("equiv: state index out of range");
  LogEqResult log = logical_equivalence(m1, m2, o.state, o.state2, o.depth);
  BehEqResult beh =
      behavioural_equivalence(m1, m2, o.state, o.state2, o.max_worlds);
  json doc{{"logical", log.equivalent}, {"behavioural", beh.equivalent}};
  if (!log.equivalent) doc["distinguishing_formula"] = print(log.witness);
  if (beh.equivalent) {
    doc["target_index"] = beh.target_index;
    doc["h1"] = beh.h1;
    doc["h2"] = beh.h2;
  } else {
    doc["bound_limited"] = beh.bound_limited;
  }
  std::string text =
      std::string("logical: ") + (log.equivalent ? "yes" : "no") +
      (log.equivalent ? "" : " (differs on " + print(log.witness) + ")") +
      ", behavioural: " + (beh.equivalent ? "yes" : "no (within bound)");
  emit(out, o, doc, text);
  return (log.equivalent && beh.equivalent) ? kOk : kRefuted;
}

int cmd_probe(const Options& o, std::ostream& out) {
  Formula f = parse(o.formula);
  ConservativityReport rep = conservativity_probe(f, o.max_worlds);
  json doc{{"agreement", rep.agreement},
           {"i_refuted", rep.i_witness.has_value()},
           {"box_refuted", rep.box_witness.has_value()}};
  if (rep.i_witness) doc["i_witness"] = countermodel_to_json(*rep.i_witness);
  if (rep.box_witness)
    doc["box_witness"] = countermodel_to_json(*rep.box_witness);
  std::string text =
      std::string(rep.agreement ? "agreement" : "DISAGREEMENT") +
      ": i-frames " + (rep.i_witness ? "refute" : "do not refute") +
      ", box frames " + (rep.box_witness ? "refute" : "do not refute");
  emit(out, o, doc, text);
  return rep.agreement ? kOk : kRefuted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"meet-implication logic toolbox"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.as_json, "machine-readable JSON output");
  };

  auto* parse_cmd = app.add_subcommand("parse", "parse and reprint a formula");
  parse_cmd->add_option("--formula", o.formula)->required();
  add_common(parse_cmd);

  auto* check_cmd =
      app.add_subcommand("check-proof", "check a derivation file");
  check_cmd->add_option("--system", o.system);
  check_cmd->add_option("--file", o.file)->required();
  add_common(check_cmd);

  auto* transform_cmd = app.add_subcommand(
      "transform", "deduction|undeduction|weaken|h2e|e2h on a proof file");
  transform_cmd->add_option("op", o.op)->required();
  transform_cmd->add_option("--file", o.file)->required();
  transform_cmd->add_option("--formula", o.formula);
  add_common(transform_cmd);

  auto* counter_cmd =
      app.add_subcommand("countermodel", "bounded countermodel search");
  counter_cmd->add_option("--system", o.system);
  counter_cmd->add_option("--formula", o.formula)->required();
  counter_cmd->add_option("--max-worlds", o.max_worlds);
  add_common(counter_cmd);

  auto* validate_cmd =
      app.add_subcommand("validate-frame", "validate a frame/model file");
  validate_cmd->add_option("--file", o.file)->required();
  add_common(validate_cmd);

  auto* dualize_cmd = app.add_subcommand(
      "dualize", "algebra to dual frame, or frame to complex algebra");
  dualize_cmd->add_option("--islo", o.islo_file);
  dualize_cmd->add_option("--frame", o.frame_file);
  add_common(dualize_cmd);

  auto* roundtrip_cmd =
      app.add_subcommand("roundtrip", "duality round trip with witness");
  roundtrip_cmd->add_option("--islo", o.islo_file);
  roundtrip_cmd->add_option("--frame", o.frame_file);
  add_common(roundtrip_cmd);

  auto* ext_cmd =
      app.add_subcommand("filter-extension", "filters-of-filters extension");
  ext_cmd->add_option("--file", o.file)->required();
  add_common(ext_cmd);

  auto* equiv_cmd = app.add_subcommand(
      "equiv", "logical and behavioural equivalence of two states");
  equiv_cmd->add_option("--file", o.file)->required();
  equiv_cmd->add_option("--file2", o.file2);
  equiv_cmd->add_option("--state", o.state);
  equiv_cmd->add_option("--state2", o.state2);
  equiv_cmd->add_option("--depth", o.depth);
  equiv_cmd->add_option("--max-worlds", o.max_worlds);
  add_common(equiv_cmd);

  auto* probe_cmd = app.add_subcommand(
      "probe-conservativity",
      "compare refutability over i-frames and box frames");
  probe_cmd->add_option("--formula", o.formula)->required();
  probe_cmd->add_option("--max-worlds", o.max_worlds);
  add_common(probe_cmd);

  std::vector<std::string> argv_copy(args.rbegin(), args.rend());
  try {
    app.parse(argv_copy);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help
      out << app.help() << std::flush;
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(o, out);
    if (check_cmd->parsed()) return cmd_check_proof(o, out);
    if (transform_cmd->parsed()) return cmd_transform(o, out);
    if (counter_cmd->parsed()) return cmd_countermodel(o, out);
    if (validate_cmd->parsed()) return cmd_validate_frame(o, out);
    if (dualize_cmd->parsed()) {
      if (o.islo_file.empty() == o.frame_file.empty()) {
        err << "error: dualize needs exactly one of --islo/--frame\n";
        return kUsage;
      }
      return cmd_dualize(o, out);
    }
    if (roundtrip_cmd->parsed()) {
      if (o.islo_file.empty() == o.frame_file.empty()) {
        err << "error: roundtrip needs exactly one of --islo/--frame\n";
        return kUsage;
      }
      return cmd_roundtrip(o, out);
    }
    if (ext_cmd->parsed()) return cmd_filter_extension(o, out);
    if (equiv_cmd->parsed()) return cmd_equiv(o, out);
    if (probe_cmd->parsed()) return cmd_probe(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const JsonError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidProofInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace mil
