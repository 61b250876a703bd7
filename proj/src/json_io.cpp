#include "mil/json_io.hpp"

#include <fstream>

namespace mil {

using nlohmann::json;

nlohmann::json semilattice_to_json(const FiniteSemilattice& sl) {
  json pairs = json::array();
  for (int i = 0; i < sl.size(); i++)
    for (int j = 0; j < sl.size(); j++)
      if (i != j && sl.leq(i, j)) pairs.push_back({i, j});
  return json{{"size", sl.size()}, {"top", sl.top}, {"leq", pairs}};
}

FiniteSemilattice semilattice_from_json(const json& j) {
  if (!j.contains("size") || !j.contains("top"))
    throw JsonError("semilattice: missing size or top");
  int size = j.at("size").get<int>();
  int top = j.at("top").get<int>();
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("leq"))
    for (const auto& p : j.at("leq"))
      pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  try {
    return validate_semilattice(FinitePoset::from_pairs(size, pairs), top);
  } catch (const OrderError& e) {
    throw JsonError(std::string("semilattice: ") + e.what());
  }
}

static Mask mask_from_indices(const json& arr, int size, const char* what) {
  Mask m = 0;
  for (const auto& v : arr) {
    int i = v.get<int>();
    if (i < 0 || i >= size)
      throw JsonError(std::string(what) + ": index out of range");
    m |= mask_bit(i);
  }
  return m;
}

static json indices_from_mask(Mask m) {
  json arr = json::array();
  for (int i : mask_elements(m)) arr.push_back(i);
  return arr;
}

nlohmann::json model_to_json(const Model& m) {
  json j;
  j["semilattice"] = semilattice_to_json(m.frame.sl());
  j["kind"] = frame_kind_name(m.frame.kind);
  if (m.frame.kind == FrameKind::Box) {
    json pairs = json::array();
    for (int x = 0; x < m.frame.size(); x++)
      for (int y : mask_elements(m.frame.rel[x])) pairs.push_back({x, y});
    j["R"] = pairs;
  }
  if (m.frame.kind == FrameKind::Mon) {
    json nb = json::array();
    std::vector<Mask> filters = enumerate_filters(m.frame.sl());
    for (int x = 0; x < m.frame.size(); x++) {
      json per_world = json::array();
      for (int g : mask_elements(m.frame.nbhd[x]))
        per_world.push_back(indices_from_mask(filters[g]));
      nb.push_back(per_world);
    }
    j["nbhd"] = nb;
  }
  if (!m.val.empty()) {
    json v;
    for (const auto& [letter, mask] : m.val)
      v[letter] = indices_from_mask(mask);
    j["valuation"] = v;
  }
  return j;
}

Model model_from_json(const json& j) {
  Model m;
  FiniteSemilattice sl = semilattice_from_json(j.at("semilattice"));
  const int n = sl.size();
  std::string kind_name = j.value("kind", std::string("i"));
  auto kind = frame_kind_from_name(kind_name);
  if (!kind) throw JsonError("model: unknown kind " + kind_name);
  IFrame base;
  try {
    base = make_iframe(std::move(sl));
  } catch (const SemanticsError& e) {
    throw JsonError(std::string("model: ") + e.what());
  }
  switch (*kind) {
    case FrameKind::I:
      m.frame = make_i_frame(std::move(base));
      break;
    case FrameKind::Box: {
      if (!j.contains("R")) throw JsonError("model: box kind needs R");
      std::vector<Mask> rel(n, 0);
      for (const auto& p : j.at("R")) {
        int x = p.at(0).get<int>(), y = p.at(1).get<int>();
        if (x < 0 || y < 0 || x >= n || y >= n)
          throw JsonError("model: R index out of range");
        rel[x] |= mask_bit(y);
      }
      try {
        m.frame = make_box_frame(std::move(base), std::move(rel));
      } catch (const SemanticsError& e) {
        throw JsonError(std::string("model: ") + e.what());
      }
      break;
    }
    case FrameKind::Mon: {
      if (!j.contains("nbhd")) throw JsonError("model: mon kind needs nbhd");
      const auto& nb = j.at("nbhd");
      if (static_cast<int>(nb.size()) != n)
        throw JsonError("model: nbhd must list one entry per world");
      std::vector<Mask> nbhd(n, 0);
      for (int x = 0; x < n; x++) {
        for (const auto& filt : nb.at(x)) {
          Mask fm = mask_from_indices(filt, n, "nbhd filter");
          if (!is_filter(base.sl, fm))
            throw JsonError("model: nbhd entry is not a filter");
          nbhd[x] |= mask_bit(filter_generator(base.sl, fm));
        }
      }
      try {
        m.frame = make_mon_frame(std::move(base), std::move(nbhd));
      } catch (const SemanticsError& e) {
        throw JsonError(std::string("model: ") + e.what());
      }
      break;
    }
  }
  if (j.contains("valuation")) {
    for (const auto& [letter, arr] : j.at("valuation").items()) {
      Mask v = mask_from_indices(arr, n, "valuation");
      if (!is_filter(m.frame.sl(), v))
        throw JsonError("model: valuation of " + letter + " is not a filter");
      m.val[letter] = v;
    }
  }
  return m;
}

nlohmann::json islo_to_json(const Islo& a) {
  json j = semilattice_to_json(a.sl);
  j["box"] = a.box;
  return j;
}

Islo islo_from_json(const json& j) {
  FiniteSemilattice sl = semilattice_from_json(j);
  if (!j.contains("box")) throw JsonError("islo: missing box table");
  std::vector<int> box = j.at("box").get<std::vector<int>>();
  try {
    return make_islo(std::move(sl), std::move(box));
  } catch (const AlgebraError& e) {
    throw JsonError(std::string("islo: ") + e.what());
  }
}

nlohmann::json mon_algebra_to_json(const MonAlgebra& a) {
  json j = semilattice_to_json(a.sl);
  j["mon"] = a.mon;
  return j;
}

MonAlgebra mon_algebra_from_json(const json& j) {
  FiniteSemilattice sl = semilattice_from_json(j);
  if (!j.contains("mon")) throw JsonError("mon algebra: missing mon table");
  std::vector<int> mon = j.at("mon").get<std::vector<int>>();
  try {
    return make_mon_algebra(std::move(sl), std::move(mon));
  } catch (const AlgebraError& e) {
    throw JsonError(std::string("mon algebra: ") + e.what());
  }
}

nlohmann::json proof_to_json(const Proof& p) {
  const auto& n = p.node();
  json j;
  switch (n.rule) {
    case HRule::Ass: j["rule"] = "ass"; break;
    case HRule::Ax: j["rule"] = "ax"; break;
    case HRule::Mp: j["rule"] = "mp"; break;
    case HRule::Cong: j["rule"] = "cong"; break;
  }
  json ctx = json::array();
  for (const auto& f : n.ctx) ctx.push_back(print(f));
  j["ctx"] = ctx;
  j["concl"] = print(n.conclusion);
  if (n.rule == HRule::Ax) {
    j["axiom"] = n.axiom_id;
    json sub;
    for (const auto& [k, v] : n.sub) sub[k] = print(v);
    j["sub"] = sub;
  }
  if (!n.kids.empty()) {
    json kids = json::array();
    for (const auto& k : n.kids) kids.push_back(proof_to_json(k));
    j["kids"] = kids;
  }
  return j;
}

Proof proof_from_json(const json& j) {
  std::string rule = j.at("rule").get<std::string>();
  std::vector<Formula> ctx;
  if (j.contains("ctx"))
    for (const auto& s : j.at("ctx")) ctx.push_back(parse(s.get<std::string>()));
  Formula concl = parse(j.at("concl").get<std::string>());
  std::vector<Proof> kids;
  if (j.contains("kids"))
    for (const auto& k : j.at("kids")) kids.push_back(proof_from_json(k));
  try {
    if (rule == "ass") {
      if (!kids.empty()) throw JsonError("proof: ass with children");
      return ass(std::move(ctx), concl);
    }
    if (rule == "ax") {
      if (!kids.empty()) throw JsonError("proof: ax with children");
      std::string id = j.value("axiom", std::string());
      if (!find_schema(System::MIBox, id) && !find_schema(System::MIMon, id))
        throw JsonError("proof: unknown axiom " + id);
      Substitution sub;
      if (j.contains("sub"))
        for (const auto& [k, v] : j.at("sub").items())
          sub.emplace(k, parse(v.get<std::string>()));
      return ax_raw(std::move(ctx), id, sub, concl);
    }
    if (rule == "mp") {
      if (kids.size() != 2) throw JsonError("proof: mp needs two children");
      Proof p = mp(kids[0], kids[1]);
      if (p.conclusion() != concl || p.ctx() != ctx_normalize(ctx))
        throw JsonError("proof: mp node does not match its children");
      return p;
    }
    if (rule == "cong") {
      if (kids.size() != 1) throw JsonError("proof: cong needs one child");
      // The modality is read off the stated conclusion.
      Modality mod = Modality::Box;
      if (concl.is(Conn::And) && concl.lhs().is(Conn::Imp) &&
          concl.lhs().lhs().is(Conn::Mon))
        mod = Modality::Mon;
      Proof p = cong(kids[0], mod);
      if (p.conclusion() != concl)
        throw JsonError("proof: cong node does not match its child");
      return p;
    }
  } catch (const ProofBuildError& e) {
    throw JsonError(std::string("proof: ") + e.what());
  }
  throw JsonError("proof: unknown rule " + rule);
}

nlohmann::json eq_proof_to_json(const EqProof& p) {
  const auto& n = p.node();
  json j;
  j["rule"] = erule_name(n.rule);
  j["concl"] = print(n.concl);
  if (n.rule == ERule::E1 || n.rule == ERule::E2 || n.rule == ERule::E3 ||
      n.rule == ERule::E4) {
    json sub;
    for (const auto& [k, v] : n.sub) sub[k] = print(v);
    j["sub"] = sub;
  }
  if (!n.kids.empty()) {
    json kids = json::array();
    for (const auto& k : n.kids) kids.push_back(eq_proof_to_json(k));
    j["kids"] = kids;
  }
  return j;
}

EqProof eq_proof_from_json(const json& j) {
  std::string rule_name = j.at("rule").get<std::string>();
  auto rule = erule_from_name(rule_name);
  if (!rule) throw JsonError("eq proof: unknown rule " + rule_name);
  Equation concl = parse_equation(j.at("concl").get<std::string>());
  std::vector<EqProof> kids;
  if (j.contains("kids"))
    for (const auto& k : j.at("kids")) kids.push_back(eq_proof_from_json(k));
  auto expect_kids = [&](std::size_t n) {
    if (kids.size() != n)
      throw JsonError("eq proof: " + rule_name + " expects " +
                      std::to_string(n) + " children");
  };
  try {
    EqProof p;
    switch (*rule) {
      case ERule::E1:
      case ERule::E2:
      case ERule::E3:
      case ERule::E4: {
        expect_kids(0);
        Substitution sub;
        if (j.contains("sub"))
          for (const auto& [k, v] : j.at("sub").items())
            sub.emplace(k, parse(v.get<std::string>()));
        p = e_axiom(*rule, sub);
        break;
      }
      case ERule::Ref:
        expect_kids(0);
        p = e_refl(concl.lhs);
        break;
      case ERule::Sym:
        expect_kids(1);
        p = e_sym(kids[0]);
        break;
      case ERule::Trans:
        expect_kids(2);
        p = e_trans(kids[0], kids[1]);
        break;
      case ERule::CongAnd:
        expect_kids(2);
        p = e_cong_and(kids[0], kids[1]);
        break;
      case ERule::CongImp:
        expect_kids(2);
        p = e_cong_imp(kids[0], kids[1]);
        break;
      case ERule::ResUp:
        expect_kids(1);
        p = e_res_up(kids[0]);
        break;
      case ERule::ResDown:
        expect_kids(1);
        p = e_res_down(kids[0]);
        break;
    }
    if (!(p.conclusion() == concl))
      throw JsonError("eq proof: stated conclusion does not match the rule");
    return p;
  } catch (const ProofBuildError& e) {
    throw JsonError(std::string("eq proof: ") + e.what());
  }
}

nlohmann::json countermodel_to_json(const Countermodel& cm) {
  json j = model_to_json(cm.model);
  j["refuted_at"] = cm.world;
  return j;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw JsonError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace mil
