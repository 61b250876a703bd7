#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mil/cli.hpp"
#include "mil/json_io.hpp"

using namespace mil;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content) {
    path = std::string("cli_test_") + name;
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string chain3_box_json() {
  json j;
  j["semilattice"] = {{"size", 3},
                      {"top", 2},
                      {"leq", json::array({{0, 1}, {1, 2}, {0, 2}})}};
  j["kind"] = "box";
  j["R"] = json::array({{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
  j["valuation"] = {{"p", json::array({1, 2})}};
  return j.dump();
}

}  // namespace

TEST_CASE("json round trips") {
  auto sl = semilattice_from_json(json::parse(
      R"({"size":3,"top":2,"leq":[[0,1],[1,2],[0,2]]})"));
  CHECK(sl.size() == 3);
  CHECK(sl.meet(0, 2) == 0);
  auto again = semilattice_from_json(semilattice_to_json(sl));
  CHECK(again == sl);

  Model m = model_from_json(json::parse(chain3_box_json()));
  CHECK(m.frame.kind == FrameKind::Box);
  CHECK(m.val.at("p") == (mask_bit(1) | mask_bit(2)));
  Model m2 = model_from_json(model_to_json(m));
  CHECK(m2.frame.rel == m.frame.rel);
  CHECK(m2.val == m.val);

  Proof p = prove_identity(parse("p"));
  Proof p2 = proof_from_json(proof_to_json(p));
  CHECK(check_proof(System::MI, p2).ok);
  CHECK(p2.conclusion() == p.conclusion());

  EqProof e = res3_second(parse("p"), parse("q"));
  EqProof e2 = eq_proof_from_json(eq_proof_to_json(e));
  CHECK(check_eq_proof(e2).ok);
  CHECK(e2.conclusion() == e.conclusion());
}

TEST_CASE("json loader rejects malformed structures") {
  CHECK_THROWS_AS(
      semilattice_from_json(json::parse(
          R"({"size":2,"top":1,"leq":[[0,1],[1,0]]})")),
      JsonError);
  // Valuation must be a filter.
  json j = json::parse(chain3_box_json());
  j["valuation"]["p"] = json::array({0});
  CHECK_THROWS_AS(model_from_json(j), JsonError);
  // Unknown modality in a proof.
  CHECK_THROWS_AS(proof_from_json(json::parse(
                      R"({"rule":"ax","concl":"T","axiom":"H9"})")),
                  JsonError);
}

TEST_CASE("cli parse") {
  auto r = run({"parse", "--formula", "p -> (q -> p)"});
  CHECK(r.code == 0);
  CHECK(r.out == "p -> q -> p\n");
  auto rj = run({"parse", "--formula", "p & q", "--json"});
  CHECK(rj.code == 0);
  json doc = json::parse(rj.out);
  CHECK(doc["formula"] == "p & q");
  auto bad = run({"parse", "--formula", "p ->"});
  CHECK(bad.code == 2);
  CHECK(!bad.err.empty());
}

TEST_CASE("cli check-proof") {
  Proof p = prove_identity(parse("p"));
  TempFile f("proof.json", proof_to_json(p).dump());
  auto r = run({"check-proof", "--system", "mi", "--file", f.path});
  CHECK(r.code == 0);
  // The same proof under a bogus system name.
  auto bad = run({"check-proof", "--system", "zz", "--file", f.path});
  CHECK(bad.code == 2);

  json broken = proof_to_json(p);
  broken["concl"] = "q";
  TempFile g("broken.json", broken.dump());
  auto rb = run({"check-proof", "--system", "mi", "--file", g.path});
  CHECK(rb.code == 2);  // node no longer matches its children
}

TEST_CASE("cli transform") {
  Proof p = prove_identity(parse("p"));
  TempFile f("id.json", proof_to_json(p).dump());
  auto r = run({"transform", "undeduction", "--file", f.path});
  CHECK(r.code == 0);
  Proof q = proof_from_json(json::parse(r.out));
  CHECK(check_proof(System::MI, q).ok);
  CHECK(q.conclusion() == parse("p"));

  auto h2e = run({"transform", "h2e", "--file", f.path});
  CHECK(h2e.code == 0);
  EqProof e = eq_proof_from_json(json::parse(h2e.out));
  CHECK(check_eq_proof(e).ok);

  TempFile ef("eq.json", eq_proof_to_json(res3_first(parse("p"), parse("q")))
                             .dump());
  auto e2h = run({"transform", "e2h", "--file", ef.path});
  CHECK(e2h.code == 0);
  json doc = json::parse(e2h.out);
  CHECK(check_proof(System::MI, proof_from_json(doc["forward"])).ok);
  CHECK(check_proof(System::MI, proof_from_json(doc["backward"])).ok);
}

TEST_CASE("cli countermodel") {
  auto r = run({"countermodel", "--system", "mi", "--formula",
                "((p->q)->p)->p", "--max-worlds", "3", "--json"});
  CHECK(r.code == 1);
  json doc = json::parse(r.out);
  CHECK(doc["refuted_at"] == 0);
  CHECK(doc["semilattice"]["size"] == 3);

  auto ok = run({"countermodel", "--system", "mi", "--formula", "p -> p",
                 "--max-worlds", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("no countermodel") != std::string::npos);
}

TEST_CASE("cli validate-frame and roundtrip") {
  TempFile f("model.json", chain3_box_json());
  auto r = run({"validate-frame", "--file", f.path});
  CHECK(r.code == 0);

  json bad = json::parse(chain3_box_json());
  bad["R"] = json::array({{2, 0}});
  TempFile g("bad.json", bad.dump());
  auto rb = run({"validate-frame", "--file", g.path});
  CHECK(rb.code == 1);

  json islo = json::parse(R"({"size":3,"top":2,"leq":[[0,1],[1,2],[0,2]],
                              "box":[0,1,2]})");
  TempFile h("islo.json", islo.dump());
  auto rt = run({"roundtrip", "--islo", h.path, "--json"});
  CHECK(rt.code == 0);
  CHECK(json::parse(rt.out)["iso"] == true);

  auto rt2 = run({"roundtrip", "--frame", f.path});
  CHECK(rt2.code == 0);

  auto dual = run({"dualize", "--islo", h.path});
  CHECK(dual.code == 0);
  Model dm = model_from_json(json::parse(dual.out));
  CHECK(dm.frame.kind == FrameKind::Box);
}

TEST_CASE("cli filter-extension and equiv") {
  TempFile f("model.json", chain3_box_json());
  auto r = run({"filter-extension", "--file", f.path, "--json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["eta"].size() == 3);
  Model em = model_from_json(doc["extension"]);
  CHECK(em.frame.size() == 3);

  auto eq = run({"equiv", "--file", f.path, "--state", "1", "--state2", "1",
                 "--depth", "2", "--max-worlds", "4", "--json"});
  CHECK(eq.code == 0);
  json edoc = json::parse(eq.out);
  CHECK(edoc["logical"] == true);
  CHECK(edoc["behavioural"] == true);

  auto ne = run({"equiv", "--file", f.path, "--state", "0", "--state2", "2",
                 "--depth", "2", "--max-worlds", "4"});
  CHECK(ne.code == 1);
}

TEST_CASE("cli probe-conservativity") {
  auto r = run({"probe-conservativity", "--formula", "((p->q)->p)->p",
                "--max-worlds", "3", "--json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["agreement"] == true);
  CHECK(doc["i_refuted"] == true);
  CHECK(doc["box_refuted"] == true);

  auto bad = run({"probe-conservativity", "--formula", "[]p"});
  CHECK(bad.code == 2);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"countermodel"}).code == 2);  // missing --formula
  CHECK(run({"dualize", "--islo", "a", "--frame", "b"}).code == 2);
  CHECK(run({"check-proof", "--system", "mi", "--file", "missing.json"}).code ==
        2);
}
