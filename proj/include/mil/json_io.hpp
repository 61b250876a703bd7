#pragma once

#include <string>

#include "json.hpp"
#include "mil/duality.hpp"
#include "mil/equational.hpp"
#include "mil/hilbert.hpp"
#include "mil/order.hpp"
#include "mil/search.hpp"
#include "mil/semantics.hpp"

namespace mil {

struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"size": n, "top": t, "leq": [[i,j],...]} — reflexive pairs optional,
// transitivity and antisymmetry verified by the loader.
nlohmann::json semilattice_to_json(const FiniteSemilattice& sl);
FiniteSemilattice semilattice_from_json(const nlohmann::json& j);

// {"semilattice": {...}, "kind": "i"|"box"|"mon", "R": [[i,j],...],
//  "nbhd": [[ [element indices], ...] per world],
//  "valuation": {"p": [indices], ...}}
nlohmann::json model_to_json(const Model& m);
Model model_from_json(const nlohmann::json& j);

// Semilattice fields plus "box": [indices] or "mon": [indices].
nlohmann::json islo_to_json(const Islo& a);
Islo islo_from_json(const nlohmann::json& j);
nlohmann::json mon_algebra_to_json(const MonAlgebra& a);
MonAlgebra mon_algebra_from_json(const nlohmann::json& j);

// {"rule": "ass"|"ax"|"mp"|"cong", "ctx": [...], "concl": "...",
//  "axiom": "H1".."H6"|"B1"|"B2"|"M1", "sub": {letter: formula},
//  "kids": [...]}
nlohmann::json proof_to_json(const Proof& p);
Proof proof_from_json(const nlohmann::json& j);

// Same shape with rule tags "e1".."e4", "ref", "sym", "trans", "cong&",
// "cong->", "res_up", "res_down" and "concl": "lhs = rhs".
nlohmann::json eq_proof_to_json(const EqProof& p);
EqProof eq_proof_from_json(const nlohmann::json& j);

nlohmann::json countermodel_to_json(const Countermodel& cm);

nlohmann::json load_json_file(const std::string& path);

}  // namespace mil
