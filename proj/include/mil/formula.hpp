#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mil {

// Connectives of the meet-implication language plus the two modal operators.
enum class Conn : std::uint8_t { Top, Letter, And, Imp, Box, Mon };

// Immutable formula tree with value semantics. Nodes are shared, never
// mutated; equality and ordering are structural.
class Formula {
public:
  Formula();  // defaults to Top

  static Formula top();
  static Formula letter(std::string name);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula box(Formula body);
  static Formula mon(Formula body);
  // (f -> g) & (g -> f)
  static Formula iff(const Formula& f, const Formula& g);

  Conn conn() const;
  bool is(Conn c) const { return conn() == c; }
  const std::string& letter_name() const;
  const Formula& lhs() const;   // And, Imp
  const Formula& rhs() const;   // And, Imp
  const Formula& body() const;  // Box, Mon

  std::size_t hash() const;
  int height() const;       // atoms have height 0
  int modal_depth() const;  // nesting depth of Box/Mon

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }
  bool operator<(const Formula& other) const;  // structural total order

  // Sorted, duplicate-free letter names occurring in the formula.
  std::vector<std::string> letters() const;
  bool has_modality() const;

  struct Node;

private:
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

using Substitution = std::map<std::string, Formula>;

// Replaces every letter in the domain of `sub`; other letters are untouched.
Formula apply_substitution(const Substitution& sub, const Formula& f);

// First-order matching: finds the unique s with apply_substitution(s, schema)
// == candidate, treating every letter of the schema as a metavariable.
std::optional<Substitution> match_schema(const Formula& schema,
                                         const Formula& candidate);

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Grammar:
//   formula := imp
//   imp     := conj ("->" imp)?
//   conj    := unary ("&" unary)*
//   unary   := "[]" unary | "<m>" unary | "T" | ident | "(" formula ")"
//   ident   := [a-z][a-zA-Z0-9_]*
// "->" is right-associative and binds loosest, "&" is left-associative,
// "[]" and "<m>" bind tightest. Whitespace is insignificant.
Formula parse(std::string_view text);

// Minimal-parentheses rendering; parse(print(f)) == f.
std::string print(const Formula& f);

// All formulas over the given letters (plus T) of height <= max_height,
// in a deterministic order (by height, then construction order).
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& letters,
                                        int max_height, bool with_box,
                                        bool with_mon);

}  // namespace mil
