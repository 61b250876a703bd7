#include "mil/formula.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>
#include <sstream>

namespace mil {

struct Formula::Node {
  Conn conn;
  std::string name;                  // Letter only
  std::shared_ptr<const Node> a, b;  // children
  std::size_t hash = 0;
  int height = 0;
  int modal_depth = 0;
};

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::shared_ptr<const Formula::Node> the_top() {
  static const auto node = [] {
    auto n = std::make_shared<Formula::Node>();
    n->conn = Conn::Top;
    n->hash = 0x7055;
    return n;
  }();
  return node;
}

}  // namespace

Formula::Formula() : node_(the_top()) {}
Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::top() { return Formula(the_top()); }

Formula Formula::letter(std::string name) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::Letter;
  n->name = std::move(name);
  n->hash = combine(0x1e77, std::hash<std::string>{}(n->name));
  return Formula(std::move(n));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::And;
  n->a = lhs.node_;
  n->b = rhs.node_;
  n->height = 1 + std::max(n->a->height, n->b->height);
  n->modal_depth = std::max(n->a->modal_depth, n->b->modal_depth);
  n->hash = combine(combine(0xA11D, n->a->hash), n->b->hash);
  return Formula(std::move(n));
}

Formula Formula::imp(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::Imp;
  n->a = lhs.node_;
  n->b = rhs.node_;
  n->height = 1 + std::max(n->a->height, n->b->height);
  n->modal_depth = std::max(n->a->modal_depth, n->b->modal_depth);
  n->hash = combine(combine(0x1111, n->a->hash), n->b->hash);
  return Formula(std::move(n));
}

Formula Formula::box(Formula body) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::Box;
  n->a = body.node_;
  n->height = 1 + n->a->height;
  n->modal_depth = 1 + n->a->modal_depth;
  n->hash = combine(0xB0F0, n->a->hash);
  return Formula(std::move(n));
}

Formula Formula::mon(Formula body) {
  auto n = std::make_shared<Node>();
  n->conn = Conn::Mon;
  n->a = body.node_;
  n->height = 1 + n->a->height;
  n->modal_depth = 1 + n->a->modal_depth;
  n->hash = combine(0x5050, n->a->hash);
  return Formula(std::move(n));
}

Formula Formula::iff(const Formula& f, const Formula& g) {
  return conj(imp(f, g), imp(g, f));
}

Conn Formula::conn() const { return node_->conn; }

const std::string& Formula::letter_name() const {
  assert(node_->conn == Conn::Letter);
  return node_->name;
}

const Formula& Formula::lhs() const {
  assert(node_->conn == Conn::And || node_->conn == Conn::Imp);
  // Safe: Formula is layout-compatible with its single shared_ptr member.
  return reinterpret_cast<const Formula&>(node_->a);
}

const Formula& Formula::rhs() const {
  assert(node_->conn == Conn::And || node_->conn == Conn::Imp);
  return reinterpret_cast<const Formula&>(node_->b);
}

const Formula& Formula::body() const {
  assert(node_->conn == Conn::Box || node_->conn == Conn::Mon);
  return reinterpret_cast<const Formula&>(node_->a);
}

std::size_t Formula::hash() const { return node_->hash; }
int Formula::height() const { return node_->height; }
int Formula::modal_depth() const { return node_->modal_depth; }

bool Formula::operator==(const Formula& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->conn != y->conn) return false;
  switch (x->conn) {
    case Conn::Top:
      return true;
    case Conn::Letter:
      return x->name == y->name;
    case Conn::And:
    case Conn::Imp:
      return lhs() == other.lhs() && rhs() == other.rhs();
    case Conn::Box:
    case Conn::Mon:
      return body() == other.body();
  }
  return false;
}

bool Formula::operator<(const Formula& other) const {
  if (node_.get() == other.node_.get()) return false;
  if (conn() != other.conn()) return conn() < other.conn();
  switch (conn()) {
    case Conn::Top:
      return false;
    case Conn::Letter:
      return letter_name() < other.letter_name();
    case Conn::And:
    case Conn::Imp:
      if (lhs() < other.lhs()) return true;
      if (other.lhs() < lhs()) return false;
      return rhs() < other.rhs();
    case Conn::Box:
    case Conn::Mon:
      return body() < other.body();
  }
  return false;
}

static void collect_letters(const Formula& f, std::set<std::string>& out) {
  switch (f.conn()) {
    case Conn::Top:
      return;
    case Conn::Letter:
      out.insert(f.letter_name());
      return;
    case Conn::And:
    case Conn::Imp:
      collect_letters(f.lhs(), out);
      collect_letters(f.rhs(), out);
      return;
    case Conn::Box:
    case Conn::Mon:
      collect_letters(f.body(), out);
      return;
  }
}

std::vector<std::string> Formula::letters() const {
  std::set<std::string> s;
  collect_letters(*this, s);
  return {s.begin(), s.end()};
}

bool Formula::has_modality() const { return modal_depth() > 0; }

Formula apply_substitution(const Substitution& sub, const Formula& f) {
  switch (f.conn()) {
    case Conn::Top:
      return f;
    case Conn::Letter: {
      auto it = sub.find(f.letter_name());
      return it == sub.end() ? f : it->second;
    }
    case Conn::And:
      return Formula::conj(apply_substitution(sub, f.lhs()),
                           apply_substitution(sub, f.rhs()));
    case Conn::Imp:
      return Formula::imp(apply_substitution(sub, f.lhs()),
                          apply_substitution(sub, f.rhs()));
    case Conn::Box:
      return Formula::box(apply_substitution(sub, f.body()));
    case Conn::Mon:
      return Formula::mon(apply_substitution(sub, f.body()));
  }
  return f;
}

static bool match_rec(const Formula& schema, const Formula& cand,
                      Substitution& sub) {
  switch (schema.conn()) {
    case Conn::Top:
      return cand.is(Conn::Top);
    case Conn::Letter: {
      auto [it, inserted] = sub.emplace(schema.letter_name(), cand);
      return inserted ? true : it->second == cand;
    }
    case Conn::And:
    case Conn::Imp:
      return cand.conn() == schema.conn() &&
             match_rec(schema.lhs(), cand.lhs(), sub) &&
             match_rec(schema.rhs(), cand.rhs(), sub);
    case Conn::Box:
    case Conn::Mon:
      return cand.conn() == schema.conn() &&
             match_rec(schema.body(), cand.body(), sub);
  }
  return false;
}

std::optional<Substitution> match_schema(const Formula& schema,
                                         const Formula& candidate) {
  Substitution sub;
  if (match_rec(schema, candidate, sub)) return sub;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Top, Ident, Amp, Arrow, Box, Mon, LParen, RParen, End };

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  Tok tok = Tok::End;
  std::string ident;
  std::size_t tok_pos = 0;

  explicit Lexer(std::string_view t) : text(t) { advance(); }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError(msg, at);
  }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::End;
      return;
    }
    char c = text[pos];
    switch (c) {
      case '&':
        pos++;
        tok = Tok::Amp;
        return;
      case '(':
        pos++;
        tok = Tok::LParen;
        return;
      case ')':
        pos++;
        tok = Tok::RParen;
        return;
      case '-':
        if (pos + 1 < text.size() && text[pos + 1] == '>') {
          pos += 2;
          tok = Tok::Arrow;
          return;
        }
        fail("expected '->'", pos);
      case '[':
        if (pos + 1 < text.size() && text[pos + 1] == ']') {
          pos += 2;
          tok = Tok::Box;
          return;
        }
        fail("expected '[]'", pos);
      case '<':
        if (pos + 2 < text.size() && text[pos + 1] == 'm' && text[pos + 2] == '>') {
          pos += 3;
          tok = Tok::Mon;
          return;
        }
        fail("expected '<m>'", pos);
      case 'T':
        pos++;
        tok = Tok::Top;
        return;
      default:
        break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos;
      pos++;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        pos++;
      ident.assign(text.substr(start, pos - start));
      tok = Tok::Ident;
      return;
    }
    fail(std::string("unexpected character '") + c + "'", pos);
  }
};

struct Parser {
  Lexer lx;

  explicit Parser(std::string_view t) : lx(t) {}

  Formula parse_formula() { return parse_imp(); }

  Formula parse_imp() {
    Formula left = parse_conj();
    if (lx.tok == Tok::Arrow) {
      lx.advance();
      return Formula::imp(std::move(left), parse_imp());
    }
    return left;
  }

  Formula parse_conj() {
    Formula acc = parse_unary();
    while (lx.tok == Tok::Amp) {
      lx.advance();
      acc = Formula::conj(std::move(acc), parse_unary());
    }
    return acc;
  }

  Formula parse_unary() {
    switch (lx.tok) {
      case Tok::Box:
        lx.advance();
        return Formula::box(parse_unary());
      case Tok::Mon:
        lx.advance();
        return Formula::mon(parse_unary());
      case Tok::Top:
        lx.advance();
        return Formula::top();
      case Tok::Ident: {
        Formula f = Formula::letter(lx.ident);
        lx.advance();
        return f;
      }
      case Tok::LParen: {
        lx.advance();
        Formula f = parse_imp();
        if (lx.tok != Tok::RParen) lx.fail("expected ')'", lx.tok_pos);
        lx.advance();
        return f;
      }
      default:
        lx.fail("expected a formula", lx.tok_pos);
    }
  }
};

}  // namespace

Formula parse(std::string_view text) {
  Parser p(text);
  Formula f = p.parse_formula();
  if (p.lx.tok != Tok::End) p.lx.fail("trailing input", p.lx.tok_pos);
  return f;
}

// Precedence levels: 0 = imp position, 1 = conj position, 2 = unary position.
static void render(const Formula& f, int level, std::string& out) {
  switch (f.conn()) {
    case Conn::Top:
      out += 'T';
      return;
    case Conn::Letter:
      out += f.letter_name();
      return;
    case Conn::Imp: {
      bool paren = level > 0;
      if (paren) out += '(';
      render(f.lhs(), 1, out);
      out += " -> ";
      render(f.rhs(), 0, out);
      if (paren) out += ')';
      return;
    }
    case Conn::And: {
      bool paren = level > 1;
      if (paren) out += '(';
      render(f.lhs(), 1, out);
      out += " & ";
      render(f.rhs(), 2, out);
      if (paren) out += ')';
      return;
    }
    case Conn::Box:
      out += "[]";
      render(f.body(), 2, out);
      return;
    case Conn::Mon:
      out += "<m>";
      render(f.body(), 2, out);
      return;
  }
}

std::string print(const Formula& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& letters,
                                        int max_height, bool with_box,
                                        bool with_mon) {
  std::vector<Formula> pool;
  pool.push_back(Formula::top());
  for (const auto& l : letters) pool.push_back(Formula::letter(l));
  std::size_t prev_start = 0;
  for (int h = 1; h <= max_height; h++) {
    std::size_t level_end = pool.size();
    std::vector<Formula> fresh;
    // Binary nodes need at least one child of the previous height to be new.
    for (std::size_t i = 0; i < level_end; i++) {
      for (std::size_t j = 0; j < level_end; j++) {
        if (i < prev_start && j < prev_start) continue;
        fresh.push_back(Formula::conj(pool[i], pool[j]));
        fresh.push_back(Formula::imp(pool[i], pool[j]));
      }
    }
    for (std::size_t i = prev_start; i < level_end; i++) {
      if (with_box) fresh.push_back(Formula::box(pool[i]));
      if (with_mon) fresh.push_back(Formula::mon(pool[i]));
    }
    prev_start = level_end;
    pool.insert(pool.end(), fresh.begin(), fresh.end());
  }
  return pool;
}

}  // namespace mil
