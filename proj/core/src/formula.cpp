#include "propalg/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_map>

#include "propalg/error.hpp"

namespace propalg {

NodePtr make_const(bool value) {
  return std::make_shared<const FormulaNode>(FormulaNode{NodeKind::kConst, value, 0, nullptr, nullptr});
}

NodePtr make_var(unsigned r) {
  if (r == 0) throw ArgumentError("variable indices start at 1");
  return std::make_shared<const FormulaNode>(FormulaNode{NodeKind::kVar, false, r, nullptr, nullptr});
}

NodePtr make_not(NodePtr operand) {
  return std::make_shared<const FormulaNode>(
      FormulaNode{NodeKind::kNot, false, 0, std::move(operand), nullptr});
}

NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs) {
  if (kind == NodeKind::kConst || kind == NodeKind::kVar || kind == NodeKind::kNot) {
    throw ArgumentError("make_binary needs a binary operator");
  }
  return std::make_shared<const FormulaNode>(
      FormulaNode{kind, false, 0, std::move(lhs), std::move(rhs)});
}

bool same_tree(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case NodeKind::kConst: return a->value == b->value;
    case NodeKind::kVar: return a->var == b->var;
    case NodeKind::kNot: return same_tree(a->lhs, b->lhs);
    default: return same_tree(a->lhs, b->lhs) && same_tree(a->rhs, b->rhs);
  }
}

namespace {

unsigned max_var(const NodePtr& node) {
  switch (node->kind) {
    case NodeKind::kConst: return 0;
    case NodeKind::kVar: return node->var;
    case NodeKind::kNot: return max_var(node->lhs);
    default: return std::max(max_var(node->lhs), max_var(node->rhs));
  }
}

int precedence(NodeKind kind) {
  switch (kind) {
    case NodeKind::kImplies: return 1;
    case NodeKind::kOr:
    case NodeKind::kXor: return 2;
    case NodeKind::kAnd: return 3;
    case NodeKind::kNot: return 4;
    default: return 5;
  }
}

const char* symbol(NodeKind kind) {
  switch (kind) {
    case NodeKind::kAnd: return " & ";
    case NodeKind::kOr: return " | ";
    case NodeKind::kXor: return " ^ ";
    case NodeKind::kImplies: return " -> ";
    default: return "";
  }
}

class Printer {
 public:
  explicit Printer(const std::vector<std::string>& names) : names_(names) {}

  std::string print(const NodePtr& node) const {
    switch (node->kind) {
      case NodeKind::kConst: return node->value ? "1" : "0";
      case NodeKind::kVar:
        return names_.empty() ? "a" + std::to_string(node->var) : names_[node->var - 1];
      case NodeKind::kNot: {
        const bool wrap = precedence(node->lhs->kind) < precedence(NodeKind::kNot);
        return "!" + paren(print(node->lhs), wrap);
      }
      default: break;
    }
    const int p = precedence(node->kind);
    const int pl = precedence(node->lhs->kind);
    const int pr = precedence(node->rhs->kind);
    const bool right_assoc = node->kind == NodeKind::kImplies;
    // Left-assoc chains keep the left operand bare; `|` and `^` never mix
    // without parentheses.
    const bool wrap_l = pl < p || (pl == p && (right_assoc || node->lhs->kind != node->kind));
    const bool wrap_r = pr < p || (pr == p && !right_assoc);
    return paren(print(node->lhs), wrap_l) + symbol(node->kind) + paren(print(node->rhs), wrap_r);
  }

 private:
  static std::string paren(std::string s, bool wrap) { return wrap ? "(" + s + ")" : s; }

  const std::vector<std::string>& names_;
};

enum class Tok { kLParen, kRParen, kNot, kAnd, kOr, kXor, kImplies, kZero, kOne, kIdent, kEnd };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;
};

class Parser {
 public:
  Parser(std::string_view src, std::optional<unsigned> n) : src_(src), declared_(n) { advance(); }

  FormulaAst parse() {
    NodePtr root = implication();
    if (cur_.kind != Tok::kEnd) fail("unexpected '" + std::string(cur_.text) + "'");
    // resolve() already rejected indices beyond a declared n.
    const unsigned n = declared_ ? *declared_
                                 : std::max({1u, max_var(root), static_cast<unsigned>(names_.size())});
    check_var_count(n);
    return FormulaAst(std::move(root), n, names_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t column = 0) const {
    const std::size_t col = column ? column : cur_.column;
    throw ParseError("column " + std::to_string(col) + ": " + msg, col);
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    const std::size_t column = start + 1;
    if (pos_ >= src_.size()) {
      cur_ = {Tok::kEnd, "end of input", column};
      return;
    }
    const char c = src_[pos_];
    auto single = [&](Tok kind) {
      ++pos_;
      cur_ = {kind, src_.substr(start, 1), column};
    };
    switch (c) {
      case '(': return single(Tok::kLParen);
      case ')': return single(Tok::kRParen);
      case '!': return single(Tok::kNot);
      case '&': return single(Tok::kAnd);
      case '|': return single(Tok::kOr);
      case '^': return single(Tok::kXor);
      default: break;
    }
    if (c == '-') {
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        pos_ += 2;
        cur_ = {Tok::kImplies, src_.substr(start, 2), column};
        return;
      }
      fail("expected '->'", column);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const auto text = src_.substr(start, pos_ - start);
      if (text == "0") cur_ = {Tok::kZero, text, column};
      else if (text == "1") cur_ = {Tok::kOne, text, column};
      else fail("invalid constant '" + std::string(text) + "'", column);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      cur_ = {Tok::kIdent, src_.substr(start, pos_ - start), column};
      return;
    }
    fail(std::string("unexpected character '") + c + "'", column);
  }

  NodePtr implication() {
    NodePtr lhs = disjunction();
    if (cur_.kind != Tok::kImplies) return lhs;
    advance();
    return make_binary(NodeKind::kImplies, std::move(lhs), implication());
  }

  NodePtr disjunction() {
    NodePtr lhs = conjunction();
    std::optional<Tok> op;
    while (cur_.kind == Tok::kOr || cur_.kind == Tok::kXor) {
      if (op && *op != cur_.kind) fail("mixing '|' and '^' requires parentheses");
      op = cur_.kind;
      advance();
      lhs = make_binary(*op == Tok::kOr ? NodeKind::kOr : NodeKind::kXor, std::move(lhs),
                        conjunction());
    }
    return lhs;
  }

  NodePtr conjunction() {
    NodePtr lhs = unary();
    while (cur_.kind == Tok::kAnd) {
      advance();
      lhs = make_binary(NodeKind::kAnd, std::move(lhs), unary());
    }
    return lhs;
  }

  NodePtr unary() {
    if (cur_.kind == Tok::kNot) {
      advance();
      return make_not(unary());
    }
    return atom();
  }

  NodePtr atom() {
    switch (cur_.kind) {
      case Tok::kZero: advance(); return make_const(false);
      case Tok::kOne: advance(); return make_const(true);
      case Tok::kIdent: {
        NodePtr v = make_var(resolve(cur_));
        advance();
        return v;
      }
      case Tok::kLParen: {
        const std::size_t open = cur_.column;
        advance();
        NodePtr inner = implication();
        if (cur_.kind != Tok::kRParen) {
          fail("missing ')' for '(' at column " + std::to_string(open));
        }
        advance();
        return inner;
      }
      case Tok::kEnd: fail("unexpected end of input");
      default: fail("unexpected '" + std::string(cur_.text) + "'");
    }
  }

  static bool is_explicit(std::string_view id) {
    return id.size() >= 2 && id[0] == 'a' &&
           std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; });
  }

  unsigned resolve(const Token& tok) {
    const bool explicit_style = is_explicit(tok.text);
    if ((explicit_style && !names_.empty()) || (!explicit_style && saw_explicit_)) {
      fail("cannot mix a<k> variables with bare identifiers", tok.column);
    }
    if (!explicit_style) {
      const std::string name(tok.text);
      if (auto it = bare_.find(name); it != bare_.end()) return it->second;
      names_.push_back(name);
      const auto r = static_cast<unsigned>(names_.size());
      if (declared_ && r > *declared_) {
        fail("identifier '" + name + "' exceeds n=" + std::to_string(*declared_), tok.column);
      }
      bare_.emplace(name, r);
      return r;
    }
    saw_explicit_ = true;
    unsigned r = 0;
    const auto digits = tok.text.substr(1);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || r == 0) {
      fail("variable '" + std::string(tok.text) + "' out of range", tok.column);
    }
    const unsigned limit = declared_ ? *declared_ : kMaxVarsCeiling;
    if (r > limit) {
      fail("variable '" + std::string(tok.text) + "' out of range 1.." + std::to_string(limit),
           tok.column);
    }
    return r;
  }

  std::string_view src_;
  std::optional<unsigned> declared_;
  std::size_t pos_ = 0;
  Token cur_{Tok::kEnd, {}, 1};
  bool saw_explicit_ = false;
  std::vector<std::string> names_;
  std::unordered_map<std::string, unsigned> bare_;
};

BoolFunc eval_node(const NodePtr& node, unsigned n) {
  switch (node->kind) {
    case NodeKind::kConst: return node->value ? BoolFunc::one(n) : BoolFunc::zero(n);
    case NodeKind::kVar: return BoolFunc::var(n, node->var);
    case NodeKind::kNot: return neg(eval_node(node->lhs, n));
    case NodeKind::kAnd: return mul(eval_node(node->lhs, n), eval_node(node->rhs, n));
    case NodeKind::kOr: return lor(eval_node(node->lhs, n), eval_node(node->rhs, n));
    case NodeKind::kXor: return add(eval_node(node->lhs, n), eval_node(node->rhs, n));
    case NodeKind::kImplies: return lor(neg(eval_node(node->lhs, n)), eval_node(node->rhs, n));
  }
  throw std::logic_error("unknown node kind");
}

NodePtr flip_node(const NodePtr& node, const FlipMask& s) {
  switch (node->kind) {
    case NodeKind::kConst: return node;
    case NodeKind::kVar: return s.flips(node->var) ? make_not(node) : node;
    case NodeKind::kNot:
      if (node->lhs->kind == NodeKind::kVar && s.flips(node->lhs->var)) return node->lhs;
      return make_not(flip_node(node->lhs, s));
    default: return make_binary(node->kind, flip_node(node->lhs, s), flip_node(node->rhs, s));
  }
}

}  // namespace

FormulaAst::FormulaAst(NodePtr root, unsigned n, std::vector<std::string> names)
    : root_(std::move(root)), n_(n), names_(std::move(names)) {
  if (!root_) throw ArgumentError("formula has no root");
  check_var_count(n_);
  if (max_var(root_) > n_) {
    throw ArgumentError("formula references a variable beyond n=" + std::to_string(n_));
  }
  if (!names_.empty() && names_.size() > n_) {
    throw ArgumentError("more identifier names than variables");
  }
}

std::string FormulaAst::to_string() const { return Printer(names_).print(root_); }

std::string FormulaAst::name_map() const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += " ";
    out += names_[i] + "=a" + std::to_string(i + 1);
  }
  return out;
}

FormulaAst parse_formula(std::string_view text, std::optional<unsigned> n) {
  if (n) check_var_count(*n);
  return Parser(text, n).parse();
}

BoolFunc eval_ast(const FormulaAst& f) { return eval_node(f.root(), f.num_vars()); }

FormulaAst ast_flip(const FormulaAst& f, const FlipMask& s) {
  if (s.num_vars() != f.num_vars()) {
    throw ArgumentError("flip mask and formula have different variable counts");
  }
  if (s.value() == 0) return f;
  return FormulaAst(flip_node(f.root(), s), f.num_vars(), f.names());
}

}  // namespace propalg
