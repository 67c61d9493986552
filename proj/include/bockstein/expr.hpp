#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "bockstein/dimtype.hpp"
#include "bockstein/groups.hpp"

namespace bockstein {

// Expression grammar (whitespace-insensitive):
//
//   query   := 'dim(' expr ')' | 'le(' expr ',' expr ')'
//            | 'ev(' expr ',' group ')' | expr
//   expr    := typeLit
//            | 'prod(' expr ',' expr ')'   | 'osum(' expr ',' expr ')'
//            | 'ominus(' NAT ',' expr ')'  | 'add(' expr ',' NAT ')'
//            | 'union(' expr ',' expr ')'
//   typeLit := '{' '0' ':' NAT (',' NAT ':' DEC)* (',' '*' ':' DEC)? '}'
//   DEC     := NAT ('+' | '-')?
//   group   := term ('+' term)*
//   term    := atom ('^' NAT)?
//   atom    := 'Z' | 'Q' | 'Z/' NAT | 'Zloc(' PRIME ')' | 'Zinf(' PRIME ')'
//
// The glyphs for the three type operations are accepted as aliases of
// prod/osum/ominus. Type-literal validation (prime keys, decorations, the
// regularity and zero rules) is deferred to evaluation and reported with
// the offending key; an omitted '*' entry means the regular default.

class Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct TypeLitNode {
  unsigned at_zero = 0;
  std::vector<RawEntry> entries;
  std::optional<RawDecorated> dflt;
};
struct ProdNode {
  ExprPtr lhs, rhs;
};
struct OsumNode {
  ExprPtr lhs, rhs;
};
struct UnionNode {
  ExprPtr lhs, rhs;
};
struct OminusNode {
  unsigned bound = 0;
  ExprPtr arg;
};
struct AddNode {
  ExprPtr arg;
  unsigned amount = 0;
};

class Expr {
 public:
  using Node = std::variant<TypeLitNode, ProdNode, OsumNode, UnionNode,
                            OminusNode, AddNode>;

  Expr(Node node, std::size_t pos) : node_(std::move(node)), pos_(pos) {}

  const Node& node() const { return node_; }
  std::size_t pos() const { return pos_; }

 private:
  Node node_;
  std::size_t pos_;
};

struct DimQuery {
  ExprPtr arg;
};
struct LeQuery {
  ExprPtr lhs, rhs;
};
struct EvQuery {
  ExprPtr arg;
  GroupExpr group;
};
struct ExprQuery {
  ExprPtr arg;
};

using Query = std::variant<DimQuery, LeQuery, EvQuery, ExprQuery>;

// Parse a full query; the whole input must be consumed. Throws ParseError.
Query parse_query(std::string_view text);

// Parse and evaluate a single type literal. Throws ParseError on syntax and
// ValidationError on literal-rule failures.
DimensionType parse_type_literal(std::string_view text);

// Parse a group expression (whole input). Throws ParseError.
GroupExpr parse_group(std::string_view text);

using EvalValue = std::variant<DimensionType, unsigned, bool>;

// Evaluate a parsed query. Validation and precondition failures are
// rethrown as EvalError carrying the offset of the failing sub-expression.
EvalValue evaluate(const Query& q);

}  // namespace bockstein
