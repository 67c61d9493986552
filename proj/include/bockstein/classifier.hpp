#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bockstein/dimtype.hpp"
#include "bockstein/theorems.hpp"

namespace bockstein {

// A stable-intersection question: covering dimensions of X, Y and X x Y,
// and the ambient Euclidean dimension n.
struct IntersectionQuery {
  unsigned dim_x = 0;
  unsigned dim_y = 0;
  unsigned dim_xy = 0;
  unsigned n = 1;

  // Classical product bounds max <= dim_xy <= sum, plus n >= 1.
  bool feasible() const;
};

enum class Outcome : std::uint8_t { stable, no_stable, open, infeasible };

enum class TheoremTag : std::uint8_t {
  dranishnikov_west,  // dim X x Y >= n forces a stable intersection
  complementary,      // 2 dim X + dim Y <= 2n-2 (either ordering)
  codim3,             // both factors of codimension >= 3
  main_n6,            // both factors <= n-2 and n >= 6
  aggregate,          // covered only by the blanket case analysis
};

const char* outcome_name(Outcome o);          // "stable", "no-stable", ...
const char* theorem_tag_name(TheoremTag t);   // "DranishnikovWest", ...

struct Verdict {
  Outcome outcome = Outcome::infeasible;
  std::vector<TheoremTag> attribution;  // fixed order, see classify
  std::string note;
};

// Decides the stable-intersection status of a query.
//   dim_xy >= n                   -> Stable [DranishnikovWest]
//   (3,3,4,5)                     -> Open (no attribution)
//   otherwise                     -> NoStable, attributed to every named
//     hypothesis that holds, in the order [Complementary, Codim3, MainN6];
//     Aggregate alone when none of them does.
// Infeasible queries yield an Infeasible verdict, never an exception.
Verdict classify(const IntersectionQuery& q);

struct TypedClassification {
  Verdict verdict;
  IntersectionQuery dims;  // dim_x, dim_y, dim_xy computed from the types
};

// Computes dim X, dim Y and dim(X x Y) from the given dimension types
// (the product type is the boxplus) and delegates to classify.
TypedClassification classify_types(const DimensionType& dx,
                                   const DimensionType& dy, unsigned n);

// dim X^2 < 2 dim X. Requires dim_x <= dim_xx <= 2 dim_x (RangeViolation).
bool is_boltyanskii(unsigned dim_x, unsigned dim_xx);

enum class Embeddability : std::uint8_t { yes, no, open, infeasible };

// Whether every map X -> R^ambient is approximable by embeddings, i.e.
// whether X admits no stable self-intersection there. Stated only for even
// ambient >= 2 (OddAmbient otherwise); the open case passes through.
Embeddability embeddings_dense(unsigned dim_x, unsigned dim_xx, unsigned ambient);

struct RealizabilityWitness {
  DimensionType x;
  DimensionType y;
};

// Searches the universe for a pair (DX, DY) with dim DX = dim_x,
// dim DY = dim_y and dim(DX [+] DY) = dim_xy; returns the first witness in
// enumeration order (DX-major), or nullopt when none exists.
std::optional<RealizabilityWitness> tuple_realizable(unsigned dim_x,
                                                     unsigned dim_y,
                                                     unsigned dim_xy,
                                                     const UniverseConfig& cfg);

struct AtlasRow {
  IntersectionQuery q;
  Verdict verdict;
};

// All feasible tuples with 0 <= dim_x <= dim_y <= max_n,
// max <= dim_xy <= sum and 1 <= n <= max_n, classified, in lexicographic
// (dim_x, dim_y, dim_xy, n) order.
std::vector<AtlasRow> build_atlas(unsigned max_n);

}  // namespace bockstein
