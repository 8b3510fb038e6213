#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/contfrac.hpp"
#include "hosoya/multigraph.hpp"

namespace hosoya {

/// Caterpillar-bond graph spec D_n(x_1..x_n; y_1..y_{n-1}): spine vertex i
/// carries x_i - 1 pendant leaves and spine bond i has order y_i. All
/// entries are positive; x_i = 1 means a bare spine vertex.
struct CaterpillarBondSpec {
  std::vector<Int> x;
  std::vector<Int> y;

  CaterpillarBondSpec(std::vector<Int> x, std::vector<Int> y);

  std::size_t spine_length() const { return x.size(); }

  friend bool operator==(const CaterpillarBondSpec&,
                         const CaterpillarBondSpec&) = default;
};

/// Materializes the spec as a multigraph: spine vertices 0..n-1 followed
/// by the pendant leaves of each spine vertex in order.
Multigraph expand_spec(const CaterpillarBondSpec& s);

/// Z of the expansion in O(n) big-integer steps, by the forward recurrence
/// Z_1 = x_1, Z_2 = x_1 x_2 + y_1, Z_k = x_k Z_{k-1} + y_{k-1} Z_{k-2}.
Int z_fast(const CaterpillarBondSpec& s);

/// The n-by-n tridiagonal determinant with diagonal x, superdiagonal y and
/// subdiagonal -1. Equals z_fast but is evaluated from the head end, so
/// the two routes cross-check each other.
Int continuant(const CaterpillarBondSpec& s);

/// Theorem bridge: x_k = a_{k-1}, y_k = b_k. Mutually inverse;
/// z_fast(spec_from_cf(cf)) equals the numerator of evaluate(cf).
CaterpillarBondSpec spec_from_cf(const GeneralizedCF& cf);
GeneralizedCF cf_from_spec(const CaterpillarBondSpec& s);

/// Head rewrite (x_1 = 2 required):
///   D_n(2, x_2..; y_1..) = D_{n+1}(1, 1, x_2..; 1, y_1..).
CaterpillarBondSpec rewrite_head(const CaterpillarBondSpec& s);

/// Tail rewrite (x_n = 2 required):
///   D_n(.., x_{n-1}, 2; ..) = D_{n+1}(.., x_{n-1}, 1, 1; .., 1).
CaterpillarBondSpec rewrite_tail(const CaterpillarBondSpec& s);

/// Inverses of the two rewrites; the matching (1, 1; 1, ...) pattern must
/// be present at the respective end or std::invalid_argument is thrown.
CaterpillarBondSpec contract_head(const CaterpillarBondSpec& s);
CaterpillarBondSpec contract_tail_spec(const CaterpillarBondSpec& s);

bool contract_head_applies(const CaterpillarBondSpec& s);
bool contract_tail_applies(const CaterpillarBondSpec& s);

/// Flips both sequences; the expansion is isomorphic to the original's.
CaterpillarBondSpec reverse_spec(const CaterpillarBondSpec& s);

/// Applies end contractions to a fixpoint, then returns the
/// lexicographically smaller of the result and its reversal (x before y).
/// A fast pre-filter only: canonical_tree_code stays authoritative for
/// isomorphism classes.
CaterpillarBondSpec canonical_spec(const CaterpillarBondSpec& s);

/// Literal grammar: `D[x1,...,xn; y1,...,y(n-1)]`, `D[x1]` when n = 1,
/// whitespace insensitive.
CaterpillarBondSpec parse_spec(std::string_view text);
std::string format_spec(const CaterpillarBondSpec& s);

}  // namespace hosoya
