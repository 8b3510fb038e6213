#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/errors.hpp"

namespace hosoya {

/// Exact positive fraction. Deliberately NOT reduced: convergent
/// numerators and denominators need not be coprime and the index
/// identities depend on the unreduced numerator.
struct Rational {
  Int num;
  Int den;

  Rational(Int numerator, Int denominator);

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// r brought to lowest terms. Never applied implicitly.
Rational reduced(const Rational& r);

/// One level of a generalized continued fraction: the pair (b_i, a_i) in
/// a0 + b1/(a1 + b2/(a2 + ...)).
struct CfTerm {
  Int b;
  Int a;

  friend bool operator==(const CfTerm&, const CfTerm&) = default;
};

/// Finite generalized continued fraction with positive integer entries.
/// An empty term list is the plain integer a0.
struct GeneralizedCF {
  Int a0;
  std::vector<CfTerm> terms;

  GeneralizedCF(Int a0, std::vector<CfTerm> terms = {});

  friend bool operator==(const GeneralizedCF&, const GeneralizedCF&) = default;
};

/// Convergents p_k/q_k for k = 0..n via p_k = a_k p_{k-1} + b_k p_{k-2},
/// q_k likewise, seeded p_0 = a_0, p_1 = a_0 a_1 + b_1, q_0 = 1, q_1 = a_1.
/// Results are unreduced.
std::vector<Rational> convergents(const GeneralizedCF& cf);

/// The last convergent, unreduced.
Rational evaluate(const GeneralizedCF& cf);

/// Euclidean simple continued fraction expansion of r. All entries after
/// the first are >= 1 and the last is >= 2 unless the expansion is a
/// single integer; the leading entry is 0 when r < 1.
std::vector<Int> simple_cf_expand(const Rational& r);

/// Simple expansion [a0; a1, ...] as a GeneralizedCF with every b_i = 1.
/// Requires a0 >= 1.
GeneralizedCF simple_to_cf(const std::vector<Int>& digits);

/// Folds the last k+1 term pairs into a single pair (b', a') where
/// b'/a' is the unreduced value of b_{n-k} over the evaluated tail.
/// Preserves evaluate() exactly, including the unreduced numerator.
/// Requires 1 <= k < terms.size().
GeneralizedCF contract_tail(const GeneralizedCF& cf, std::size_t k);

/// Literal grammar: `[a0]` or `[a0; b1/a1, b2/a2, ...]`, whitespace
/// insensitive. Throws ParseError with a character offset.
GeneralizedCF parse_cf(std::string_view text);
std::string format_cf(const GeneralizedCF& cf);

}  // namespace hosoya
