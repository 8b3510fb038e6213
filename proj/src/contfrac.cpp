#include "hosoya/contfrac.hpp"

#include <sstream>
#include <utility>

#include "text_cursor.hpp"

namespace hosoya {

Rational::Rational(Int numerator, Int denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  if (num < 1 || den < 1) {
    throw std::invalid_argument("rational parts must be positive");
  }
}

Rational reduced(const Rational& r) {
  Int g = boost::multiprecision::gcd(r.num, r.den);
  return Rational(r.num / g, r.den / g);
}

GeneralizedCF::GeneralizedCF(Int a0_, std::vector<CfTerm> terms_)
    : a0(std::move(a0_)), terms(std::move(terms_)) {
  if (a0 < 1) {
    throw std::invalid_argument("a0 must be positive");
  }
  for (const CfTerm& t : terms) {
    if (t.a < 1 || t.b < 1) {
      throw std::invalid_argument("partial quotients must be positive");
    }
  }
}

std::vector<Rational> convergents(const GeneralizedCF& cf) {
  std::vector<Rational> out;
  out.reserve(cf.terms.size() + 1);
  out.emplace_back(cf.a0, 1);
  if (cf.terms.empty()) return out;
  out.emplace_back(cf.a0 * cf.terms[0].a + cf.terms[0].b, cf.terms[0].a);
  for (std::size_t k = 2; k <= cf.terms.size(); ++k) {
    const auto& [b, a] = cf.terms[k - 1];
    out.emplace_back(a * out[k - 1].num + b * out[k - 2].num,
                     a * out[k - 1].den + b * out[k - 2].den);
  }
  return out;
}

Rational evaluate(const GeneralizedCF& cf) { return convergents(cf).back(); }

std::vector<Int> simple_cf_expand(const Rational& r) {
  std::vector<Int> out;
  Int p = r.num;
  Int q = r.den;
  // Plain Euclidean division; termination leaves the last quotient >= 2
  // for non-integers.
  while (q != 0) {
    Int a = p / q;
    out.push_back(a);
    Int rem = p - a * q;
    p = q;
    q = rem;
  }
  return out;
}

GeneralizedCF simple_to_cf(const std::vector<Int>& digits) {
  if (digits.empty()) {
    throw std::invalid_argument("empty continued fraction");
  }
  if (digits.front() < 1) {
    throw std::invalid_argument(
        "a0 must be positive; values below 1 have no graph form");
  }
  std::vector<CfTerm> terms;
  terms.reserve(digits.size() - 1);
  for (std::size_t i = 1; i < digits.size(); ++i) {
    terms.push_back(CfTerm{1, digits[i]});
  }
  return GeneralizedCF(digits.front(), std::move(terms));
}

GeneralizedCF contract_tail(const GeneralizedCF& cf, std::size_t k) {
  const std::size_t n = cf.terms.size();
  if (k < 1 || k >= n) {
    throw std::invalid_argument("contraction depth out of range");
  }
  // Fold the last k+1 pairs: evaluate the tail a_{n-k} + b_{n-k+1}/(...)
  // unreduced, then replace with (b_{n-k} * tail.den, tail.num).
  const std::size_t first = n - k - 1;
  std::vector<CfTerm> tail_terms(cf.terms.begin() + first + 1,
                                 cf.terms.end());
  const Rational tail =
      evaluate(GeneralizedCF(cf.terms[first].a, std::move(tail_terms)));
  std::vector<CfTerm> out_terms(cf.terms.begin(), cf.terms.begin() + first);
  out_terms.push_back(CfTerm{cf.terms[first].b * tail.den, tail.num});
  return GeneralizedCF(cf.a0, std::move(out_terms));
}

// ---------------------------------------------------------------------------
// Literal grammar.

GeneralizedCF parse_cf(std::string_view text) {
  detail::TextCursor c{text};
  c.expect('[', "to open the continued fraction");
  Int a0 = c.positive("a0");
  std::vector<CfTerm> terms;
  if (c.eat(';')) {
    do {
      Int b = c.positive("partial numerator");
      c.expect('/', "between numerator and quotient");
      Int a = c.positive("partial quotient");
      terms.push_back(CfTerm{std::move(b), std::move(a)});
    } while (c.eat(','));
  }
  c.expect(']', "to close the continued fraction");
  c.finish();
  return GeneralizedCF(std::move(a0), std::move(terms));
}

std::string format_cf(const GeneralizedCF& cf) {
  std::ostringstream out;
  out << '[' << cf.a0;
  for (std::size_t i = 0; i < cf.terms.size(); ++i) {
    out << (i == 0 ? "; " : ", ") << cf.terms[i].b << '/' << cf.terms[i].a;
  }
  out << ']';
  return out.str();
}

}  // namespace hosoya
