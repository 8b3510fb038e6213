#include "hosoya/caterpillar.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "text_cursor.hpp"

namespace hosoya {

CaterpillarBondSpec::CaterpillarBondSpec(std::vector<Int> x_,
                                         std::vector<Int> y_)
    : x(std::move(x_)), y(std::move(y_)) {
  if (x.empty()) {
    throw std::invalid_argument("spine must have at least one vertex");
  }
  if (y.size() + 1 != x.size()) {
    throw std::invalid_argument("need exactly one bond order per spine bond");
  }
  for (const Int& v : x) {
    if (v < 1) throw std::invalid_argument("x entries must be positive");
  }
  for (const Int& v : y) {
    if (v < 1) throw std::invalid_argument("y entries must be positive");
  }
}

Multigraph expand_spec(const CaterpillarBondSpec& s) {
  const std::size_t n = s.spine_length();
  Int total = Int(n);
  for (const Int& xi : s.x) total += xi - 1;
  if (total > std::numeric_limits<int>::max()) {
    throw SizeLimitError("expansion would need " + total.str() + " vertices");
  }
  Multigraph g(static_cast<int>(total));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.add_bond(static_cast<int>(i), static_cast<int>(i + 1), s.y[i]);
  }
  int next = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Int leaf = 1; leaf < s.x[i]; ++leaf) {
      g.add_bond(static_cast<int>(i), next++);
    }
  }
  return g;
}

Int z_fast(const CaterpillarBondSpec& s) {
  Int prev = 1;  // Z_0, the empty graph
  Int cur = s.x[0];
  for (std::size_t k = 1; k < s.x.size(); ++k) {
    Int next = s.x[k] * cur + s.y[k - 1] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Int continuant(const CaterpillarBondSpec& s) {
  // Laplace expansion along the first row, i.e. the recurrence run from
  // the tail: K(x_i..) = x_i K(x_{i+1}..) + y_i K(x_{i+2}..).
  const std::size_t n = s.spine_length();
  Int after = 1;  // empty determinant
  Int cur = s.x[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    Int next = s.x[i] * cur + s.y[i] * after;
    after = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CaterpillarBondSpec spec_from_cf(const GeneralizedCF& cf) {
  std::vector<Int> x{cf.a0};
  std::vector<Int> y;
  x.reserve(cf.terms.size() + 1);
  y.reserve(cf.terms.size());
  for (const CfTerm& t : cf.terms) {
    x.push_back(t.a);
    y.push_back(t.b);
  }
  return CaterpillarBondSpec(std::move(x), std::move(y));
}

GeneralizedCF cf_from_spec(const CaterpillarBondSpec& s) {
  std::vector<CfTerm> terms;
  terms.reserve(s.y.size());
  for (std::size_t i = 0; i < s.y.size(); ++i) {
    terms.push_back(CfTerm{s.y[i], s.x[i + 1]});
  }
  return GeneralizedCF(s.x[0], std::move(terms));
}

CaterpillarBondSpec rewrite_head(const CaterpillarBondSpec& s) {
  if (s.x.front() != 2) {
    throw std::invalid_argument("head rewrite needs x_1 = 2");
  }
  std::vector<Int> x{1, 1};
  x.insert(x.end(), s.x.begin() + 1, s.x.end());
  std::vector<Int> y{1};
  y.insert(y.end(), s.y.begin(), s.y.end());
  return CaterpillarBondSpec(std::move(x), std::move(y));
}

CaterpillarBondSpec rewrite_tail(const CaterpillarBondSpec& s) {
  if (s.x.back() != 2) {
    throw std::invalid_argument("tail rewrite needs x_n = 2");
  }
  std::vector<Int> x(s.x.begin(), s.x.end() - 1);
  x.push_back(1);
  x.push_back(1);
  std::vector<Int> y = s.y;
  y.push_back(1);
  return CaterpillarBondSpec(std::move(x), std::move(y));
}

bool contract_head_applies(const CaterpillarBondSpec& s) {
  return s.spine_length() >= 2 && s.x[0] == 1 && s.x[1] == 1 && s.y[0] == 1;
}

bool contract_tail_applies(const CaterpillarBondSpec& s) {
  const std::size_t n = s.spine_length();
  return n >= 2 && s.x[n - 1] == 1 && s.x[n - 2] == 1 && s.y[n - 2] == 1;
}

CaterpillarBondSpec contract_head(const CaterpillarBondSpec& s) {
  if (!contract_head_applies(s)) {
    throw std::invalid_argument("no (1,1;1,...) pattern at the head");
  }
  std::vector<Int> x{2};
  x.insert(x.end(), s.x.begin() + 2, s.x.end());
  std::vector<Int> y(s.y.begin() + 1, s.y.end());
  return CaterpillarBondSpec(std::move(x), std::move(y));
}

CaterpillarBondSpec contract_tail_spec(const CaterpillarBondSpec& s) {
  if (!contract_tail_applies(s)) {
    throw std::invalid_argument("no (...,1,1;...,1) pattern at the tail");
  }
  std::vector<Int> x(s.x.begin(), s.x.end() - 2);
  x.push_back(2);
  std::vector<Int> y(s.y.begin(), s.y.end() - 1);
  return CaterpillarBondSpec(std::move(x), std::move(y));
}

CaterpillarBondSpec reverse_spec(const CaterpillarBondSpec& s) {
  std::vector<Int> x(s.x.rbegin(), s.x.rend());
  std::vector<Int> y(s.y.rbegin(), s.y.rend());
  return CaterpillarBondSpec(std::move(x), std::move(y));
}

namespace {

bool spec_less(const CaterpillarBondSpec& lhs, const CaterpillarBondSpec& rhs) {
  if (lhs.x != rhs.x) {
    return std::lexicographical_compare(lhs.x.begin(), lhs.x.end(),
                                        rhs.x.begin(), rhs.x.end());
  }
  return std::lexicographical_compare(lhs.y.begin(), lhs.y.end(),
                                      rhs.y.begin(), rhs.y.end());
}

}  // namespace

CaterpillarBondSpec canonical_spec(const CaterpillarBondSpec& s) {
  CaterpillarBondSpec cur = s;
  for (bool changed = true; changed;) {
    changed = false;
    if (contract_head_applies(cur)) {
      cur = contract_head(cur);
      changed = true;
    }
    if (contract_tail_applies(cur)) {
      cur = contract_tail_spec(cur);
      changed = true;
    }
  }
  CaterpillarBondSpec rev = reverse_spec(cur);
  return spec_less(rev, cur) ? rev : cur;
}

CaterpillarBondSpec parse_spec(std::string_view text) {
  detail::TextCursor c{text};
  c.expect('D', "to open the spec literal");
  c.expect('[', "after `D`");
  std::vector<Int> x;
  do {
    x.push_back(c.positive("spine value"));
  } while (c.eat(','));
  std::vector<Int> y;
  if (c.eat(';')) {
    do {
      y.push_back(c.positive("bond order"));
    } while (c.eat(','));
  }
  c.expect(']', "to close the spec literal");
  c.finish();
  if (y.size() + 1 != x.size()) {
    throw ParseError("need exactly " + std::to_string(x.size() - 1) +
                         " bond orders for " + std::to_string(x.size()) +
                         " spine values",
                     c.pos);
  }
  return CaterpillarBondSpec(std::move(x), std::move(y));
}

std::string format_spec(const CaterpillarBondSpec& s) {
  std::ostringstream out;
  out << "D[";
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    if (i) out << ',';
    out << s.x[i];
  }
  if (!s.y.empty()) {
    out << "; ";
    for (std::size_t i = 0; i < s.y.size(); ++i) {
      if (i) out << ',';
      out << s.y[i];
    }
  }
  out << ']';
  return out.str();
}

}  // namespace hosoya
