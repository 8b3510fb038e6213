#include "hosoya/sequences.hpp"

#include <utility>

#include "text_cursor.hpp"

namespace hosoya {

RecurrenceDef::RecurrenceDef(Int a_, Int b_, Int u0_, Int u1_)
    : a(std::move(a_)), b(std::move(b_)), u0(std::move(u0_)),
      u1(std::move(u1_)) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("recurrence coefficients must be positive");
  }
  if (u0 < 0 || u1 < 1) {
    throw std::invalid_argument("seeds must satisfy u0 >= 0, u1 >= 1");
  }
}

std::vector<Int> terms(const RecurrenceDef& d, std::size_t count) {
  if (count < 1) {
    throw std::invalid_argument("need at least one term");
  }
  std::vector<Int> out;
  out.reserve(count);
  out.push_back(d.u0);
  if (count > 1) out.push_back(d.u1);
  for (std::size_t k = 2; k < count; ++k) {
    out.push_back(d.a * out[k - 1] + d.b * out[k - 2]);
  }
  return out;
}

RecurrenceDef fibonacci() { return {1, 1, 0, 1}; }
RecurrenceDef lucas() { return {1, 1, 2, 1}; }
RecurrenceDef pell() { return {2, 1, 0, 1}; }
RecurrenceDef pell_lucas() { return {2, 1, 2, 2}; }
RecurrenceDef jacobsthal() { return {1, 2, 0, 1}; }

std::optional<RecurrenceDef> family_by_name(std::string_view name) {
  if (name == "fibonacci") return fibonacci();
  if (name == "lucas") return lucas();
  if (name == "pell") return pell();
  if (name == "pell-lucas") return pell_lucas();
  if (name == "jacobsthal") return jacobsthal();
  if (name.starts_with("custom(") && name.ends_with(")")) {
    detail::TextCursor c{name.substr(7, name.size() - 8)};
    try {
      Int a = c.positive("a");
      c.expect(',', "after a");
      Int b = c.positive("b");
      c.expect(',', "after b");
      Int u0 = c.integer("u0");
      c.expect(',', "after u0");
      Int u1 = c.positive("u1");
      c.finish();
      return RecurrenceDef(std::move(a), std::move(b), std::move(u0),
                           std::move(u1));
    } catch (const ParseError&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

CaterpillarBondSpec bond_graph_spec(std::size_t n) {
  return uniform_spec(1, 2, n + 1);
}

CaterpillarBondSpec uniform_spec(const Int& a, const Int& b, std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("spine length must be at least 1");
  }
  return CaterpillarBondSpec(std::vector<Int>(n, a),
                             std::vector<Int>(n - 1, b));
}

CaterpillarBondSpec seeded_spec(const Int& v0, const Int& v1, const Int& a,
                                const Int& b, std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("seeded specs need spine length >= 2");
  }
  if (v0 < 1) {
    throw std::invalid_argument("v0 = 0 would give a zero bond order");
  }
  if (v1 < 1 || a < 1 || b < 1) {
    throw std::invalid_argument("entries must be positive");
  }
  std::vector<Int> x{v1};
  x.insert(x.end(), n - 1, a);
  std::vector<Int> y{b * v0};
  y.insert(y.end(), n - 2, b);
  return CaterpillarBondSpec(std::move(x), std::move(y));
}

}  // namespace hosoya
