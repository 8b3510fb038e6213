#include "hosoya/inverse.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hosoya/multigraph.hpp"

namespace hosoya {

GeneralizedCF paper_expansion(const Int& n, const Int& q) {
  if (n < 1) {
    throw std::invalid_argument("target must be positive");
  }
  if (q < 1 || (q > 1 && q > n - 1)) {
    throw std::invalid_argument("q must lie in [1, N-1]");
  }
  if (q == 1) return GeneralizedCF(n);
  if (2 * q <= n) {
    const Int a0 = n / q;
    const Int r = n - a0 * q;
    if (r >= 1) return GeneralizedCF(a0, {CfTerm{r, q}});
    // q divides N: shift one unit into the tail so every entry stays
    // positive and the unreduced numerator stays N.
    return GeneralizedCF(a0 - 1, {CfTerm{q, q}});
  }
  // q > N/2 forces a0 = 1 with unit numerator; expand q/(N-q) one level.
  const Int d = n - q;
  const Int a1 = q / d;
  const Int r1 = q - a1 * d;
  if (r1 == 0) {
    if (d == 1) return GeneralizedCF(1, {CfTerm{1, a1}});
    // Exact division with d >= 2 needs the same unit shift one level down,
    // otherwise the unreduced numerator collapses to N/d.
    return GeneralizedCF(1, {CfTerm{1, a1 - 1}, CfTerm{d, d}});
  }
  return GeneralizedCF(1, {CfTerm{1, a1}, CfTerm{r1, d}});
}

namespace {

struct SpecOrder {
  bool operator()(const CaterpillarBondSpec& lhs,
                  const CaterpillarBondSpec& rhs) const {
    if (lhs.x.size() != rhs.x.size()) return lhs.x.size() < rhs.x.size();
    if (lhs.x != rhs.x) {
      return std::lexicographical_compare(lhs.x.begin(), lhs.x.end(),
                                          rhs.x.begin(), rhs.x.end());
    }
    return std::lexicographical_compare(lhs.y.begin(), lhs.y.end(),
                                        rhs.y.begin(), rhs.y.end());
  }
};

}  // namespace

std::vector<InverseClass> inverse_paper(const Int& n) {
  if (n < 1) {
    throw std::invalid_argument("target must be positive");
  }
  std::vector<InverseClass> classes;
  std::map<std::string, std::size_t> by_code;
  for (Int q = 1; q == 1 || q <= n - 1; ++q) {
    GeneralizedCF cf = paper_expansion(n, q);
    CaterpillarBondSpec spec = spec_from_cf(cf);
    const std::string code = canonical_tree_code(expand_spec(spec));
    auto [it, inserted] = by_code.emplace(code, classes.size());
    if (inserted) {
      classes.push_back(InverseClass{canonical_spec(spec), {}, n});
    }
    classes[it->second].members.emplace_back(q, std::move(cf));
  }
  return classes;  // already ordered by smallest member q
}

std::vector<InverseClass> inverse_exhaustive(
    const Int& n, std::optional<std::size_t> max_spine) {
  if (n < 1) {
    throw std::invalid_argument("target must be positive");
  }
  // Accepted specs per canonical code; the representative is the least
  // canonical spec so the result does not depend on traversal order.
  std::map<std::string, CaterpillarBondSpec> found;
  std::vector<Int> xs, ys;

  auto record = [&] {
    CaterpillarBondSpec spec{xs, ys};
    const std::string code = canonical_tree_code(expand_spec(spec));
    CaterpillarBondSpec canon = canonical_spec(spec);
    auto it = found.find(code);
    if (it == found.end()) {
      found.emplace(code, std::move(canon));
    } else if (SpecOrder{}(canon, it->second)) {
      it->second = std::move(canon);
    }
  };

  // z0/z1 are the running indices of the spec minus its last vertex and of
  // the whole spec; extending by (y, x) moves to x*z1 + y*z0, which grows
  // strictly, so pruning at > N loses nothing.
  auto dfs = [&](auto&& self, const Int& z0, const Int& z1) -> void {
    if (z1 == n) {
      record();
      return;
    }
    if (max_spine && xs.size() >= *max_spine) return;
    for (Int y = 1; y * z0 + z1 <= n; ++y) {
      for (Int x = 1; x * z1 + y * z0 <= n; ++x) {
        xs.push_back(x);
        ys.push_back(y);
        self(self, z1, x * z1 + y * z0);
        xs.pop_back();
        ys.pop_back();
      }
    }
  };
  for (Int x1 = 1; x1 <= n; ++x1) {
    xs.assign(1, x1);
    ys.clear();
    dfs(dfs, 1, x1);
  }

  std::vector<InverseClass> classes;
  classes.reserve(found.size());
  for (auto& [code, spec] : found) {
    classes.push_back(InverseClass{std::move(spec), {}, n});
  }
  std::sort(classes.begin(), classes.end(),
            [](const InverseClass& lhs, const InverseClass& rhs) {
              return SpecOrder{}(lhs.representative, rhs.representative);
            });
  return classes;
}

}  // namespace hosoya
