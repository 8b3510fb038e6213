#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/caterpillar.hpp"
#include "hosoya/contfrac.hpp"

namespace hosoya {

/// One isomorphism class of graphs with index z. members lists the
/// witnessing (q, continued fraction) pairs and is filled in paper mode
/// only.
struct InverseClass {
  CaterpillarBondSpec representative;
  std::vector<std::pair<Int, GeneralizedCF>> members;
  Int z;
};

/// The expansion of N/q used by the inverse construction, for
/// 1 <= q <= N-1 (q = 1 yields the plain integer [N]). Always evaluates
/// to N as an unreduced numerator; exact-division cases are rewritten one
/// level deeper to keep that true.
GeneralizedCF paper_expansion(const Int& n, const Int& q);

/// Builds the expansion family over q = 1..N-1, expands each spec and
/// groups by canonical tree code. Classes are ordered by their smallest
/// member q.
std::vector<InverseClass> inverse_paper(const Int& n);

/// Complete pruned search over every caterpillar-bond spec with index
/// exactly N. Branches are cut as soon as the running index exceeds N,
/// which the strict growth of the recurrence makes exhaustive. Classes
/// are keyed by canonical tree code and ordered by representative spec.
std::vector<InverseClass> inverse_exhaustive(
    const Int& n, std::optional<std::size_t> max_spine = std::nullopt);

}  // namespace hosoya
