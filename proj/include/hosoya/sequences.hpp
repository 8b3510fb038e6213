#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/caterpillar.hpp"

namespace hosoya {

/// Two-term linear recurrence u_n = a*u_{n-1} + b*u_{n-2} with seeds
/// u_0 >= 0 and u_1 >= 1.
struct RecurrenceDef {
  Int a;
  Int b;
  Int u0;
  Int u1;

  RecurrenceDef(Int a, Int b, Int u0, Int u1);

  friend bool operator==(const RecurrenceDef&, const RecurrenceDef&) = default;
};

/// u_0 .. u_{count-1}, exact. count >= 1.
std::vector<Int> terms(const RecurrenceDef& d, std::size_t count);

// The named families. Pell-Lucas uses the A002203 seeds 2, 2; its
// customary labels are shifted one up from the raw term index (the graph
// of value terms[k] is traditionally called Q_{k+1}).
RecurrenceDef fibonacci();
RecurrenceDef lucas();
RecurrenceDef pell();
RecurrenceDef pell_lucas();
RecurrenceDef jacobsthal();

/// Family lookup by CLI-facing name: fibonacci, lucas, pell, pell-lucas,
/// jacobsthal, or custom(a,b,u0,u1).
std::optional<RecurrenceDef> family_by_name(std::string_view name);

/// All-double-bond path B_n as a spec: D_{n+1}(1,..,1; 2,..,2).
/// z_fast of it is the Jacobsthal number J_{n+2}. n = 0 is a single vertex.
CaterpillarBondSpec bond_graph_spec(std::size_t n);

/// D_n(a,..,a; b,..,b); its z_fast is u_{n+1} of the (a, b, 0, 1)
/// recurrence.
CaterpillarBondSpec uniform_spec(const Int& a, const Int& b, std::size_t n);

/// D_n(v1, a,..,a; b*v0, b,..,b) for n >= 2; its z_fast is v_n where
/// v_n = a*v_{n-1} + b*v_{n-2}. v0 = 0 would need a zero bond order and is
/// rejected.
CaterpillarBondSpec seeded_spec(const Int& v0, const Int& v1, const Int& a,
                                const Int& b, std::size_t n);

}  // namespace hosoya
