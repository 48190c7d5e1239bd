#pragma once

// Eta invariants of the spin^c Dirac operator on total spaces of circle
// bundles with c_1 = ell d, ell even, d characteristic, computed from
//   eta = < sinh(d/2) A-hat(TB) / sinh(ell d/2), [B] >.
// The analytic hypotheses (free isometric action, positive scalar curvature,
// flat connection, vanishing real Pontryagin classes of M) are assumed, not
// checked.

#include <map>
#include <vector>

#include "modeta/bundle.hpp"
#include "modeta/rational.hpp"
#include "modeta/series.hpp"

namespace modeta {

class EtaValue {
 public:
  EtaValue() = default;
  explicit EtaValue(Rational value) : value_(std::move(value)) {}

  const Rational& value() const noexcept { return value_; }
  std::string to_string() const { return modeta::to_string(value_); }

  friend bool operator==(const EtaValue&, const EtaValue&) = default;
  friend bool operator<(const EtaValue& x, const EtaValue& y) { return x.value_ < y.value_; }

 private:
  Rational value_;
};

/// Base of dimension 4: -((ell^2 - 1) <d^2,[B]> + <p_1,[B]>) / (24 ell) with
/// <p_1,[B]> = 3 sign(B). ell must be even and positive, d characteristic and
/// primitive.
EtaValue eta_closed_form_dim5(const IntersectionForm& form, const CohomologyClass& d, int ell);

/// Characteristic numbers <m,[B]> for monomials m of degree 4n in the layout
/// characteristic_weights(n).
using PairingData = std::map<Monomial, Rational>;

/// {d^2: <d^2,[B]>, p1: 3 sign(B)} for a 4-dimensional base.
PairingData four_manifold_pairings(const IntersectionForm& form, const CohomologyClass& d);

/// Expands sinh_ratio(ell) * A-hat to degree 4n and contracts the top degree
/// against `pairings`. A monomial with nonzero coefficient but no pairing is
/// an error naming that monomial.
EtaValue eta_series_general(int ell, int n, const PairingData& pairings);

struct EtaFamilyRow {
  std::int64_t k;
  CohomologyClass d;
  std::int64_t d_squared;
  EtaValue eta;
};

struct EtaFamilyReport {
  int a = 0;
  int b = 0;
  Epsilon eps = Epsilon::plus;
  int target = 0;
  std::vector<EtaFamilyRow> rows;
  int distinct_count = 0;
};

/// eta (ell = 2) along the Type III Chern class family d_k over
/// diagonal(a,b) that realizes target residue c (see chern_family_type_three).
EtaFamilyReport eta_family_table(int a, int b, int count, Epsilon eps, int target = 0);

/// Number of distinct eta values in the family: a lower bound for the number
/// of path components of the positive Ricci moduli space seen at this size.
int moduli_component_lower_bound(int a, int b, int count, Epsilon eps, int target = 0);

}  // namespace modeta
