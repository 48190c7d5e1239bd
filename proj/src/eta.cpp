#include "modeta/eta.hpp"

#include <set>

#include "modeta/error.hpp"

namespace modeta {

namespace {

void require_even_ell(int ell) {
  if (ell < 2 || ell % 2 != 0) fail(ErrorCode::precondition, "ell must be a positive even integer, got " + std::to_string(ell));
}

void require_spinc_class(const IntersectionForm& form, const CohomologyClass& d) {
  if (!is_characteristic(form, d)) {
    fail(ErrorCode::not_characteristic, "class (" + d.to_string() + ") is not characteristic for " + form.to_string());
  }
  if (d.is_zero() || !is_primitive(d)) fail(ErrorCode::not_primitive, "class (" + d.to_string() + ") is not primitive");
}

std::string monomial_name(const Monomial& m) {
  const auto names = characteristic_names(static_cast<int>(m.size()) - 1);
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

EtaValue eta_closed_form_dim5(const IntersectionForm& form, const CohomologyClass& d, int ell) {
  require_even_ell(ell);
  require_spinc_class(form, d);
  const Rational d2 = square(form, d);
  const Rational p1 = 3 * form.signature();
  return EtaValue(-((Rational(ell) * ell - 1) * d2 + p1) / (24 * ell));
}

PairingData four_manifold_pairings(const IntersectionForm& form, const CohomologyClass& d) {
  return {
      {characteristic_monomial(1, 2), Rational(square(form, d))},
      {characteristic_monomial(1, 0, {1}), Rational(3 * form.signature())},
  };
}

EtaValue eta_series_general(int ell, int n, const PairingData& pairings) {
  require_even_ell(ell);
  if (n < 1) fail(ErrorCode::invalid_argument, "base dimension 4n needs n >= 1");
  const int order = 4 * n;
  const GradedSeries integrand = sinh_ratio(ell, order, n) * ahat_table(n).total(order);
  const GradedSeries top = integrand.homogeneous_part(order);
  Rational eta = 0;
  for (const auto& [m, c] : top.terms()) {
    auto it = pairings.find(m);
    if (it == pairings.end()) fail(ErrorCode::invalid_argument, "missing pairing for monomial " + monomial_name(m));
    eta += c * it->second;
  }
  return EtaValue(eta);
}

EtaFamilyReport eta_family_table(int a, int b, int count, Epsilon eps, int target) {
  if (a < 0 || b < 0) fail(ErrorCode::invalid_argument, "a and b must be nonnegative");
  if (a + b < 2) fail(ErrorCode::precondition, "eta families need a + b >= 2");
  if (count < 0) fail(ErrorCode::invalid_argument, "K must be nonnegative");
  const IntersectionForm form = IntersectionForm::diagonal(a, b);
  EtaFamilyReport report;
  report.a = a;
  report.b = b;
  report.eps = eps;
  report.target = target;
  std::set<EtaValue> seen;
  for (auto& member : chern_family_type_three(form, target, count, eps)) {
    EtaValue eta = eta_closed_form_dim5(form, member.d, 2);
    seen.insert(eta);
    const std::int64_t d2 = square(form, member.d);
    report.rows.push_back({member.k, std::move(member.d), d2, std::move(eta)});
  }
  report.distinct_count = static_cast<int>(seen.size());
  return report;
}

int moduli_component_lower_bound(int a, int b, int count, Epsilon eps, int target) {
  return eta_family_table(a, b, count, eps, target).distinct_count;
}

}  // namespace modeta
