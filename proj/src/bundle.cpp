#include "modeta/bundle.hpp"

#include <algorithm>

#include "modeta/error.hpp"
#include "modeta/rational.hpp"

namespace modeta {

const char* type_name(ManifoldType type) noexcept {
  switch (type) {
    case ManifoldType::type_one: return "I";
    case ManifoldType::type_two: return "II";
    case ManifoldType::type_three: return "III";
    case ManifoldType::not_applicable: break;
  }
  return "n/a";
}

const char* exception_name(TypeOneException e) noexcept {
  switch (e) {
    case TypeOneException::cp2_circle: return "cp2_circle";
    case TypeOneException::s2_rp3: return "s2_rp3";
    case TypeOneException::none: break;
  }
  return "none";
}

std::string StandardName::to_string() const {
  const std::string head = "X(" + std::to_string(q) + ")";
  if (summands == 0) return q == 1 ? head + " = RP^5" : head;
  return head + "#_{S^1}(#^" + std::to_string(summands) + "(S^2xS^2)xS^1)";
}

BundleSpec::BundleSpec(IntersectionForm base, int multiplier, CohomologyClass primitive_class)
    : base_(std::move(base)), multiplier_(multiplier), d_(std::move(primitive_class)) {
  if (multiplier_ < 1) fail(ErrorCode::invalid_argument, "bundle multiplier k must be >= 1");
  if (base_.rank() < 1) fail(ErrorCode::precondition, "a circle bundle with primitive d needs b2(B) >= 1");
  if (d_.rank() != base_.rank()) {
    fail(ErrorCode::dimension_mismatch, "class (" + d_.to_string() + ") does not match form of rank " +
                                            std::to_string(base_.rank()));
  }
  if (d_.is_zero() || !is_primitive(d_)) {
    fail(ErrorCode::not_primitive, "class (" + d_.to_string() + ") is not primitive");
  }
}

CohomologyClass BundleSpec::chern_class() const {
  std::vector<std::int64_t> c(d_.coords().begin(), d_.coords().end());
  for (auto& x : c) x *= multiplier_;
  return CohomologyClass(std::move(c));
}

namespace {

int q_mod8_up_to_sign(std::int64_t value) {
  const auto r = static_cast<int>(mod_floor(value, 8));
  return std::min(r, 8 - r);
}

}  // namespace

FiveManifoldClass FiveManifoldClass::type_two(int b2) {
  if (b2 < 1 || b2 % 2 == 0) fail(ErrorCode::precondition, "a Type II total space has odd b2");
  FiveManifoldClass m;
  m.fundamental_group_order = 2;
  m.b2 = b2;
  m.type = ManifoldType::type_two;
  return m;
}

FiveManifoldClass FiveManifoldClass::type_three(int b2, PinPlusClass pin) {
  if (b2 < 0) fail(ErrorCode::invalid_argument, "b2 must be nonnegative");
  const int q = pin.up_to_sign();
  if ((q + b2 + 1) % 2 != 0) {
    fail(ErrorCode::precondition, "Type III needs [P] = b2 + 1 mod 2 (got [P] = " + std::to_string(pin.value()) +
                                      ", b2 = " + std::to_string(b2) + ")");
  }
  StandardName name{q, (b2 - (q % 2 == 0 ? 1 : 0)) / 2};
  if (name.summands == 0 && q % 2 == 1 && q != 1) {
    // A homotopy RP^5 other than RP^5 itself has no free circle action with
    // simply connected quotient.
    fail(ErrorCode::precondition, "X(" + std::to_string(q) + ") needs at least one S^2xS^2 summand");
  }
  FiveManifoldClass m;
  m.fundamental_group_order = 2;
  m.b2 = b2;
  m.type = ManifoldType::type_three;
  m.pin_plus = pin;
  m.standard_name = name;
  return m;
}

FiveManifoldClass FiveManifoldClass::type_one(int b2, int q, TypeOneException exception) {
  if (b2 < 1) fail(ErrorCode::precondition, "a Type I total space has b2 >= 1");
  const int rep = q_mod8_up_to_sign(q);
  if (exception != TypeOneException::none) {
    if (rep != 0 && rep != 4) fail(ErrorCode::precondition, "exceptional Type I manifolds have q = 0 or 4");
    if (exception == TypeOneException::cp2_circle && b2 != 2) {
      fail(ErrorCode::precondition, "X(q)#_{S^1}(CP^2xS^1) has b2 = 2");
    }
    if (exception == TypeOneException::s2_rp3 && b2 != 3) {
      fail(ErrorCode::precondition, "X(q)#_{S^1}(S^2xRP^3) has b2 = 3");
    }
  }
  FiveManifoldClass m;
  m.fundamental_group_order = 2;
  m.b2 = b2;
  m.type = ManifoldType::type_one;
  m.type_one_q = rep;
  m.type_one_s = static_cast<int>(mod_floor(b2 + 1 - rep, 2));
  m.exception = exception;
  return m;
}

bool FiveManifoldClass::may_be_exceptional() const noexcept {
  return type == ManifoldType::type_one && type_one_q && (*type_one_q == 0 || *type_one_q == 4) &&
         (b2 == 2 || b2 == 3);
}

FiveManifoldClass classify_total_space(const BundleSpec& spec, Epsilon eps) {
  const IntersectionForm& base = spec.base();
  const CohomologyClass& d = spec.primitive_class();
  const int b2 = base.rank() - 1;

  if (spec.multiplier() != 2) {
    FiveManifoldClass m;
    m.fundamental_group_order = spec.multiplier();
    m.b2 = b2;
    return m;
  }

  if (base.is_spin()) {
    FiveManifoldClass m;
    m.fundamental_group_order = 2;
    m.b2 = b2;
    m.type = ManifoldType::type_two;
    return m;
  }
  if (is_characteristic(base, d)) {
    const PinPlusClass pin = beta(base, d, eps);
    if ((pin.value() + b2 + 1) % 2 != 0) fail(ErrorCode::internal, "beta has the wrong parity for b2");
    return FiveManifoldClass::type_three(b2, pin);
  }
  FiveManifoldClass m;
  m.fundamental_group_order = 2;
  m.b2 = b2;
  m.type = ManifoldType::type_one;
  m.type_one_q = q_mod8_up_to_sign(square(base, d));
  m.type_one_s = static_cast<int>(mod_floor(b2 + 1 - *m.type_one_q, 2));
  return m;
}

int count_type_three_diffeo_types(const IntersectionForm& form) {
  if (form.is_spin()) fail(ErrorCode::precondition, "Type III total spaces need a non-spin base");
  const int sign = form.signature();
  int count = 0;
  for (int q = 0; q <= 8; ++q) {
    if (mod_floor(q - sign, 4) == 0 || mod_floor(q + sign, 4) == 0) ++count;
  }
  return count;
}

bool quotient_membership(const FiveManifoldClass& manifold, const IntersectionForm& form) {
  if (manifold.fundamental_group_order != 2 || manifold.type == ManifoldType::not_applicable) {
    fail(ErrorCode::precondition, "quotient table applies to total spaces with fundamental group Z/2");
  }
  const bool rank_ok = form.rank() == manifold.b2 + 1;
  const int sign = form.signature();
  switch (manifold.type) {
    case ManifoldType::type_two:
      return form.is_spin() && rank_ok;
    case ManifoldType::type_three: {
      if (!manifold.pin_plus) fail(ErrorCode::internal, "Type III class without a Pin+ invariant");
      const int p = manifold.pin_plus->value();
      return !form.is_spin() && rank_ok && (mod_floor(sign - p, 4) == 0 || mod_floor(sign + p, 4) == 0);
    }
    case ManifoldType::type_one:
      switch (manifold.exception) {
        case TypeOneException::cp2_circle:
          return !form.is_spin() && form.rank() == 3 && std::abs(sign) == 1;
        case TypeOneException::s2_rp3:
          return !form.is_spin() && form.rank() == 4 && std::abs(sign) < 4;
        case TypeOneException::none:
          return !form.is_spin() && rank_ok;
      }
      break;
    case ManifoldType::not_applicable:
      break;
  }
  return false;
}

IntersectionForm StandardQuotient::form() const {
  return kind == Kind::s2_cross_s2 ? IntersectionForm::even(c) : IntersectionForm::diagonal(a, b);
}

namespace {

std::string power(int count, const std::string& piece) {
  if (count == 1) return piece;
  return "#^" + std::to_string(count) + "(" + piece + ")";
}

}  // namespace

std::string StandardQuotient::name() const {
  if (kind == Kind::s2_cross_s2) return c == 0 ? "S^4" : power(c, "S^2xS^2");
  if (a == 0 && b == 0) return "S^4";
  std::string out = a > 0 ? power(a, "CP^2") : "";
  if (b > 0) {
    const std::string tail = power(b, "-CP^2");
    out += (out.empty() || tail.front() == '#' ? "" : "#") + tail;
  }
  return out;
}

std::vector<StandardQuotient> enumerate_standard_quotients(const FiveManifoldClass& manifold) {
  if (manifold.fundamental_group_order != 2 || manifold.type == ManifoldType::not_applicable) {
    fail(ErrorCode::precondition, "standard quotients are defined for total spaces with fundamental group Z/2");
  }
  std::vector<StandardQuotient> out;
  const int b2 = manifold.b2;
  switch (manifold.type) {
    case ManifoldType::type_two: {
      if (b2 % 2 == 0) fail(ErrorCode::internal, "Type II total space with even b2");
      StandardQuotient q;
      q.kind = StandardQuotient::Kind::s2_cross_s2;
      q.c = (b2 + 1) / 2;
      out.push_back(q);
      break;
    }
    case ManifoldType::type_one: {
      StandardQuotient q;
      q.a = b2;
      q.b = 1;
      out.push_back(q);
      break;
    }
    case ManifoldType::type_three: {
      if (!manifold.pin_plus) fail(ErrorCode::internal, "Type III class without a Pin+ invariant");
      for (const PinPlusClass pin : {*manifold.pin_plus, manifold.pin_plus->negated()}) {
        const int c = pin.value();
        if (!out.empty() && out.front().pin_residue == c) continue;
        if ((c - (b2 + 1)) % 2 != 0) fail(ErrorCode::internal, "[P] and b2 + 1 have different parity");
        const int l = c / 4;  // 0 <= c - 4l < 4
        const int a = (b2 + 1 + c - 4 * l) / 2;
        const int b = (b2 + 1 - c + 4 * l) / 2;
        if (b < 0) continue;  // this sign of [P] has no diagonal representative
        StandardQuotient q;
        q.a = a;
        q.b = b;
        q.pin_residue = c;
        q.l = l;
        out.push_back(q);
      }
      if (out.empty()) fail(ErrorCode::internal, "no standard quotient for a Type III manifold");
      break;
    }
    case ManifoldType::not_applicable:
      break;
  }
  return out;
}

namespace {

bool congruence_holds(std::int64_t k, int c, Epsilon eps) {
  const std::int64_t kk = mod_floor(k, 16);
  return mod_floor((4 + 2 * sign_of(eps)) * kk * (kk + 1) - 4 * c, 16) == 0;
}

}  // namespace

bool CongruenceSolution::admits(std::int64_t k) const {
  return std::binary_search(residues.begin(), residues.end(), static_cast<int>(mod_floor(k, period)));
}

std::vector<std::int64_t> CongruenceSolution::first(int count) const {
  if (count < 0) fail(ErrorCode::invalid_argument, "count must be nonnegative");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t base = 0; static_cast<int>(out.size()) < count; base += period) {
    for (int r : residues) {
      if (static_cast<int>(out.size()) == count) break;
      out.push_back(base + r);
    }
  }
  return out;
}

CongruenceSolution solve_k_congruence(int c, Epsilon eps) {
  if (c < 0 || c > 3) fail(ErrorCode::invalid_argument, "congruence target c must be in {0,1,2,3}");
  CongruenceSolution sol;
  sol.target = c;
  sol.eps = eps;
  // k(k+1) mod 16 depends on k mod 16, so the true period divides 16.
  for (int p : {1, 2, 4, 8, 16}) {
    bool periodic = true;
    for (int k = 0; k < 16 && periodic; ++k) {
      periodic = congruence_holds(k, c, eps) == congruence_holds(k + p, c, eps);
    }
    if (periodic) {
      sol.period = p;
      break;
    }
  }
  for (int k = 0; k < sol.period; ++k) {
    if (congruence_holds(k, c, eps)) sol.residues.push_back(k);
  }
  if (sol.residues.empty()) {
    fail(ErrorCode::unsolvable, "(4+2eps)k(k+1) = " + std::to_string(4 * c) + " mod 16 has no solution for eps = " +
                                    std::to_string(sign_of(eps)));
  }
  sol.smallest = sol.residues.front();
  return sol;
}

int type_three_target(const IntersectionForm& form, PinPlusClass pin) {
  for (const PinPlusClass p : {pin, pin.negated()}) {
    const std::int64_t diff = p.value() - form.signature();
    if (mod_floor(diff, 4) == 0) return static_cast<int>(mod_floor(diff / 4, 4));
  }
  fail(ErrorCode::precondition, "sign(B) = " + std::to_string(form.signature()) + " is not ±[P] mod 4 for [P] = " +
                                    std::to_string(pin.value()));
}

namespace {

std::pair<int, int> require_diagonal(const IntersectionForm& form) {
  auto counts = form.diagonal_counts();
  if (!counts) fail(ErrorCode::precondition, "family constructors need a diagonal(a,b) base, got " + form.to_string());
  return *counts;
}

}  // namespace

std::vector<FamilyMember> chern_family_type_three(const IntersectionForm& form, int target, int count, Epsilon eps) {
  auto [a, b] = require_diagonal(form);
  if (a + b < 2) fail(ErrorCode::precondition, "Chern class families need a + b >= 2");
  if (target < 0 || target > 3) fail(ErrorCode::invalid_argument, "target c must be in {0,1,2,3}");
  const int solve_for = a >= 1 ? target : (4 - target) % 4;
  const CongruenceSolution sol = solve_k_congruence(solve_for, eps);
  std::vector<FamilyMember> out;
  for (std::int64_t k : sol.first(count)) {
    std::vector<std::int64_t> d(static_cast<std::size_t>(a + b), 1);
    d[0] = 1 + 2 * k;
    out.push_back({k, CohomologyClass(std::move(d))});
  }
  return out;
}

std::vector<FamilyMember> chern_family_type_one(int q, const IntersectionForm& form, int count) {
  auto [a, b] = require_diagonal(form);
  if (count < 0) fail(ErrorCode::invalid_argument, "count must be nonnegative");
  const int rep = q_mod8_up_to_sign(q);
  const int n = a + b;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) {
      fail(ErrorCode::precondition, "Type I family q=" + std::to_string(rep) + " over diagonal(" + std::to_string(a) +
                                        "," + std::to_string(b) + ") requires " + what +
                                        " (reverse the orientation if b satisfies it instead)");
    }
  };

  // Pattern for k = 0 plus the multiple of 8 added to the first coordinate.
  std::vector<std::int64_t> pattern(static_cast<std::size_t>(n), 0);
  switch (rep) {
    case 0:
    case 4:
      need(n >= 3, "a + b >= 3");
      need(a >= 2, "a >= 2");
      if (b > 0) {
        pattern[0] = rep == 0 ? 1 : 2;
        if (rep == 4) pattern[1] = 1;
        pattern[static_cast<std::size_t>(n - 1)] = 1;
      } else {
        need(a >= 5, "a >= 5 when b = 0");
        pattern[0] = rep == 0 ? 2 : 1;
        const int ones = rep == 0 ? 4 : 3;
        for (int i = 1; i <= ones; ++i) pattern[static_cast<std::size_t>(i)] = 1;
      }
      break;
    case 2:
      need(n >= 3, "a + b >= 3");
      need(a >= 2, "a >= 2");
      pattern[0] = 1;
      pattern[1] = 1;
      break;
    default:  // 1 or 3
      need(n >= 2, "a + b >= 2");
      need(a >= 1, "a >= 1");
      pattern[0] = 1;
      pattern[1] = rep == 1 ? 4 : 2;
      break;
  }

  std::vector<FamilyMember> out;
  for (std::int64_t k = 0; k < count; ++k) {
    std::vector<std::int64_t> d = pattern;
    d[0] += 8 * k;
    out.push_back({k, CohomologyClass(std::move(d))});
  }
  return out;
}

}  // namespace modeta
