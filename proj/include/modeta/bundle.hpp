#pragma once

// Total spaces M^5 of principal circle bundles over simply connected
// 4-manifolds B, described by (intersection form of B, c_1 = k d).
//
// For k = 2 the total space has fundamental group Z/2 and falls into one of
// three types:
//   I    universal cover non-spin           (d not characteristic, B non-spin)
//   II   M spin                             (B spin)
//   III  M non-spin, universal cover spin   (d characteristic, B non-spin)
// Type III manifolds are determined by b2(M) and a Pin+ class up to sign;
// they are X(q) #_{S^1} (#^k (S^2 x S^2) x S^1) with q in {0,...,8}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modeta/cobordism.hpp"
#include "modeta/lattice.hpp"

namespace modeta {

enum class ManifoldType { not_applicable, type_one, type_two, type_three };
const char* type_name(ManifoldType type) noexcept;  // "I", "II", "III", "n/a"

/// The four exceptional Type I manifolds whose quotient sets differ from the
/// generic Type I row. They cannot be recognized from (q, s, b2) alone, so
/// classification leaves this at `none` and callers set it explicitly.
enum class TypeOneException {
  none,
  cp2_circle,  // X(q) #_{S^1} (CP^2 x S^1), q = 0, 4
  s2_rp3,      // X(q) #_{S^1} (S^2 x RP^3), q = 0, 4
};
const char* exception_name(TypeOneException e) noexcept;

/// X(q) #_{S^1} (#^summands (S^2 x S^2) x S^1).
struct StandardName {
  int q = 1;
  int summands = 0;

  std::string to_string() const;
  friend bool operator==(const StandardName&, const StandardName&) = default;
};

class BundleSpec {
 public:
  /// multiplier >= 1, rank(base) >= 1, d primitive and of matching length.
  BundleSpec(IntersectionForm base, int multiplier, CohomologyClass primitive_class);

  const IntersectionForm& base() const noexcept { return base_; }
  int multiplier() const noexcept { return multiplier_; }
  const CohomologyClass& primitive_class() const noexcept { return d_; }
  /// c_1 = k d.
  CohomologyClass chern_class() const;

 private:
  IntersectionForm base_;
  int multiplier_;
  CohomologyClass d_;
};

struct FiveManifoldClass {
  int fundamental_group_order = 1;
  int b2 = 0;
  bool orientable = true;
  bool h2_torsion_free = true;
  ManifoldType type = ManifoldType::not_applicable;
  std::optional<PinPlusClass> pin_plus;      // Type III, meaningful up to sign
  std::optional<int> type_one_q;             // Type I, in {0,...,4} (mod 8 up to sign)
  std::optional<int> type_one_s;             // Type I, parity bit with q + s = b2 + 1 mod 2
  std::optional<StandardName> standard_name;  // Type III
  TypeOneException exception = TypeOneException::none;

  /// Builders for manifolds given by invariants rather than by a bundle.
  /// They enforce the same parity relations classification produces.
  static FiveManifoldClass type_two(int b2);
  static FiveManifoldClass type_three(int b2, PinPlusClass pin);
  static FiveManifoldClass type_one(int b2, int q, TypeOneException exception = TypeOneException::none);

  /// Type I with q in {0,4} and b2 in {2,3}: the invariants are compatible
  /// with an exceptional manifold.
  bool may_be_exceptional() const noexcept;
};

/// Basic facts of the bundle (orientable, torsion free H_2,
/// b2 = b2(B) - 1, pi_1 = Z/k) plus, for k = 2, the type and its invariants.
FiveManifoldClass classify_total_space(const BundleSpec& spec, Epsilon eps);

/// Number of q in {0,...,8} with q = ±sign(B) mod 4: 2, 3 or 4 for signature
/// 2, 0, ±1 mod 4. Rejects spin forms.
int count_type_three_diffeo_types(const IntersectionForm& form);

/// Whether B (given by its form) is the quotient of M by some free circle
/// action, by the row of the quotient table matching M's type.
bool quotient_membership(const FiveManifoldClass& manifold, const IntersectionForm& form);

struct StandardQuotient {
  enum class Kind { projective_sum, s2_cross_s2 };
  Kind kind = Kind::projective_sum;
  int a = 0;  // #^a CP^2 # ^b -CP^2
  int b = 0;
  int c = 0;  // #^c S^2 x S^2
  /// Type III only: residue of the chosen sign of [P] in [0,16) and l with
  /// 0 <= residue - 4l < 4.
  std::optional<int> pin_residue;
  std::optional<int> l;

  IntersectionForm form() const;
  std::string name() const;
};

/// Standard quotients: #^c S^2 x S^2 for Type II, #^{b2} CP^2 # -CP^2 for
/// Type I and #^a CP^2 #^b -CP^2 for Type III (one entry per sign of [P]
/// yielding nonnegative a, b).
std::vector<StandardQuotient> enumerate_standard_quotients(const FiveManifoldClass& manifold);

/// Solutions of (4 + 2 eps) k (k+1) = 4c mod 16 over k >= 0. They form a
/// union of residue classes modulo `period`.
struct CongruenceSolution {
  int target = 0;
  Epsilon eps = Epsilon::plus;
  std::int64_t smallest = 0;
  int period = 1;
  std::vector<int> residues;

  bool admits(std::int64_t k) const;
  /// First `count` admissible k >= 0 in increasing order.
  std::vector<std::int64_t> first(int count) const;
};

/// c in {0,1,2,3}; fails with `unsolvable` if no k in [0,16) works.
CongruenceSolution solve_k_congruence(int c, Epsilon eps);

/// c in {0,...,3} with ±[P] = sign(B) + 4c mod 16, trying +[P] first.
int type_three_target(const IntersectionForm& form, PinPlusClass pin);

/// d_k = (1+2k, 1, ..., 1) for the first `count` admissible k. The form must
/// be diagonal(a,b) with a + b >= 2. With a >= 1 every d_k satisfies
/// beta(B, d_k) = sign(B) + 4c mod 16; with a = 0 the first coordinate sits
/// in the negative block and the congruence is solved for -c instead, which
/// gives the same beta.
struct FamilyMember {
  std::int64_t k;
  CohomologyClass d;
};
std::vector<FamilyMember> chern_family_type_three(const IntersectionForm& form, int target, int count, Epsilon eps);

/// Type I families for q (mod 8, up to sign) over diagonal(a,b), k = 0..count-1:
///   q=0: (1+8k,0,...,0,1) if b>0;   (2+8k,1,1,1,1,0,...,0) if b=0
///   q=4: (2+8k,1,0,...,0,1) if b>0; (1+8k,1,1,1,0,...,0) if b=0
///   q=2: (1+8k,1,0,...,0)
///   q=1: (1+8k,4,0,...,0)
///   q=3: (1+8k,2,0,...,0)
/// Each d_k is primitive, not characteristic and has d_k^2 = ±q mod 8.
std::vector<FamilyMember> chern_family_type_one(int q, const IntersectionForm& form, int count);

}  // namespace modeta
