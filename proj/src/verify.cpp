#include "modeta/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>

#include "modeta/eta.hpp"
#include "modeta/error.hpp"

namespace modeta {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (ok) return;
    if (result_.failed++ == 0) result_.first_failure = describe();
  }
  // Counts an unexpected exception as a failure of the current check.
  void guard(const std::function<void()>& body, const std::string& context) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, [&] { return context + ": " + e.what(); });
    }
  }
  PropertyResult done() { return std::move(result_); }

 private:
  PropertyResult result_;
};

std::vector<IntersectionForm> block_forms(int max_rank) {
  std::vector<IntersectionForm> forms;
  for (int c = 0; 2 * c <= max_rank; ++c) {
    for (int a = 0; a + 2 * c <= max_rank; ++a) {
      for (int b = 0; a + b + 2 * c <= max_rank; ++b) {
        if (a + b + c > 0) forms.push_back(IntersectionForm::connected_sum(a, b, c));
      }
    }
  }
  return forms;
}

void for_each_vector(int rank, int bound, const std::function<void(const CohomologyClass&)>& visit) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(rank), -bound);
  while (true) {
    visit(CohomologyClass(v));
    int i = 0;
    while (i < rank && v[static_cast<std::size_t>(i)] == bound) v[static_cast<std::size_t>(i++)] = -bound;
    if (i == rank) return;
    ++v[static_cast<std::size_t>(i)];
  }
}

std::string describe(const IntersectionForm& form, const CohomologyClass& d) {
  return "form " + form.to_string() + ", d = (" + d.to_string() + ")";
}

// Product of random elementary matrices; determinant ±1 by construction.
Matrix random_unimodular(int n, std::mt19937_64& rng) {
  Matrix p(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) p[i][i] = 1;
  if (n < 2) {
    if (rng() & 1) p[0][0] = -1;
    return p;
  }
  std::uniform_int_distribution<int> index(0, n - 1);
  std::uniform_int_distribution<int> factor(-2, 2);
  for (int step = 0; step < 2 * n; ++step) {
    const int i = index(rng);
    int j = index(rng);
    if (i == j) j = (j + 1) % n;
    const int f = factor(rng);
    for (int r = 0; r < n; ++r) p[r][j] += f * p[r][i];
    if (rng() % 5 == 0) std::swap(p[i], p[j]);
  }
  return p;
}

CohomologyClass apply(const Matrix& p, const CohomologyClass& x) {
  std::vector<std::int64_t> out(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) out[i] += p[i][j] * x[static_cast<int>(j)];
  }
  return CohomologyClass(std::move(out));
}

std::vector<std::uint8_t> brute_char_vector(const IntersectionForm& form, int& solutions) {
  const int n = form.rank();
  std::vector<std::uint8_t> found;
  solutions = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < n; ++j) s += ((mask >> j) & 1u) * form.entry(i, j);
      ok = mod_floor(s - form.entry(i, i), 2) == 0;
    }
    if (!ok) continue;
    ++solutions;
    found.assign(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) found[static_cast<std::size_t>(j)] = (mask >> j) & 1u;
  }
  return found;
}

int pm_mod4(std::int64_t value) {
  const int r = static_cast<int>(mod_floor(value, 4));
  return std::min(r, (4 - r) % 4);
}

PropertyResult van_der_blij(const VerifyConfig& cfg) {
  Tally t("van_der_blij");
  for (const auto& form : block_forms(cfg.max_rank)) {
    for_each_vector(form.rank(), cfg.max_coord, [&](const CohomologyClass& d) {
      if (!is_characteristic(form, d)) return;
      t.check(mod_floor(square(form, d) - form.signature(), 8) == 0, [&] { return describe(form, d); });
    });
  }
  return t.done();
}

PropertyResult characteristic_vector(const VerifyConfig& cfg, std::mt19937_64& rng) {
  Tally t("characteristic_vector_unique");
  for (const auto& base : block_forms(cfg.max_rank)) {
    for (int trial = 0; trial < 4; ++trial) {
      const IntersectionForm form = trial == 0 ? base : change_basis(base, random_unimodular(base.rank(), rng));
      int solutions = 0;
      const auto brute = brute_char_vector(form, solutions);
      t.check(solutions == 1 && brute == char_vector_mod2(form), [&] { return "form " + form.to_string(); });
    }
  }
  return t.done();
}

PropertyResult basis_invariance(const VerifyConfig& cfg, std::mt19937_64& rng) {
  Tally t("basis_change_invariance");
  std::uniform_int_distribution<int> coord(-cfg.max_coord, cfg.max_coord);
  for (const auto& form : block_forms(cfg.max_rank)) {
    for (int trial = 0; trial < 8; ++trial) {
      const Matrix p = random_unimodular(form.rank(), rng);
      const IntersectionForm moved = change_basis(form, p);
      std::vector<std::int64_t> xs(static_cast<std::size_t>(form.rank())), ys(xs.size());
      for (auto& v : xs) v = coord(rng);
      for (auto& v : ys) v = coord(rng);
      const CohomologyClass x(xs), y(ys);
      t.check(moved.signature() == form.signature() && moved.is_spin() == form.is_spin() &&
                  std::abs(moved.determinant()) == 1 && pairing(moved, x, y) == pairing(form, apply(p, x), apply(p, y)) &&
                  is_characteristic(moved, x) == is_characteristic(form, apply(p, x)),
              [&] { return "form " + form.to_string() + " moved to " + moved.to_string(); });
    }
  }
  return t.done();
}

PropertyResult trichotomy(const VerifyConfig& cfg) {
  Tally t("classification_trichotomy");
  for (const auto& form : block_forms(cfg.max_rank)) {
    for_each_vector(form.rank(), cfg.max_coord, [&](const CohomologyClass& d) {
      if (d.is_zero() || !is_primitive(d)) return;
      t.guard(
          [&] {
            const FiveManifoldClass m = classify_total_space(BundleSpec(form, 2, d), Epsilon::plus);
            const ManifoldType expected = form.is_spin()                 ? ManifoldType::type_two
                                          : is_characteristic(form, d) ? ManifoldType::type_three
                                                                       : ManifoldType::type_one;
            bool ok = m.type == expected && m.b2 == form.rank() - 1 && m.fundamental_group_order == 2;
            if (expected == ManifoldType::type_one) {
              ok = ok && m.type_one_q && mod_floor(*m.type_one_q + *m.type_one_s - m.b2 - 1, 2) == 0 &&
                   (mod_floor(square(form, d) - *m.type_one_q, 8) == 0 ||
                    mod_floor(square(form, d) + *m.type_one_q, 8) == 0);
            }
            if (expected == ManifoldType::type_three) {
              const StandardName& name = *m.standard_name;
              ok = ok && m.pin_plus && name.q == m.pin_plus->up_to_sign() &&
                   m.b2 == 2 * name.summands + (name.q % 2 == 0 ? 1 : 0);
            }
            t.check(ok, [&] { return describe(form, d); });
          },
          describe(form, d));
    });
  }
  return t.done();
}

PropertyResult type_three_realization(const VerifyConfig& cfg) {
  Tally t("type_three_realization");
  for (const auto& form : block_forms(cfg.max_rank)) {
    if (form.is_spin()) continue;
    for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
      std::set<int> seen;
      for_each_vector(form.rank(), cfg.max_coord, [&](const CohomologyClass& d) {
        if (d.is_zero() || !is_primitive(d) || !is_characteristic(form, d)) return;
        seen.insert(pm_mod4(beta(form, d, eps).value()));
      });
      t.check(seen == std::set<int>{pm_mod4(form.signature())}, [&] { return "form " + form.to_string(); });
    }
  }
  return t.done();
}

std::vector<FiveManifoldClass> classified_manifolds(const VerifyConfig& cfg) {
  std::vector<FiveManifoldClass> out;
  for (const auto& form : block_forms(cfg.max_rank)) {
    for_each_vector(form.rank(), std::min(cfg.max_coord, 2), [&](const CohomologyClass& d) {
      if (d.is_zero() || !is_primitive(d)) return;
      for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
        out.push_back(classify_total_space(BundleSpec(form, 2, d), eps));
      }
    });
  }
  return out;
}

PropertyResult quotient_consistency(const VerifyConfig& cfg) {
  Tally t("standard_quotients_are_members");
  for (const auto& m : classified_manifolds(cfg)) {
    t.guard(
        [&] {
          for (const auto& quotient : enumerate_standard_quotients(m)) {
            t.check(quotient_membership(m, quotient.form()), [&] {
              return std::string("type ") + type_name(m.type) + ", b2 " + std::to_string(m.b2) + ", quotient " +
                     quotient.name();
            });
          }
        },
        std::string("type ") + type_name(m.type) + ", b2 " + std::to_string(m.b2));
  }
  return t.done();
}

PropertyResult base_is_quotient(const VerifyConfig& cfg) {
  Tally t("base_is_quotient");
  for (const auto& form : block_forms(cfg.max_rank)) {
    for_each_vector(form.rank(), cfg.max_coord, [&](const CohomologyClass& d) {
      if (d.is_zero() || !is_primitive(d)) return;
      for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
        const FiveManifoldClass m = classify_total_space(BundleSpec(form, 2, d), eps);
        t.check(quotient_membership(m, form), [&] { return describe(form, d); });
      }
    });
  }
  return t.done();
}

PropertyResult congruence(const VerifyConfig&) {
  Tally t("congruence_solver");
  for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
    for (int c = 0; c < 4; ++c) {
      t.guard(
          [&] {
            const CongruenceSolution sol = solve_k_congruence(c, eps);
            for (std::int64_t k = 0; k < 32; ++k) {
              const bool direct = mod_floor((4 + 2 * sign_of(eps)) * k * (k + 1) - 4 * c, 16) == 0;
              t.check(sol.admits(k) == direct, [&] {
                return "c = " + std::to_string(c) + ", eps = " + std::to_string(sign_of(eps)) + ", k = " + std::to_string(k);
              });
            }
          },
          "c = " + std::to_string(c));
    }
  }
  return t.done();
}

struct Sample {
  IntersectionForm form;
  CohomologyClass d;
};

std::vector<Sample> characteristic_samples(const VerifyConfig& cfg) {
  std::vector<Sample> out;
  for (const auto& form : block_forms(cfg.max_rank)) {
    for_each_vector(form.rank(), cfg.max_coord, [&](const CohomologyClass& d) {
      if (is_characteristic(form, d)) out.push_back({form, d});
    });
  }
  return out;
}

PropertyResult beta_well_defined(const VerifyConfig& cfg) {
  Tally t("beta_well_defined");
  std::map<std::pair<std::int64_t, std::int64_t>, std::pair<int, int>> seen;
  for (const auto& [form, d] : characteristic_samples(cfg)) {
    if (d.is_zero() || !is_primitive(d)) continue;
    const SpincClass cls = spinc_class(form, d);
    const std::pair<int, int> values{beta(form, d, Epsilon::plus).value(), beta(form, d, Epsilon::minus).value()};
    auto [it, inserted] = seen.emplace(std::pair{cls.d_squared(), cls.index()}, values);
    t.check(inserted || it->second == values, [&] { return describe(form, d); });
  }
  return t.done();
}

PropertyResult beta_additivity(const VerifyConfig& cfg, std::mt19937_64& rng) {
  Tally t("beta_additivity");
  const auto samples = characteristic_samples(VerifyConfig{std::min(cfg.max_rank, 4), std::min(cfg.max_coord, 3), cfg.seed});
  std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const Sample& x = samples[pick(rng)];
    const Sample& y = samples[pick(rng)];
    const IntersectionForm sum = block_sum(x.form, y.form);
    const CohomologyClass d = class_concat(x.d, y.d);
    for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
      const PinPlusClass expected =
          beta_of_class(spinc_class(x.form, x.d), eps) + beta_of_class(spinc_class(y.form, y.d), eps);
      const PinPlusClass got = (!d.is_zero() && is_primitive(d)) ? beta(sum, d, eps) : beta_of_class(spinc_class(sum, d), eps);
      t.check(got == expected, [&] { return describe(x.form, x.d) + " plus " + describe(y.form, y.d); });
    }
  }
  return t.done();
}

PropertyResult sinh_identity(const VerifyConfig&) {
  Tally t("sinh_ratio_identity");
  constexpr int order = 12;
  for (int ell = 1; ell <= 6; ++ell) {
    const GradedSeries ratio = sinh_ratio(ell, order);
    t.check((ratio * sinh_series(ell, order)).truncated(order) == sinh_series(1, order),
            [&] { return "ell = " + std::to_string(ell); });
    bool even = true;
    for (const auto& [m, c] : ratio.terms()) even = even && m[0] % 2 == 0;
    t.check(even, [&] { return "odd power of d at ell = " + std::to_string(ell); });
  }
  return t.done();
}

PropertyResult ahat_multiplicative(const VerifyConfig&) {
  Tally t("ahat_multiplicative");
  constexpr int n = 2;
  constexpr int order = 4 * n;
  const GradedSeries total = ahat_table(n).total(order);
  // Layout p1(E), p2(E), p1(F), p2(F).
  const std::vector<int> layout{4, 8, 4, 8};
  auto var = [&](int i) { return GradedSeries::variable(layout, order, i); };
  const GradedSeries zero(layout, order);
  const std::vector<GradedSeries> e{zero, var(0), var(1)};
  const std::vector<GradedSeries> f{zero, var(2), var(3)};
  const std::vector<GradedSeries> sum{zero, var(0) + var(2), var(1) + var(0) * var(2) + var(3)};
  const GradedSeries lhs = substitute(total, sum, order);
  const GradedSeries rhs = (substitute(total, e, order) * substitute(total, f, order)).truncated(order);
  t.check(lhs == rhs, [] { return std::string("A-hat of a Whitney sum at n = 2"); });
  return t.done();
}

PropertyResult eta_cross(const VerifyConfig& cfg) {
  Tally t("eta_cross_formula");
  for (int total = 1; total <= std::min(cfg.max_rank, 5); ++total) {
    for (int a = 0; a <= total; ++a) {
      const IntersectionForm form = IntersectionForm::diagonal(a, total - a);
      for_each_vector(total, cfg.max_coord, [&](const CohomologyClass& d) {
        if (d.is_zero() || !is_primitive(d) || !is_characteristic(form, d)) return;
        const Rational d2 = square(form, d);
        for (int ell : {2, 4, 6}) {
          const EtaValue closed = eta_closed_form_dim5(form, d, ell);
          t.check(closed == eta_series_general(ell, 1, four_manifold_pairings(form, d)), [&] {
            return describe(form, d) + ", ell = " + std::to_string(ell);
          });
        }
        const EtaValue two = eta_closed_form_dim5(form, d, 2);
        t.check(two.value() == -(d2 + form.signature()) / 16, [&] { return describe(form, d) + " at ell = 2"; });
        t.check(eta_closed_form_dim5(form.reversed(), d, 2).value() == -two.value(),
                [&] { return describe(form, d) + " reversed"; });
      });
    }
  }
  return t.done();
}

PropertyResult family_validity(const VerifyConfig& cfg) {
  Tally t("family_validity");
  constexpr int count = 20;
  for (int total = 2; total <= std::max(cfg.max_rank, 2); ++total) {
    for (int a = 0; a <= total; ++a) {
      const IntersectionForm form = IntersectionForm::diagonal(a, total - a);
      for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
        for (int c = 0; c < 4; ++c) {
          const PinPlusClass expected(form.signature() + 4 * c);
          for (const auto& member : chern_family_type_three(form, c, count, eps)) {
            t.check(is_primitive(member.d) && is_characteristic(form, member.d) &&
                        beta(form, member.d, eps).equal_up_to_sign(expected),
                    [&] { return describe(form, member.d) + ", target " + std::to_string(c); });
          }
        }
      }
      for (int q : {0, 1, 2, 3, 4}) {
        std::vector<FamilyMember> members;
        try {
          members = chern_family_type_one(q, form, count);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::precondition) throw;
          continue;
        }
        for (const auto& member : members) {
          const std::int64_t d2 = square(form, member.d);
          t.check(is_primitive(member.d) && !is_characteristic(form, member.d) &&
                      (mod_floor(d2 - q, 8) == 0 || mod_floor(d2 + q, 8) == 0),
                  [&] { return describe(form, member.d) + ", q = " + std::to_string(q); });
        }
      }
    }
  }
  return t.done();
}

PropertyResult eta_family_distinct(const VerifyConfig& cfg) {
  Tally t("eta_family_distinct");
  constexpr int count = 25;
  for (int total = 2; total <= std::max(cfg.max_rank, 2); ++total) {
    for (int a = 0; a <= total; ++a) {
      for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
        const EtaFamilyReport report = eta_family_table(a, total - a, count, eps);
        bool ok = report.distinct_count == count;
        const std::int64_t s = a - (total - a);
        const std::int64_t lead = a > 0 ? 1 : -1;  // sign of the first diagonal entry
        for (const auto& row : report.rows) {
          const std::int64_t grow = lead * (4 * row.k * row.k + 4 * row.k);
          ok = ok && row.d_squared == grow + s && row.eta.value() == Rational(-(grow + 2 * s)) / 16;
        }
        t.check(ok, [&] { return "diagonal(" + std::to_string(a) + "," + std::to_string(total - a) + ")"; });
      }
    }
  }
  return t.done();
}

}  // namespace

std::vector<PropertyResult> run_property_suites(const VerifyConfig& config) {
  if (config.max_rank < 1 || config.max_rank > 8) fail(ErrorCode::invalid_argument, "max rank must be in 1..8");
  if (config.max_coord < 1) fail(ErrorCode::invalid_argument, "max coordinate must be positive");
  std::mt19937_64 rng(config.seed);
  std::vector<PropertyResult> results;
  results.push_back(van_der_blij(config));
  results.push_back(characteristic_vector(config, rng));
  results.push_back(basis_invariance(config, rng));
  results.push_back(trichotomy(config));
  results.push_back(type_three_realization(config));
  results.push_back(base_is_quotient(config));
  results.push_back(quotient_consistency(config));
  results.push_back(congruence(config));
  results.push_back(beta_well_defined(config));
  results.push_back(beta_additivity(config, rng));
  results.push_back(sinh_identity(config));
  results.push_back(ahat_multiplicative(config));
  results.push_back(eta_cross(config));
  results.push_back(family_validity(config));
  results.push_back(eta_family_distinct(config));
  return results;
}

}  // namespace modeta
