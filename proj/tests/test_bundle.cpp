#include <doctest.h>

#include <functional>
#include <set>

#include "modeta/bundle.hpp"
#include "modeta/error.hpp"

using namespace modeta;

namespace {

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::internal;
}

FiveManifoldClass classify(const char* base, CohomologyClass d, Epsilon eps = Epsilon::plus, int k = 2) {
  return classify_total_space(BundleSpec(parse_form(base), k, std::move(d)), eps);
}

bool congruence_direct(std::int64_t k, int c, Epsilon eps) {
  const std::int64_t v = (4 + 2 * sign_of(eps)) * k * (k + 1) - 4 * c;
  return ((v % 16) + 16) % 16 == 0;
}

}  // namespace

TEST_CASE("bundle topology") {
  const auto m = classify("diagonal(3,2)", {1, 1, 1, 1, 1}, Epsilon::plus, 5);
  CHECK(m.fundamental_group_order == 5);
  CHECK(m.b2 == 4);
  CHECK(m.orientable);
  CHECK(m.h2_torsion_free);
  CHECK(m.type == ManifoldType::not_applicable);
  CHECK(BundleSpec(parse_form("diag(1,1)"), 3, {1, 2}).chern_class() == CohomologyClass{3, 6});
  CHECK(code_of([] { BundleSpec(parse_form("diag(1,1)"), 2, {2, 2}); }) == ErrorCode::not_primitive);
  CHECK(code_of([] { BundleSpec(parse_form("diag(1,1)"), 0, {1, 0}); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { BundleSpec(parse_form("empty"), 2, {}); }) == ErrorCode::precondition);
  CHECK(code_of([] { BundleSpec(parse_form("diag(1,1)"), 2, {1}); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("RP^5 over CP^2") {
  for (Epsilon e : {Epsilon::plus, Epsilon::minus}) {
    const auto m = classify("diag(1)", {1}, e);
    CHECK(m.type == ManifoldType::type_three);
    CHECK(m.b2 == 0);
    CHECK(m.pin_plus->up_to_sign() == 1);
    CHECK(m.standard_name->q == 1);
    CHECK(m.standard_name->summands == 0);
    CHECK(m.standard_name->to_string() == "X(1) = RP^5");
    CHECK(quotient_membership(m, parse_form("diag(1)")));
    CHECK_FALSE(quotient_membership(m, IntersectionForm::even(1)));
  }
}

TEST_CASE("type II and type I") {
  const auto two = classify("even(1)", {1, 0});
  CHECK(two.type == ManifoldType::type_two);
  CHECK(two.b2 == 1);
  CHECK_FALSE(two.pin_plus);

  const auto one = classify("diagonal(2,1)", {1, 0, 0});
  CHECK(one.type == ManifoldType::type_one);
  CHECK(*one.type_one_q == 1);
  CHECK(*one.type_one_s == 0);  // q + s = b2 + 1 = 3 mod 2
  CHECK(one.b2 == 2);

  const auto q2 = classify("diagonal(2,1)", {1, 1, 0});
  CHECK(*q2.type_one_q == 2);
  CHECK(*q2.type_one_s == 1);
  const auto q3 = classify("diagonal(2,1)", {1, 2, 0});  // 5 = -3 mod 8
  CHECK(*q3.type_one_q == 3);
}

TEST_CASE("type III over diagonal(2,1)") {
  const auto m = classify("diagonal(2,1)", {1, 1, 1});
  // d^2 = 1, sign = 1, ind = 0, so [P] = 1 for both signs
  CHECK(m.type == ManifoldType::type_three);
  CHECK(m.b2 == 2);
  CHECK(m.pin_plus->up_to_sign() == 1);
  CHECK(m.standard_name->q == 1);
  CHECK(m.standard_name->summands == 1);
  const auto y = classify("diag(1,1,-1)", {3, 1, 1}, Epsilon::minus);
  CHECK(y.pin_plus->value() == 5);
  CHECK(y.standard_name->q == 5);
  CHECK(y.standard_name->summands == 1);
  CHECK(y.standard_name->to_string() == "X(5)#_{S^1}(#^1(S^2xS^2)xS^1)");
}

TEST_CASE("counting type III diffeomorphism types") {
  CHECK(count_type_three_diffeo_types(IntersectionForm::diagonal(3, 1)) == 2);
  CHECK(count_type_three_diffeo_types(IntersectionForm::diagonal(2, 2)) == 3);
  CHECK(count_type_three_diffeo_types(IntersectionForm::diagonal(2, 1)) == 4);
  CHECK(code_of([] { (void)count_type_three_diffeo_types(IntersectionForm::even(2)); }) == ErrorCode::precondition);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) {
      if (a + b == 0) continue;
      const int s = ((a - b) % 4 + 4) % 4;
      const int expected = s == 2 ? 2 : (s == 0 ? 3 : 4);
      CHECK(count_type_three_diffeo_types(IntersectionForm::diagonal(a, b)) == expected);
    }
}

TEST_CASE("quotient table rows") {
  const auto m = FiveManifoldClass::type_three(3, PinPlusClass(2));
  CHECK(quotient_membership(m, IntersectionForm::diagonal(3, 1)));
  CHECK_FALSE(quotient_membership(m, IntersectionForm::diagonal(2, 1)));  // wrong b2
  CHECK_FALSE(quotient_membership(m, IntersectionForm::diagonal(2, 2)));  // sign 0
  const auto two = FiveManifoldClass::type_two(3);
  CHECK(quotient_membership(two, IntersectionForm::even(2)));
  CHECK_FALSE(quotient_membership(two, IntersectionForm::diagonal(3, 1)));
  const auto one = FiveManifoldClass::type_one(3, 2);
  CHECK(quotient_membership(one, IntersectionForm::diagonal(0, 4)));
  CHECK_FALSE(quotient_membership(one, IntersectionForm::even(2)));

  const auto cp2 = FiveManifoldClass::type_one(2, 0, TypeOneException::cp2_circle);
  CHECK(quotient_membership(cp2, IntersectionForm::diagonal(2, 1)));
  CHECK_FALSE(quotient_membership(cp2, IntersectionForm::diagonal(3, 0)));
  const auto rp3 = FiveManifoldClass::type_one(3, 4, TypeOneException::s2_rp3);
  CHECK(quotient_membership(rp3, IntersectionForm::diagonal(2, 2)));
  CHECK(quotient_membership(rp3, IntersectionForm::diagonal(3, 1)));
  CHECK_FALSE(quotient_membership(rp3, IntersectionForm::diagonal(4, 0)));
  CHECK(cp2.may_be_exceptional());
  CHECK(code_of([] { (void)FiveManifoldClass::type_one(3, 4, TypeOneException::cp2_circle); }) ==
        ErrorCode::precondition);
  CHECK(code_of([] { (void)FiveManifoldClass::type_one(2, 1, TypeOneException::cp2_circle); }) ==
        ErrorCode::precondition);
  CHECK(code_of([] { (void)quotient_membership(FiveManifoldClass{}, IntersectionForm::diagonal(1, 0)); }) ==
        ErrorCode::precondition);
}

TEST_CASE("standard quotients") {
  const auto rp5 = FiveManifoldClass::type_three(0, PinPlusClass(1));
  const auto q = enumerate_standard_quotients(rp5);
  REQUIRE(q.size() == 1);
  CHECK(q[0].a == 1);
  CHECK(q[0].b == 0);
  CHECK(*q[0].pin_residue == 1);
  CHECK(*q[0].l == 0);
  CHECK(q[0].name() == "CP^2");

  const auto two = enumerate_standard_quotients(FiveManifoldClass::type_two(1));
  REQUIRE(two.size() == 1);
  CHECK(two[0].c == 1);
  CHECK(two[0].form() == IntersectionForm::even(1));
  CHECK(two[0].name() == "S^2xS^2");

  const auto m = FiveManifoldClass::type_three(2, PinPlusClass(13));
  const auto list = enumerate_standard_quotients(m);
  REQUIRE(!list.empty());
  CHECK(list[0].a == 2);
  CHECK(list[0].b == 1);
  CHECK(*list[0].l == 3);
  for (const auto& x : list) CHECK(quotient_membership(m, x.form()));

  const auto one = enumerate_standard_quotients(FiveManifoldClass::type_one(4, 3));
  REQUIRE(one.size() == 1);
  CHECK(one[0].form() == IntersectionForm::diagonal(4, 1));
}

TEST_CASE("every standard quotient is a member") {
  for (int b2 = 0; b2 <= 9; ++b2) {
    for (int p = 0; p < 16; ++p) {
      if ((p + b2 + 1) % 2 != 0) continue;
      FiveManifoldClass m;
      try {
        m = FiveManifoldClass::type_three(b2, PinPlusClass(p));
      } catch (const Error&) {
        continue;  // X(q) with odd q > 1 and no summands
      }
      const auto list = enumerate_standard_quotients(m);
      CHECK(!list.empty());
      for (const auto& x : list) {
        CHECK(x.a >= 0);
        CHECK(x.b >= 0);
        CHECK(x.a + x.b == b2 + 1);
        CHECK(quotient_membership(m, x.form()));
      }
    }
    if (b2 % 2 == 1) {
      const auto m = FiveManifoldClass::type_two(b2);
      for (const auto& x : enumerate_standard_quotients(m)) CHECK(quotient_membership(m, x.form()));
    }
    if (b2 >= 1) {
      for (int q = 0; q <= 4; ++q) {
        const auto m = FiveManifoldClass::type_one(b2, q);
        for (const auto& x : enumerate_standard_quotients(m)) CHECK(quotient_membership(m, x.form()));
      }
    }
  }
}

TEST_CASE("standard names reconstruct b2") {
  CHECK(code_of([] { (void)FiveManifoldClass::type_three(0, PinPlusClass(3)); }) == ErrorCode::precondition);
  CHECK(code_of([] { (void)FiveManifoldClass::type_three(1, PinPlusClass(3)); }) == ErrorCode::precondition);
  for (int b2 = 0; b2 <= 12; ++b2)
    for (int p = 0; p < 16; ++p) {
      if ((p + b2 + 1) % 2 != 0) continue;
      try {
        const auto m = FiveManifoldClass::type_three(b2, PinPlusClass(p));
        const auto& n = *m.standard_name;
        CHECK(b2 == 2 * n.summands + (n.q % 2 == 0 ? 1 : 0));
        CHECK(n.q == std::min(p, 16 - p));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::precondition);
      }
    }
}

TEST_CASE("congruence solver against brute force") {
  for (Epsilon e : {Epsilon::plus, Epsilon::minus})
    for (int c = 0; c < 4; ++c) {
      const auto sol = solve_k_congruence(c, e);
      for (std::int64_t k = 0; k < 32; ++k) CHECK(sol.admits(k) == congruence_direct(k, c, e));
      std::int64_t smallest = 0;
      while (!congruence_direct(smallest, c, e)) ++smallest;
      CHECK(sol.smallest == smallest);
      CHECK((sol.period == 8 || sol.period == 16 || sol.period == 4 || sol.period == 2 || sol.period == 1));
      const auto first = sol.first(10);
      CHECK(first.size() == 10);
      for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(congruence_direct(first[i], c, e));
        if (i > 0) {
          CHECK(first[i] > first[i - 1]);
          for (std::int64_t k = first[i - 1] + 1; k < first[i]; ++k) CHECK_FALSE(congruence_direct(k, c, e));
        }
      }
    }
  CHECK(solve_k_congruence(0, Epsilon::plus).smallest == 0);
  CHECK(solve_k_congruence(0, Epsilon::minus).smallest == 0);
  CHECK(solve_k_congruence(0, Epsilon::plus).residues == std::vector<int>{0, 7});
  CHECK(solve_k_congruence(2, Epsilon::plus).smallest == 3);
  CHECK(code_of([] { (void)solve_k_congruence(4, Epsilon::plus); }) == ErrorCode::invalid_argument);
}

TEST_CASE("type III Chern class families") {
  const auto f = IntersectionForm::diagonal(3, 1);
  for (Epsilon e : {Epsilon::plus, Epsilon::minus})
    for (int c = 0; c < 4; ++c) {
      const auto family = chern_family_type_three(f, c, 50, e);
      CHECK(family.size() == 50);
      for (const auto& member : family) {
        CHECK(member.d[0] == 1 + 2 * member.k);
        CHECK(is_primitive(member.d));
        CHECK(is_characteristic(f, member.d));
        CHECK(square(f, member.d) == 4 * member.k * member.k + 4 * member.k + 2);
        CHECK(beta(f, member.d, e) == PinPlusClass(f.signature() + 4 * c));
      }
    }
  CHECK(chern_family_type_three(f, 0, 1, Epsilon::plus)[0].d == CohomologyClass{1, 1, 1, 1});
  // a = 0: first coordinate in the negative block, same beta
  const auto g = IntersectionForm::diagonal(0, 3);
  for (Epsilon e : {Epsilon::plus, Epsilon::minus})
    for (int c = 0; c < 4; ++c)
      for (const auto& member : chern_family_type_three(g, c, 20, e))
        CHECK(beta(g, member.d, e) == PinPlusClass(g.signature() + 4 * c));
  CHECK(code_of([] { (void)chern_family_type_three(IntersectionForm::diagonal(1, 0), 0, 3, Epsilon::plus); }) ==
        ErrorCode::precondition);
  CHECK(code_of([] { (void)chern_family_type_three(IntersectionForm::even(1), 0, 3, Epsilon::plus); }) ==
        ErrorCode::precondition);
}

TEST_CASE("type three targets") {
  CHECK(type_three_target(IntersectionForm::diagonal(2, 1), PinPlusClass(13)) == 3);
  CHECK(type_three_target(IntersectionForm::diagonal(2, 1), PinPlusClass(3)) == 3);  // -3 = 1 + 4*3
  CHECK(code_of([] { (void)type_three_target(IntersectionForm::diagonal(2, 0), PinPlusClass(1)); }) ==
        ErrorCode::precondition);
}

TEST_CASE("type I Chern class families") {
  struct Case {
    int q, a, b;
    CohomologyClass first;
  };
  const std::vector<Case> cases = {
      {2, 3, 0, {1, 1, 0}},
      {1, 1, 1, {1, 4}},
      {3, 2, 0, {1, 2}},
      {0, 2, 1, {1, 0, 1}},
      {4, 2, 1, {2, 1, 1}},
      {0, 5, 0, {2, 1, 1, 1, 1}},
      {4, 5, 0, {1, 1, 1, 1, 0}},
  };
  for (const auto& c : cases) {
    const auto f = IntersectionForm::diagonal(c.a, c.b);
    const auto family = chern_family_type_one(c.q, f, 50);
    CHECK(family[0].d == c.first);
    for (const auto& member : family) {
      CHECK(member.d[0] == c.first[0] + 8 * member.k);
      CHECK(is_primitive(member.d));
      CHECK_FALSE(is_characteristic(f, member.d));
      const std::int64_t r = ((square(f, member.d) % 8) + 8) % 8;
      CHECK((r == c.q || r == (8 - c.q) % 8));
      const auto m = classify_total_space(BundleSpec(f, 2, member.d), Epsilon::plus);
      CHECK(m.type == ManifoldType::type_one);
      CHECK(*m.type_one_q == c.q);
    }
  }
  CHECK(square(IntersectionForm::diagonal(1, 1), {1, 4}) == -15);
  for (auto [q, a, b] : std::vector<std::tuple<int, int, int>>{{2, 2, 0}, {4, 4, 0}, {0, 1, 2}, {1, 0, 2}, {3, 1, 0}}) {
    CHECK(code_of([&] { (void)chern_family_type_one(q, IntersectionForm::diagonal(a, b), 3); }) ==
          ErrorCode::precondition);
  }
}
