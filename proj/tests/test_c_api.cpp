#include <doctest.h>

#include <cstring>
#include <string>

#include "modeta/modeta.h"

namespace {

struct Form {
  modeta_form* p = nullptr;
  explicit Form(const char* text) { REQUIRE(modeta_form_parse(text, &p) == MODETA_OK); }
  ~Form() { modeta_form_free(p); }
};

struct Class {
  modeta_class* p = nullptr;
  explicit Class(const char* text) { REQUIRE(modeta_class_parse(text, &p) == MODETA_OK); }
  ~Class() { modeta_class_free(p); }
};

bool contains(const char* haystack, const char* needle) { return std::strstr(haystack, needle) != nullptr; }

}  // namespace

TEST_CASE("forms and classes") {
  Form y("diag(1,1,-1)");
  CHECK(modeta_form_rank(y.p) == 3);
  CHECK(modeta_form_signature(y.p) == 1);
  CHECK(modeta_form_is_spin(y.p) == 0);
  Class d("3,1,1");
  CHECK(modeta_class_rank(d.p) == 3);
  std::int64_t value = 0;
  CHECK(modeta_pairing(y.p, d.p, d.p, &value) == MODETA_OK);
  CHECK(value == 9);

  modeta_form* h = nullptr;
  REQUIRE(modeta_form_connected_sum(0, 0, 2, &h) == MODETA_OK);
  CHECK(modeta_form_is_spin(h) == 1);
  modeta_form_free(h);

  const std::int64_t coords[] = {1, 1};
  modeta_class* c = nullptr;
  REQUIRE(modeta_class_from_coords(coords, 2, &c) == MODETA_OK);
  int flag = -1;
  CHECK(modeta_is_primitive(c, &flag) == MODETA_OK);
  CHECK(flag == 1);
  modeta_class_free(c);
}

TEST_CASE("spin^c numbers and beta") {
  Form y("diag(1,1,-1)");
  Class d("3,1,1");
  std::int64_t d2 = 0, ind = 0;
  CHECK(modeta_spinc_class(y.p, d.p, &d2, &ind) == MODETA_OK);
  CHECK(d2 == 9);
  CHECK(ind == 1);
  int b = -1;
  CHECK(modeta_beta(y.p, d.p, 1, &b) == MODETA_OK);
  CHECK(b == 13);
  CHECK(modeta_beta(y.p, d.p, -1, &b) == MODETA_OK);
  CHECK(b == 5);
  CHECK(modeta_beta(y.p, d.p, 0, &b) == MODETA_ERR_INVALID_ARGUMENT);
  int count = 0;
  CHECK(modeta_count_type_three(y.p, &count) == MODETA_OK);
  CHECK(count == 4);
}

TEST_CASE("status codes") {
  modeta_form* f = nullptr;
  CHECK(modeta_form_parse("diag(", &f) == MODETA_ERR_PARSE);
  CHECK(f == nullptr);
  CHECK(std::string(modeta_last_error()).size() > 0);
  CHECK(modeta_form_parse("[[2,0],[0,1]]", &f) != MODETA_OK);
  CHECK(modeta_form_parse(nullptr, &f) == MODETA_ERR_INVALID_ARGUMENT);

  Form two("diagonal(2,0)");
  Class even_entry("2,1");
  Class multiple("3,3");
  Class short_class("1");
  int out = 0;
  CHECK(modeta_beta(two.p, even_entry.p, 1, &out) == MODETA_ERR_NOT_CHARACTERISTIC);
  CHECK(modeta_beta(two.p, multiple.p, 1, &out) == MODETA_ERR_NOT_PRIMITIVE);
  CHECK(modeta_is_characteristic(two.p, short_class.p, &out) == MODETA_ERR_DIMENSION_MISMATCH);
  modeta_report* r = nullptr;
  CHECK(modeta_eta_table(1, 0, 3, 1, 0, &r) == MODETA_ERR_PRECONDITION);
  CHECK(r == nullptr);

  CHECK(modeta_exit_code(MODETA_OK) == 0);
  CHECK(modeta_exit_code(MODETA_ERR_INTERNAL) == 1);
  CHECK(modeta_exit_code(MODETA_ERR_PARSE) == 2);
  CHECK(modeta_exit_code(MODETA_ERR_NOT_PRIMITIVE) == 2);
  CHECK(std::string(modeta_status_name(MODETA_ERR_NOT_CHARACTERISTIC)) == "not_characteristic");

  // success clears the message
  CHECK(modeta_is_characteristic(two.p, even_entry.p, &out) == MODETA_OK);
  CHECK(std::string(modeta_last_error()).empty());
}

TEST_CASE("reports") {
  Form cp2("diag(1)");
  Class x("1");
  modeta_report* r = nullptr;
  REQUIRE(modeta_classify(cp2.p, x.p, 2, 0, &r) == MODETA_OK);
  CHECK(contains(modeta_report_json(r), "\"X(1) = RP^5\""));
  CHECK(contains(modeta_report_text(r), "type: III"));
  modeta_report_free(r);

  REQUIRE(modeta_eta_closed_form(cp2.p, x.p, 2, &r) == MODETA_OK);
  CHECK(contains(modeta_report_json(r), "\"-1/8\""));
  modeta_report_free(r);

  REQUIRE(modeta_eta_table(2, 0, 3, 1, 0, &r) == MODETA_OK);
  CHECK(contains(modeta_report_text(r), "distinct_count: 3"));
  modeta_report_free(r);

  int bound = 0;
  CHECK(modeta_moduli_lower_bound(2, 0, 10, -1, 0, &bound) == MODETA_OK);
  CHECK(bound == 10);

  REQUIRE(modeta_quotients_for(3, 0, 1, 0, &r) == MODETA_OK);
  CHECK(contains(modeta_report_json(r), "\"CP^2\""));
  modeta_report_free(r);
  CHECK(modeta_quotients_for(2, 2, 0, 0, &r) == MODETA_ERR_PRECONDITION);

  std::int64_t failures = -1;
  REQUIRE(modeta_verify(2, 2, &r, &failures) == MODETA_OK);
  CHECK(failures == 0);
  modeta_report_free(r);

  modeta_report_free(nullptr);
  CHECK(std::string(modeta_report_json(nullptr)).empty());
}
