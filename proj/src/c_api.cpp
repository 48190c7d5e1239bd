#include "modeta/modeta.h"

#include <functional>
#include <new>
#include <string>

#include "modeta/error.hpp"
#include "modeta/report.hpp"
#include "modeta/verify.hpp"

struct modeta_form {
  modeta::IntersectionForm value;
};

struct modeta_class {
  modeta::CohomologyClass value;
};

struct modeta_report {
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

modeta_status status_for(modeta::ErrorCode code) {
  using modeta::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return MODETA_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse: return MODETA_ERR_PARSE;
    case ErrorCode::dimension_mismatch: return MODETA_ERR_DIMENSION_MISMATCH;
    case ErrorCode::not_characteristic: return MODETA_ERR_NOT_CHARACTERISTIC;
    case ErrorCode::not_primitive: return MODETA_ERR_NOT_PRIMITIVE;
    case ErrorCode::precondition: return MODETA_ERR_PRECONDITION;
    case ErrorCode::unsolvable: return MODETA_ERR_UNSOLVABLE;
    case ErrorCode::internal: return MODETA_ERR_INTERNAL;
  }
  return MODETA_ERR_INTERNAL;
}

modeta_status guarded(const std::function<void()>& body) {
  last_error.clear();
  try {
    body();
    return MODETA_OK;
  } catch (const modeta::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return MODETA_ERR_INTERNAL;
}

template <typename T>
void require(const T* pointer, const char* what) {
  if (pointer == nullptr) modeta::fail(modeta::ErrorCode::invalid_argument, std::string(what) + " is null");
}

std::optional<modeta::Epsilon> optional_epsilon(int value) {
  if (value == 0) return std::nullopt;
  return modeta::epsilon_from_int(value);
}

void emit(const modeta::Json& report, modeta_report** out) {
  require(out, "output pointer");
  *out = new modeta_report{report.dump(2), modeta::render_text(report)};
}

}  // namespace

extern "C" {

const char* modeta_version(void) { return "1.0.0"; }

const char* modeta_status_name(modeta_status status) {
  switch (status) {
    case MODETA_OK: return "ok";
    case MODETA_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case MODETA_ERR_PARSE: return "parse";
    case MODETA_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case MODETA_ERR_NOT_CHARACTERISTIC: return "not_characteristic";
    case MODETA_ERR_NOT_PRIMITIVE: return "not_primitive";
    case MODETA_ERR_PRECONDITION: return "precondition";
    case MODETA_ERR_UNSOLVABLE: return "unsolvable";
    case MODETA_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* modeta_last_error(void) { return last_error.c_str(); }

int modeta_exit_code(modeta_status status) {
  if (status == MODETA_OK) return 0;
  if (status == MODETA_ERR_INTERNAL || status == MODETA_ERR_UNSOLVABLE) return 1;
  return 2;
}

modeta_status modeta_form_parse(const char* text, modeta_form** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new modeta_form{modeta::parse_form(text)};
  });
}

modeta_status modeta_form_connected_sum(int a, int b, int c, modeta_form** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new modeta_form{modeta::IntersectionForm::connected_sum(a, b, c)};
  });
}

void modeta_form_free(modeta_form* form) { delete form; }
int modeta_form_rank(const modeta_form* form) { return form ? form->value.rank() : -1; }
int modeta_form_signature(const modeta_form* form) { return form ? form->value.signature() : 0; }
int modeta_form_is_spin(const modeta_form* form) { return form && form->value.is_spin() ? 1 : 0; }

modeta_status modeta_class_parse(const char* text, modeta_class** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output pointer");
    *out = new modeta_class{modeta::parse_class(text)};
  });
}

modeta_status modeta_class_from_coords(const int64_t* coords, size_t rank, modeta_class** out) {
  return guarded([&] {
    if (rank > 0) require(coords, "coords");
    require(out, "output pointer");
    *out = new modeta_class{modeta::CohomologyClass(std::vector<std::int64_t>(coords, coords + rank))};
  });
}

void modeta_class_free(modeta_class* cls) { delete cls; }
int modeta_class_rank(const modeta_class* cls) { return cls ? cls->value.rank() : -1; }

modeta_status modeta_pairing(const modeta_form* form, const modeta_class* x, const modeta_class* y, int64_t* out) {
  return guarded([&] {
    require(form, "form");
    require(x, "x");
    require(y, "y");
    require(out, "output pointer");
    *out = modeta::pairing(form->value, x->value, y->value);
  });
}

modeta_status modeta_is_characteristic(const modeta_form* form, const modeta_class* d, int* out) {
  return guarded([&] {
    require(form, "form");
    require(d, "d");
    require(out, "output pointer");
    *out = modeta::is_characteristic(form->value, d->value) ? 1 : 0;
  });
}

modeta_status modeta_is_primitive(const modeta_class* d, int* out) {
  return guarded([&] {
    require(d, "d");
    require(out, "output pointer");
    *out = modeta::is_primitive(d->value) ? 1 : 0;
  });
}

modeta_status modeta_spinc_class(const modeta_form* form, const modeta_class* d, int64_t* d_squared, int64_t* index) {
  return guarded([&] {
    require(form, "form");
    require(d, "d");
    require(d_squared, "d_squared");
    require(index, "index");
    const auto cls = modeta::spinc_class(form->value, d->value);
    *d_squared = cls.d_squared();
    *index = cls.index();
  });
}

modeta_status modeta_beta(const modeta_form* form, const modeta_class* d, int epsilon, int* out) {
  return guarded([&] {
    require(form, "form");
    require(d, "d");
    require(out, "output pointer");
    *out = modeta::beta(form->value, d->value, modeta::epsilon_from_int(epsilon)).value();
  });
}

modeta_status modeta_count_type_three(const modeta_form* form, int* out) {
  return guarded([&] {
    require(form, "form");
    require(out, "output pointer");
    *out = modeta::count_type_three_diffeo_types(form->value);
  });
}

modeta_status modeta_classify(const modeta_form* base, const modeta_class* d, int k, int epsilon, modeta_report** out) {
  return guarded([&] {
    require(base, "base");
    require(d, "d");
    emit(modeta::classify_report(modeta::BundleSpec(base->value, k, d->value), optional_epsilon(epsilon)), out);
  });
}

modeta_status modeta_quotients(const modeta_form* base, const modeta_class* d, int k, int epsilon,
                               modeta_report** out) {
  return guarded([&] {
    require(base, "base");
    require(d, "d");
    if (k != 2) modeta::fail(modeta::ErrorCode::precondition, "quotient sets need k = 2");
    emit(modeta::quotients_report(modeta::BundleSpec(base->value, k, d->value), optional_epsilon(epsilon)), out);
  });
}

modeta_status modeta_quotients_for(int type, int b2, int pin, int q, modeta_report** out) {
  return guarded([&] {
    using modeta::FiveManifoldClass;
    FiveManifoldClass manifold;
    switch (type) {
      case 1: manifold = FiveManifoldClass::type_one(b2, q); break;
      case 2: manifold = FiveManifoldClass::type_two(b2); break;
      case 3: manifold = FiveManifoldClass::type_three(b2, modeta::PinPlusClass(pin)); break;
      default: modeta::fail(modeta::ErrorCode::invalid_argument, "type must be 1, 2 or 3");
    }
    modeta::Json report;
    report["command"] = "quotients";
    report.update(modeta::quotients_report(manifold));
    emit(report, out);
  });
}

modeta_status modeta_cobordism(const modeta_form* base, const modeta_class* d, int epsilon, modeta_report** out) {
  return guarded([&] {
    require(base, "base");
    require(d, "d");
    emit(modeta::cobordism_report(base->value, d->value, optional_epsilon(epsilon)), out);
  });
}

modeta_status modeta_family_type_three(const modeta_form* base, int target, int count, int epsilon,
                                       modeta_report** out) {
  return guarded([&] {
    require(base, "base");
    emit(modeta::family_type_three_report(base->value, target, count, optional_epsilon(epsilon)), out);
  });
}

modeta_status modeta_family_type_one(const modeta_form* base, int q, int count, modeta_report** out) {
  return guarded([&] {
    require(base, "base");
    emit(modeta::family_type_one_report(base->value, q, count), out);
  });
}

modeta_status modeta_eta_closed_form(const modeta_form* base, const modeta_class* d, int ell, modeta_report** out) {
  return guarded([&] {
    require(base, "base");
    require(d, "d");
    modeta::Json report;
    report["command"] = "eta";
    report["base"] = base->value.to_string();
    report["d"] = d->value.to_string();
    report["ell"] = ell;
    report["eta"] = modeta::eta_closed_form_dim5(base->value, d->value, ell).to_string();
    emit(report, out);
  });
}

modeta_status modeta_eta_table(int a, int b, int count, int epsilon, int target, modeta_report** out) {
  return guarded([&] { emit(modeta::eta_table_report(a, b, count, optional_epsilon(epsilon), target), out); });
}

modeta_status modeta_moduli_lower_bound(int a, int b, int count, int epsilon, int target, int* out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = modeta::moduli_component_lower_bound(a, b, count, modeta::epsilon_from_int(epsilon), target);
  });
}

modeta_status modeta_verify(int max_rank, int max_coord, modeta_report** out, int64_t* failures) {
  return guarded([&] {
    const auto results = modeta::run_property_suites({max_rank, max_coord});
    modeta::Json report;
    report["command"] = "verify";
    report["max_rank"] = max_rank;
    report["max_coord"] = max_coord;
    modeta::Json rows = modeta::Json::array();
    std::int64_t failed = 0;
    for (const auto& r : results) {
      failed += r.failed;
      rows.push_back({{"property", r.name},
                      {"checked", r.checked},
                      {"failed", r.failed},
                      {"status", r.failed == 0 ? "pass" : "FAIL"},
                      {"first_failure", r.first_failure}});
    }
    report["properties"] = std::move(rows);
    report["failed"] = failed;
    report["passed"] = failed == 0;
    if (failures) *failures = failed;
    emit(report, out);
  });
}

const char* modeta_report_json(const modeta_report* report) { return report ? report->json.c_str() : ""; }
const char* modeta_report_text(const modeta_report* report) { return report ? report->text.c_str() : ""; }
void modeta_report_free(modeta_report* report) { delete report; }

}  // extern "C"
