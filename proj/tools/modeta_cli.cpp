// modeta command line front end. Talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "modeta/modeta.h"

namespace {

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using FormPtr = std::unique_ptr<modeta_form, Deleter<modeta_form, modeta_form_free>>;
using ClassPtr = std::unique_ptr<modeta_class, Deleter<modeta_class, modeta_class_free>>;
using ReportPtr = std::unique_ptr<modeta_report, Deleter<modeta_report, modeta_report_free>>;

struct Failure {
  modeta_status status;
  std::string message;
};

void check(modeta_status status) {
  if (status != MODETA_OK) throw Failure{status, modeta_last_error()};
}

void bad_input(const std::string& message) { throw Failure{MODETA_ERR_INVALID_ARGUMENT, message}; }

FormPtr parse_form(const std::string& text) {
  modeta_form* form = nullptr;
  check(modeta_form_parse(text.c_str(), &form));
  return FormPtr(form);
}

ClassPtr parse_class(const std::string& text) {
  modeta_class* cls = nullptr;
  check(modeta_class_parse(text.c_str(), &cls));
  return ClassPtr(cls);
}

// "+1", "1", "-1"; "both", "0" or empty leave epsilon open.
int parse_epsilon(const std::string& text) {
  if (text.empty() || text == "both" || text == "0") return 0;
  if (text == "1" || text == "+1" || text == "plus") return 1;
  if (text == "-1" || text == "minus") return -1;
  bad_input("epsilon must be +1, -1 or both, got '" + text + "'");
  return 0;
}

struct Options {
  bool json = false;
  std::string epsilon;
  std::string base;
  std::string d;
  int k = 2;
  std::string type;
  int b2 = 0;
  int pin = 0;
  int q = 0;
  int target = 0;
  int count = 10;
  int a = 0;
  int b = 0;
  int max_rank = 4;
  int max_coord = 3;
};

void print(const Options& opt, modeta_report* raw) {
  ReportPtr report(raw);
  if (opt.json) {
    std::cout << modeta_report_json(report.get()) << '\n';
  } else {
    std::cout << modeta_report_text(report.get());
  }
}

void need(const std::string& value, const char* flag) {
  if (value.empty()) bad_input(std::string(flag) + " is required");
}

int type_number(const std::string& type) {
  if (type == "I" || type == "1") return 1;
  if (type == "II" || type == "2") return 2;
  if (type == "III" || type == "3") return 3;
  bad_input("type must be I, II or III, got '" + type + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circle bundle 5-manifolds with fundamental group Z/2: classification, Pin+ invariants, eta invariants"};
  app.require_subcommand(1);
  Options opt;

  app.add_flag("--json", opt.json, "Print JSON instead of text");
  app.add_option("--epsilon", opt.epsilon, "Sign in beta: +1, -1 or both (default both)")
      ->envname("MODETA_EPSILON");

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Print JSON instead of text");
    sub->add_option("--epsilon", opt.epsilon, "Sign in beta: +1, -1 or both")->envname("MODETA_EPSILON");
  };

  auto* classify = app.add_subcommand("classify", "Classify the total space of a circle bundle");
  add_common(classify);
  classify->add_option("--base", opt.base, "Intersection form, e.g. diag(1,1,-1), diagonal(2,1), even(1)")->required();
  classify->add_option("--d", opt.d, "Primitive class, e.g. 3,1,1")->required();
  classify->add_option("--k", opt.k, "Multiplier, c1 = k d")->capture_default_str();

  auto* quotients = app.add_subcommand("quotients", "Standard quotients of a total space");
  add_common(quotients);
  quotients->add_option("--base", opt.base, "Intersection form of a base");
  quotients->add_option("--d", opt.d, "Primitive class on the base");
  quotients->add_option("--k", opt.k, "Multiplier (must be 2)")->capture_default_str();
  quotients->add_option("--type", opt.type, "Manifold type I, II or III (instead of --base)");
  quotients->add_option("--b2", opt.b2, "b2 of the manifold");
  quotients->add_option("--pin", opt.pin, "Pin+ class for type III");
  quotients->add_option("--q", opt.q, "q for type I");

  auto* family = app.add_subcommand("family", "Chern class families d_k");
  add_common(family);
  family->add_option("--base", opt.base, "Diagonal form diagonal(a,b)")->required();
  family->add_option("--type", opt.type, "III (default) or I");
  family->add_option("--c", opt.target, "Type III target residue c in 0..3")->capture_default_str();
  family->add_option("--q", opt.q, "Type I residue q in 0..4");
  family->add_option("--K", opt.count, "Number of members")->capture_default_str();

  auto* cobordism = app.add_subcommand("cobordism", "Spin^c numbers and beta for both signs");
  add_common(cobordism);
  cobordism->add_option("--base", opt.base, "Intersection form")->required();
  cobordism->add_option("--d", opt.d, "Characteristic primitive class")->required();

  auto* eta = app.add_subcommand("eta-table", "Eta invariants along a type III family");
  add_common(eta);
  eta->add_option("--a", opt.a, "Number of CP^2 summands")->required();
  eta->add_option("--b", opt.b, "Number of -CP^2 summands")->required();
  eta->add_option("--K", opt.count, "Number of family members")->capture_default_str();
  eta->add_option("--c", opt.target, "Target residue c in 0..3")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the enumeration property suites");
  add_common(verify);
  verify->add_option("--max-rank", opt.max_rank, "Largest form rank (1..8)")->capture_default_str();
  verify->add_option("--max-coord", opt.max_coord, "Coordinate bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const int eps = parse_epsilon(opt.epsilon);
    modeta_report* report = nullptr;
    if (classify->parsed()) {
      auto base = parse_form(opt.base);
      auto d = parse_class(opt.d);
      check(modeta_classify(base.get(), d.get(), opt.k, eps, &report));
    } else if (quotients->parsed()) {
      if (!opt.type.empty()) {
        check(modeta_quotients_for(type_number(opt.type), opt.b2, opt.pin, opt.q, &report));
      } else {
        need(opt.base, "--base (or --type)");
        need(opt.d, "--d");
        auto base = parse_form(opt.base);
        auto d = parse_class(opt.d);
        check(modeta_quotients(base.get(), d.get(), opt.k, eps, &report));
      }
    } else if (family->parsed()) {
      auto base = parse_form(opt.base);
      const int type = opt.type.empty() ? 3 : type_number(opt.type);
      if (type == 3) {
        check(modeta_family_type_three(base.get(), opt.target, opt.count, eps, &report));
      } else if (type == 1) {
        check(modeta_family_type_one(base.get(), opt.q, opt.count, &report));
      } else {
        bad_input("families exist for types I and III only");
      }
    } else if (cobordism->parsed()) {
      auto base = parse_form(opt.base);
      auto d = parse_class(opt.d);
      check(modeta_cobordism(base.get(), d.get(), eps, &report));
    } else if (eta->parsed()) {
      check(modeta_eta_table(opt.a, opt.b, opt.count, eps, opt.target, &report));
    } else if (verify->parsed()) {
      int64_t failures = 0;
      check(modeta_verify(opt.max_rank, opt.max_coord, &report, &failures));
      print(opt, report);
      return failures == 0 ? 0 : 1;
    }
    print(opt, report);
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error (" << modeta_status_name(f.status) << "): " << f.message << '\n';
    return modeta_exit_code(f.status);
  }
}
