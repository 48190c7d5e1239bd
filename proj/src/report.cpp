#include "modeta/report.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace modeta {

namespace {

constexpr Epsilon kBranches[] = {Epsilon::plus, Epsilon::minus};

const char* branch_key(Epsilon eps) { return eps == Epsilon::plus ? "+1" : "-1"; }

// One value when epsilon is pinned, otherwise {"+1": ..., "-1": ...}.
Json by_epsilon(std::optional<Epsilon> eps, const std::function<Json(Epsilon)>& value) {
  if (eps) return value(*eps);
  Json out = Json::object();
  for (Epsilon e : kBranches) out[branch_key(e)] = value(e);
  return out;
}

Json epsilon_json(std::optional<Epsilon> eps) {
  if (eps) return sign_of(*eps);
  return nullptr;
}

Json name_json(const StandardName& name) {
  return {{"q", name.q}, {"summands", name.summands}, {"name", name.to_string()}};
}

Json quotient_json(const StandardQuotient& quotient, const FiveManifoldClass& manifold) {
  Json out;
  out["kind"] = quotient.kind == StandardQuotient::Kind::s2_cross_s2 ? "s2xs2" : "projective";
  out["a"] = quotient.a;
  out["b"] = quotient.b;
  out["c"] = quotient.c;
  out["pin_residue"] = quotient.pin_residue ? Json(*quotient.pin_residue) : Json(nullptr);
  out["l"] = quotient.l ? Json(*quotient.l) : Json(nullptr);
  out["form"] = quotient.form().to_string();
  out["name"] = quotient.name();
  out["member"] = quotient_membership(manifold, quotient.form());
  return out;
}

}  // namespace

Json to_json(const FiveManifoldClass& manifold) {
  Json out;
  out["fundamental_group_order"] = manifold.fundamental_group_order;
  out["b2"] = manifold.b2;
  out["orientable"] = manifold.orientable;
  out["h2_torsion_free"] = manifold.h2_torsion_free;
  out["type"] = type_name(manifold.type);
  if (manifold.pin_plus) {
    out["pin_plus"] = manifold.pin_plus->value();
    out["pin_plus_up_to_sign"] = manifold.pin_plus->up_to_sign();
  }
  if (manifold.standard_name) out["standard_name"] = name_json(*manifold.standard_name);
  if (manifold.type_one_q) {
    out["type_one_q"] = *manifold.type_one_q;
    out["type_one_s"] = *manifold.type_one_s;
    out["exception"] = exception_name(manifold.exception);
    out["may_be_exceptional"] = manifold.may_be_exceptional();
    out["name_status"] = "invariants only; the diffeomorphism name comes from the external Type I classification";
  }
  return out;
}

Json classify_report(const BundleSpec& spec, std::optional<Epsilon> eps) {
  Json out;
  out["command"] = "classify";
  out["base"] = spec.base().to_string();
  out["d"] = spec.primitive_class().to_string();
  out["k"] = spec.multiplier();
  out["chern_class"] = spec.chern_class().to_string();
  out["epsilon"] = epsilon_json(eps);

  const FiveManifoldClass reference = classify_total_space(spec, eps.value_or(Epsilon::plus));
  Json common = to_json(reference);
  if (reference.type != ManifoldType::type_three || eps) {
    out.update(common);
    return out;
  }
  // Type III with epsilon open: the pin class and the name split.
  for (auto& [key, value] : common.items()) {
    if (key == "pin_plus" || key == "pin_plus_up_to_sign" || key == "standard_name") {
      out[key] = by_epsilon(eps, [&](Epsilon e) { return to_json(classify_total_space(spec, e))[key]; });
    } else {
      out[key] = value;
    }
  }
  return out;
}

Json cobordism_report(const IntersectionForm& form, const CohomologyClass& d, std::optional<Epsilon> eps) {
  const SpincClass cls = spinc_class(form, d);
  Json out;
  out["command"] = "cobordism";
  out["base"] = form.to_string();
  out["d"] = d.to_string();
  out["signature"] = form.signature();
  out["d_squared"] = cls.d_squared();
  out["index"] = cls.index();
  out["epsilon"] = epsilon_json(eps);
  out["beta"] = by_epsilon(eps, [&](Epsilon e) { return Json(beta(form, d, e).value()); });
  out["beta_plus"] = beta(form, d, Epsilon::plus).value();
  out["beta_minus"] = beta(form, d, Epsilon::minus).value();
  return out;
}

Json quotients_report(const FiveManifoldClass& manifold) {
  Json out;
  out["type"] = type_name(manifold.type);
  out["b2"] = manifold.b2;
  if (manifold.pin_plus) out["pin_plus"] = manifold.pin_plus->value();
  Json list = Json::array();
  for (const auto& quotient : enumerate_standard_quotients(manifold)) list.push_back(quotient_json(quotient, manifold));
  out["quotients"] = std::move(list);
  return out;
}

Json quotients_report(const BundleSpec& spec, std::optional<Epsilon> eps) {
  Json out;
  out["command"] = "quotients";
  out["base"] = spec.base().to_string();
  out["d"] = spec.primitive_class().to_string();
  out["k"] = spec.multiplier();
  out["epsilon"] = epsilon_json(eps);
  const FiveManifoldClass reference = classify_total_space(spec, eps.value_or(Epsilon::plus));
  out["type"] = type_name(reference.type);
  out["b2"] = reference.b2;
  out["base_is_member"] = by_epsilon(
      eps, [&](Epsilon e) { return Json(quotient_membership(classify_total_space(spec, e), spec.base())); });
  if (reference.type == ManifoldType::type_three && !eps) {
    out["pin_plus"] = by_epsilon(eps, [&](Epsilon e) { return Json(classify_total_space(spec, e).pin_plus->value()); });
    out["quotients"] =
        by_epsilon(eps, [&](Epsilon e) { return quotients_report(classify_total_space(spec, e))["quotients"]; });
  } else {
    Json inner = quotients_report(reference);
    if (inner.contains("pin_plus")) out["pin_plus"] = inner["pin_plus"];
    out["quotients"] = inner["quotients"];
  }
  return out;
}

Json family_type_three_report(const IntersectionForm& form, int target, int count, std::optional<Epsilon> eps) {
  Json out;
  out["command"] = "family";
  out["type"] = "III";
  out["base"] = form.to_string();
  out["target"] = target;
  out["epsilon"] = epsilon_json(eps);
  out["congruence"] = by_epsilon(eps, [&](Epsilon e) {
    const auto& counts = form.diagonal_counts();
    // With a = 0 the first coordinate is negative, so the solved residue flips.
    const int c = counts && counts->first == 0 ? (4 - target % 4) % 4 : target;
    const CongruenceSolution sol = solve_k_congruence(c, e);
    return Json{{"c", c}, {"smallest", sol.smallest}, {"period", sol.period}, {"residues", sol.residues}};
  });
  out["members"] = by_epsilon(eps, [&](Epsilon e) {
    Json rows = Json::array();
    for (const auto& member : chern_family_type_three(form, target, count, e)) {
      rows.push_back({{"k", member.k},
                      {"d", member.d.to_string()},
                      {"d_squared", square(form, member.d)},
                      {"beta", beta(form, member.d, e).value()}});
    }
    return rows;
  });
  return out;
}

Json family_type_one_report(const IntersectionForm& form, int q, int count) {
  Json out;
  out["command"] = "family";
  out["type"] = "I";
  out["base"] = form.to_string();
  out["q"] = q;
  Json rows = Json::array();
  for (const auto& member : chern_family_type_one(q, form, count)) {
    const std::int64_t d2 = square(form, member.d);
    rows.push_back({{"k", member.k},
                    {"d", member.d.to_string()},
                    {"d_squared", d2},
                    {"d_squared_mod8", mod_floor(d2, 8)}});
  }
  out["members"] = std::move(rows);
  return out;
}

Json eta_table_report(int a, int b, int count, std::optional<Epsilon> eps, int target) {
  Json out;
  out["command"] = "eta-table";
  out["a"] = a;
  out["b"] = b;
  out["K"] = count;
  out["target"] = target;
  out["epsilon"] = epsilon_json(eps);
  out["ell"] = 2;
  std::map<Epsilon, EtaFamilyReport> reports;
  for (Epsilon e : kBranches) {
    if (!eps || *eps == e) reports.emplace(e, eta_family_table(a, b, count, e, target));
  }
  out["rows"] = by_epsilon(eps, [&](Epsilon e) {
    Json rows = Json::array();
    for (const auto& row : reports.at(e).rows) {
      rows.push_back({{"k", row.k}, {"d", row.d.to_string()}, {"d_squared", row.d_squared}, {"eta", row.eta.to_string()}});
    }
    return rows;
  });
  out["distinct_count"] = by_epsilon(eps, [&](Epsilon e) { return Json(reports.at(e).distinct_count); });
  return out;
}

namespace {

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

bool is_scalar(const Json& value) { return !value.is_object() && !value.is_array(); }

bool is_table(const Json& value) {
  if (!value.is_array() || value.empty()) return false;
  const Json& first = value.front();
  if (!first.is_object()) return false;
  std::vector<std::string> keys;
  for (const auto& item : first.items()) keys.push_back(item.key());
  for (const auto& row : value) {
    if (!row.is_object() || row.size() != keys.size()) return false;
    std::size_t i = 0;
    for (const auto& item : row.items()) {
      if (item.key() != keys[i++]) return false;
    }
  }
  return true;
}

void render_table(const std::string& key, const Json& rows, std::ostringstream& out) {
  std::vector<std::string> header;
  for (const auto& item : rows.front().items()) header.push_back(item.key());
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    std::size_t i = 0;
    for (const auto& item : row.items()) {
      line.push_back(is_scalar(item.value()) ? scalar_text(item.value()) : item.value().dump());
      width[i] = std::max(width[i], line.back().size());
      ++i;
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    out << " ";
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << ' ' << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 1, ' ');
    }
    out << '\n';
  };
  out << key << ":\n";
  emit(header);
  for (const auto& line : cells) emit(line);
}

void render(const std::string& key, const Json& value, std::ostringstream& out) {
  if (value.is_object()) {
    for (const auto& item : value.items()) render(key.empty() ? item.key() : key + "." + item.key(), item.value(), out);
    return;
  }
  if (value.is_array()) {
    if (is_table(value)) {
      render_table(key, value, out);
      return;
    }
    if (std::all_of(value.begin(), value.end(), is_scalar)) {
      out << key << ": [";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar_text(value[i]);
      out << "]\n";
      return;
    }
    for (std::size_t i = 0; i < value.size(); ++i) render(key + "[" + std::to_string(i) + "]", value[i], out);
    return;
  }
  out << key << ": " << scalar_text(value) << '\n';
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render("", report, out);
  return out.str();
}

}  // namespace modeta
