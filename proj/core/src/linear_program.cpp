#include "declab/linear_program.hpp"

#include <nlohmann/json.hpp>

#include "declab/errors.hpp"

namespace declab {

using ojson = nlohmann::ordered_json;

int LinearProgram::add_variable(const std::string& name, VarSign sign) {
  if (name.empty()) throw MalformedProgram("empty variable name");
  if (var_by_name_.count(name)) throw MalformedProgram("duplicate variable \"" + name + "\"");
  int ix = static_cast<int>(vars_.size());
  vars_.push_back({name, sign});
  var_by_name_[name] = ix;
  return ix;
}

void LinearProgram::add_constraint(const std::string& label,
                                   const std::map<std::string, Rat>& coeffs, Rel rel,
                                   const Rat& rhs) {
  if (label.empty()) throw MalformedProgram("empty constraint label");
  if (constraint_by_label_.count(label))
    throw MalformedProgram("duplicate constraint label \"" + label + "\"");
  LpConstraint c;
  c.label = label;
  c.rel = rel;
  c.rhs = rhs;
  for (const auto& [name, coeff] : coeffs) {
    auto it = var_by_name_.find(name);
    if (it == var_by_name_.end())
      throw MalformedProgram("constraint \"" + label + "\" references unknown variable \"" +
                             name + "\"");
    if (coeff != 0) c.coeffs[it->second] = coeff;
  }
  constraint_by_label_[label] = static_cast<int>(constraints_.size());
  constraints_.push_back(std::move(c));
}

void LinearProgram::set_objective(const std::map<std::string, Rat>& coeffs) {
  objective_.clear();
  for (const auto& [name, coeff] : coeffs) {
    auto it = var_by_name_.find(name);
    if (it == var_by_name_.end())
      throw MalformedProgram("objective references unknown variable \"" + name + "\"");
    if (coeff != 0) objective_[it->second] = coeff;
  }
}

int LinearProgram::var_index(const std::string& name) const {
  auto it = var_by_name_.find(name);
  if (it == var_by_name_.end()) throw MissingVariable("unknown variable \"" + name + "\"");
  return it->second;
}

const LpConstraint& LinearProgram::constraint(const std::string& label) const {
  auto it = constraint_by_label_.find(label);
  if (it == constraint_by_label_.end())
    throw MalformedProgram("no constraint labeled \"" + label + "\"");
  return constraints_[static_cast<std::size_t>(it->second)];
}

const char* to_string(Rel rel) {
  switch (rel) {
    case Rel::Le: return "<=";
    case Rel::Eq: return "=";
    case Rel::Ge: return ">=";
  }
  return "?";
}

const char* to_string(VarSign sign) {
  return sign == VarSign::Free ? "free" : "nonnegative";
}

namespace {

Rel rel_from_string(const std::string& s) {
  if (s == "<=") return Rel::Le;
  if (s == "=") return Rel::Eq;
  if (s == ">=") return Rel::Ge;
  throw MalformedProgram("bad relation \"" + s + "\" (want \"<=\", \"=\", \">=\")");
}

VarSign sign_from_string(const std::string& s) {
  if (s == "nonnegative") return VarSign::NonNegative;
  if (s == "free") return VarSign::Free;
  throw MalformedProgram("bad sign \"" + s + "\" (want \"nonnegative\" or \"free\")");
}

Rat rat_from_json(const nlohmann::json& j, const char* where) {
  if (!j.is_string()) throw MalformedProgram(std::string(where) + ": rational must be a string");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw MalformedProgram(std::string(where) + ": " + e.what());
  }
}

}  // namespace

std::string LinearProgram::to_json() const {
  ojson doc;
  doc["vars"] = ojson::array();
  for (const auto& v : vars_)
    doc["vars"].push_back(ojson{{"name", v.name}, {"sign", to_string(v.sign)}});
  doc["constraints"] = ojson::array();
  for (const auto& c : constraints_) {
    ojson coeffs = ojson::object();
    for (const auto& [ix, coeff] : c.coeffs)
      coeffs[vars_[static_cast<std::size_t>(ix)].name] = coeff.str();
    doc["constraints"].push_back(ojson{{"label", c.label},
                                       {"coeffs", std::move(coeffs)},
                                       {"rel", to_string(c.rel)},
                                       {"rhs", c.rhs.str()}});
  }
  ojson obj_coeffs = ojson::object();
  for (const auto& [ix, coeff] : objective_)
    obj_coeffs[vars_[static_cast<std::size_t>(ix)].name] = coeff.str();
  doc["objective"] = ojson{{"coeffs", std::move(obj_coeffs)}, {"sense", "max"}};
  return doc.dump(2);
}

LinearProgram LinearProgram::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedProgram(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("constraints"))
    throw MalformedProgram("expected object with \"vars\" and \"constraints\"");
  LinearProgram lp;
  if (!doc["vars"].is_array()) throw MalformedProgram("\"vars\" must be an array");
  for (const auto& v : doc["vars"]) {
    if (!v.is_object() || !v.contains("name") || !v.contains("sign"))
      throw MalformedProgram("each var needs \"name\" and \"sign\"");
    lp.add_variable(v["name"].get<std::string>(), sign_from_string(v["sign"].get<std::string>()));
  }
  if (!doc["constraints"].is_array()) throw MalformedProgram("\"constraints\" must be an array");
  for (const auto& c : doc["constraints"]) {
    if (!c.is_object() || !c.contains("label") || !c.contains("coeffs") || !c.contains("rel") ||
        !c.contains("rhs"))
      throw MalformedProgram("each constraint needs \"label\", \"coeffs\", \"rel\", \"rhs\"");
    std::map<std::string, Rat> coeffs;
    if (!c["coeffs"].is_object()) throw MalformedProgram("\"coeffs\" must be an object");
    for (const auto& [name, val] : c["coeffs"].items())
      coeffs[name] = rat_from_json(val, "coeffs");
    lp.add_constraint(c["label"].get<std::string>(), coeffs,
                      rel_from_string(c["rel"].get<std::string>()),
                      rat_from_json(c["rhs"], "rhs"));
  }
  if (doc.contains("objective")) {
    const auto& o = doc["objective"];
    if (!o.is_object() || !o.contains("coeffs") || !o["coeffs"].is_object())
      throw MalformedProgram("\"objective\" must be an object with \"coeffs\"");
    if (o.contains("sense") && o["sense"].get<std::string>() != "max")
      throw MalformedProgram("objective sense must be \"max\"");
    std::map<std::string, Rat> coeffs;
    for (const auto& [name, val] : o["coeffs"].items())
      coeffs[name] = rat_from_json(val, "objective");
    lp.set_objective(coeffs);
  }
  return lp;
}

}  // namespace declab
