// Linear programs over named variables with exact rational data. Variables
// carry a sign restriction (nonnegative or free); constraints carry unique
// labels so certificates and reports can reference them. The objective sense
// is always maximize. Serializes to/from the JSON wire format used by the
// CLI; rationals travel as "p/q" strings.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "declab/rational.hpp"

namespace declab {

enum class VarSign { NonNegative, Free };
enum class Rel { Le, Eq, Ge };

struct LpVar {
  std::string name;
  VarSign sign;
};

// variable index -> coefficient; zero coefficients are not stored
using LinComb = std::map<int, Rat>;

struct LpConstraint {
  std::string label;
  LinComb coeffs;
  Rel rel;
  Rat rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status;
  Rat value;                       // when Optimal
  std::map<std::string, Rat> point;  // when Optimal; a vertex, satisfies everything exactly
};

struct LpViolation {
  std::string label;
  Rat lhs;
  Rat rhs;
};

class LinearProgram {
 public:
  // Throws MalformedProgram on duplicate variable name.
  int add_variable(const std::string& name, VarSign sign);
  // Coefficients by variable name. Throws MalformedProgram on duplicate
  // label or unknown variable.
  void add_constraint(const std::string& label, const std::map<std::string, Rat>& coeffs,
                      Rel rel, const Rat& rhs);
  void set_objective(const std::map<std::string, Rat>& coeffs);

  int var_index(const std::string& name) const;  // MissingVariable when absent
  bool has_var(const std::string& name) const { return var_by_name_.count(name) != 0; }
  const std::vector<LpVar>& vars() const { return vars_; }
  const std::vector<LpConstraint>& constraints() const { return constraints_; }
  const LinComb& objective() const { return objective_; }
  // MalformedProgram when the label does not exist.
  const LpConstraint& constraint(const std::string& label) const;

  std::string to_json() const;
  static LinearProgram from_json(const std::string& text);  // MalformedProgram on bad input

 private:
  std::vector<LpVar> vars_;
  std::vector<LpConstraint> constraints_;
  LinComb objective_;
  std::map<std::string, int> var_by_name_;
  std::map<std::string, int> constraint_by_label_;
};

const char* to_string(Rel rel);
const char* to_string(VarSign sign);

}  // namespace declab
