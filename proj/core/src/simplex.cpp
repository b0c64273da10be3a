#include "declab/simplex.hpp"

#include <algorithm>

#include "declab/errors.hpp"

namespace declab {

namespace {

// Dense tableau over Rat. Columns: structural (split) | slack | artificial,
// rhs kept separately. Basis tracked per row. Bland's rule: entering column
// is the lowest-index column with negative reduced cost, leaving row is the
// ratio-test minimum with ties broken by lowest basic column index.
struct Tableau {
  int ncols = 0;
  std::vector<std::vector<Rat>> a;  // m x ncols
  std::vector<Rat> rhs;             // m
  std::vector<int> basis;           // m, column index basic in that row
  std::vector<bool> banned;         // columns excluded from pricing (artificials)

  int rows() const { return static_cast<int>(a.size()); }

  void pivot(int r, int c) {
    Rat piv = a[r][c];
    for (auto& x : a[r]) x /= piv;
    rhs[r] /= piv;
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      Rat f = a[i][c];
      if (f == 0) continue;
      for (int j = 0; j < ncols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Reduced-cost row for objective c (maximize): d[j] = z_j - c_j, value = z.
  // Optimal when every unbanned d[j] >= 0.
  void reduced_costs(const std::vector<Rat>& cost, std::vector<Rat>& d, Rat& value) const {
    d.assign(static_cast<std::size_t>(ncols), Rat(0));
    value = 0;
    for (int i = 0; i < rows(); ++i) {
      const Rat& cb = cost[static_cast<std::size_t>(basis[i])];
      if (cb == 0) continue;
      for (int j = 0; j < ncols; ++j)
        if (a[i][j] != 0) d[static_cast<std::size_t>(j)] += cb * a[i][j];
      value += cb * rhs[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < ncols; ++j) d[static_cast<std::size_t>(j)] -= cost[static_cast<std::size_t>(j)];
  }

  // Runs Bland pivoting for the given cost vector. Returns false when the
  // objective is unbounded above, true at optimality.
  bool optimize(const std::vector<Rat>& cost) {
    std::vector<Rat> d;
    Rat value;
    for (;;) {
      reduced_costs(cost, d, value);
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        if (banned[static_cast<std::size_t>(j)]) continue;
        if (d[static_cast<std::size_t>(j)] < 0) { enter = j; break; }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < rows(); ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = rhs[static_cast<std::size_t>(i)] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

// Recomputing reduced costs from scratch each iteration keeps the code
// simple and obviously correct; problems here are tiny (spec caps ~200
// variables), so the O(m n) refresh per pivot is immaterial.

Rat eval_comb(const LinComb& comb, const std::vector<Rat>& x) {
  Rat v = 0;
  for (const auto& [ix, coeff] : comb) v += coeff * x[static_cast<std::size_t>(ix)];
  return v;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const auto& vars = lp.vars();
  const auto& cons = lp.constraints();
  const int nvars = static_cast<int>(vars.size());

  // Column layout for structural variables: nonneg -> one column,
  // free -> plus and minus columns.
  std::vector<std::pair<int, int>> col_of;  // (plus, minus or -1)
  col_of.reserve(static_cast<std::size_t>(nvars));
  int ncols = 0;
  for (const auto& v : vars) {
    if (v.sign == VarSign::Free) {
      col_of.emplace_back(ncols, ncols + 1);
      ncols += 2;
    } else {
      col_of.emplace_back(ncols, -1);
      ncols += 1;
    }
  }
  const int nstruct = ncols;

  const int m = static_cast<int>(cons.size());
  Tableau t;
  t.a.assign(static_cast<std::size_t>(m), {});
  t.rhs.assign(static_cast<std::size_t>(m), Rat(0));
  t.basis.assign(static_cast<std::size_t>(m), -1);

  // slack columns for inequality rows
  int nslack = 0;
  for (const auto& c : cons)
    if (c.rel != Rel::Eq) ++nslack;
  t.ncols = nstruct + nslack;  // artificials appended below

  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(m));
  int slack_at = nstruct;
  for (int i = 0; i < m; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    row.assign(static_cast<std::size_t>(nstruct + nslack), Rat(0));
    Rat sgn = cons[static_cast<std::size_t>(i)].rel == Rel::Ge ? Rat(-1) : Rat(1);
    for (const auto& [ix, coeff] : cons[static_cast<std::size_t>(i)].coeffs) {
      auto [plus, minus] = col_of[static_cast<std::size_t>(ix)];
      row[static_cast<std::size_t>(plus)] += sgn * coeff;
      if (minus >= 0) row[static_cast<std::size_t>(minus)] -= sgn * coeff;
    }
    t.rhs[static_cast<std::size_t>(i)] = sgn * cons[static_cast<std::size_t>(i)].rhs;
    if (cons[static_cast<std::size_t>(i)].rel != Rel::Eq)
      row[static_cast<std::size_t>(slack_at++)] = 1;  // Ge already flipped to Le
  }
  // Normalize rhs >= 0, then pick a starting basis: a +1 slack where
  // available, otherwise an artificial column.
  std::vector<int> artificial_of(static_cast<std::size_t>(m), -1);
  int nart = 0;
  slack_at = nstruct;
  for (int i = 0; i < m; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    int slack_col = cons[static_cast<std::size_t>(i)].rel != Rel::Eq ? slack_at++ : -1;
    if (t.rhs[static_cast<std::size_t>(i)] < 0) {
      for (auto& x : row) x = -x;
      t.rhs[static_cast<std::size_t>(i)] = -t.rhs[static_cast<std::size_t>(i)];
    }
    if (slack_col >= 0 && row[static_cast<std::size_t>(slack_col)] == 1) {
      t.basis[static_cast<std::size_t>(i)] = slack_col;
    } else {
      artificial_of[static_cast<std::size_t>(i)] = nart++;
    }
  }
  const int total = nstruct + nslack + nart;
  t.ncols = total;
  t.banned.assign(static_cast<std::size_t>(total), false);
  for (int i = 0; i < m; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(total), Rat(0));
    if (artificial_of[static_cast<std::size_t>(i)] >= 0) {
      int col = nstruct + nslack + artificial_of[static_cast<std::size_t>(i)];
      row[static_cast<std::size_t>(col)] = 1;
      t.basis[static_cast<std::size_t>(i)] = col;
    }
    t.a[static_cast<std::size_t>(i)] = std::move(row);
  }

  // Phase 1: maximize -(sum of artificials).
  if (nart > 0) {
    std::vector<Rat> cost1(static_cast<std::size_t>(total), Rat(0));
    for (int j = nstruct + nslack; j < total; ++j) cost1[static_cast<std::size_t>(j)] = -1;
    bool ok = t.optimize(cost1);
    (void)ok;  // phase-1 objective is bounded above by 0
    Rat infeas = 0;
    for (int i = 0; i < m; ++i)
      if (t.basis[static_cast<std::size_t>(i)] >= nstruct + nslack)
        infeas += t.rhs[static_cast<std::size_t>(i)];
    if (infeas != 0) return LpSolution{LpStatus::Infeasible, Rat(0), {}};
    // Drive leftover artificials (value 0) out of the basis; a row with no
    // nonartificial entry is redundant and can stay pinned at zero.
    for (int i = 0; i < m; ++i) {
      if (t.basis[static_cast<std::size_t>(i)] < nstruct + nslack) continue;
      for (int j = 0; j < nstruct + nslack; ++j) {
        if (t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
          t.pivot(i, j);
          break;
        }
      }
    }
    for (int j = nstruct + nslack; j < total; ++j) t.banned[static_cast<std::size_t>(j)] = true;
  }

  // Phase 2: the real objective over split columns.
  std::vector<Rat> cost2(static_cast<std::size_t>(total), Rat(0));
  for (const auto& [ix, coeff] : lp.objective()) {
    auto [plus, minus] = col_of[static_cast<std::size_t>(ix)];
    cost2[static_cast<std::size_t>(plus)] += coeff;
    if (minus >= 0) cost2[static_cast<std::size_t>(minus)] -= coeff;
  }
  if (!t.optimize(cost2)) return LpSolution{LpStatus::Unbounded, Rat(0), {}};

  std::vector<Rat> x(static_cast<std::size_t>(total), Rat(0));
  for (int i = 0; i < m; ++i)
    x[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(i)])] = t.rhs[static_cast<std::size_t>(i)];

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  std::vector<Rat> point_by_ix(static_cast<std::size_t>(nvars), Rat(0));
  for (int ix = 0; ix < nvars; ++ix) {
    auto [plus, minus] = col_of[static_cast<std::size_t>(ix)];
    Rat v = x[static_cast<std::size_t>(plus)];
    if (minus >= 0) v -= x[static_cast<std::size_t>(minus)];
    point_by_ix[static_cast<std::size_t>(ix)] = v;
    sol.point[vars[static_cast<std::size_t>(ix)].name] = v;
  }
  sol.value = eval_comb(lp.objective(), point_by_ix);

  // LpSolution invariant: the point satisfies everything exactly.
  for (const auto& c : cons) {
    Rat lhs = eval_comb(c.coeffs, point_by_ix);
    bool ok = c.rel == Rel::Le ? lhs <= c.rhs : c.rel == Rel::Ge ? lhs >= c.rhs : lhs == c.rhs;
    if (!ok) throw InvariantViolation("solver returned an infeasible point at \"" + c.label + "\"");
  }
  for (int ix = 0; ix < nvars; ++ix)
    if (vars[static_cast<std::size_t>(ix)].sign == VarSign::NonNegative &&
        point_by_ix[static_cast<std::size_t>(ix)] < 0)
      throw InvariantViolation("solver returned a sign-violating point");
  return sol;
}

std::vector<LpViolation> check_feasible(const LinearProgram& lp,
                                        const std::map<std::string, Rat>& point) {
  std::vector<Rat> x(lp.vars().size(), Rat(0));
  for (std::size_t ix = 0; ix < lp.vars().size(); ++ix) {
    auto it = point.find(lp.vars()[ix].name);
    if (it == point.end())
      throw MissingVariable("point omits variable \"" + lp.vars()[ix].name + "\"");
    x[ix] = it->second;
  }
  std::vector<LpViolation> out;
  for (const auto& c : lp.constraints()) {
    Rat lhs = eval_comb(c.coeffs, x);
    bool ok = c.rel == Rel::Le ? lhs <= c.rhs : c.rel == Rel::Ge ? lhs >= c.rhs : lhs == c.rhs;
    if (!ok) out.push_back({c.label, lhs, c.rhs});
  }
  for (std::size_t ix = 0; ix < lp.vars().size(); ++ix)
    if (lp.vars()[ix].sign == VarSign::NonNegative && x[ix] < 0)
      out.push_back({"sign(" + lp.vars()[ix].name + ")", x[ix], Rat(0)});
  return out;
}

std::optional<Rat> weighted_bound(const LinearProgram& lp,
                                  const std::map<std::string, Rat>& weights,
                                  const std::string& target) {
  const int target_ix = lp.var_index(target);

  Rat wsum = 0;
  LinComb combo;
  Rat W = 0;
  for (const auto& [label, w] : weights) {
    if (w < 0) throw NegativeWeight("negative weight on \"" + label + "\"");
    const LpConstraint& c = lp.constraint(label);
    if (c.rel != Rel::Le)
      throw MalformedProgram("weighted constraint \"" + label + "\" is not a <=-constraint");
    wsum += w;
    for (const auto& [ix, coeff] : c.coeffs) combo[ix] += w * coeff;
    W += w * c.rhs;
  }
  if (wsum != 1) throw WeightsNotNormalized("weights sum to " + wsum.str() + ", want 1");

  Rat t_c = 0;
  if (auto it = combo.find(target_ix); it != combo.end()) t_c = it->second;
  if (t_c <= 0) return std::nullopt;  // combination does not dominate the target

  // Auxiliary LP: maximize -r(x)/t_c over the constraints without the target.
  LinearProgram aux;
  for (const auto& v : lp.vars())
    if (v.name != target) aux.add_variable(v.name, v.sign);
  for (const auto& c : lp.constraints()) {
    if (c.coeffs.count(target_ix)) continue;
    std::map<std::string, Rat> coeffs;
    for (const auto& [ix, coeff] : c.coeffs)
      coeffs[lp.vars()[static_cast<std::size_t>(ix)].name] = coeff;
    aux.add_constraint(c.label, coeffs, c.rel, c.rhs);
  }
  std::map<std::string, Rat> obj;
  for (const auto& [ix, coeff] : combo) {
    if (ix == target_ix) continue;
    obj[lp.vars()[static_cast<std::size_t>(ix)].name] = -(coeff / t_c);
  }
  aux.set_objective(obj);

  LpSolution best = solve_lp(aux);
  if (best.status != LpStatus::Optimal) return std::nullopt;
  return W / t_c + best.value;
}

}  // namespace declab
