#include "hampower/slope.hpp"

#include <string>

#include "hampower/errors.hpp"
#include "hampower/lp.hpp"
#include "hampower/rewire.hpp"

namespace hampower {

namespace {

LinearProgram dual_program(const std::vector<SlopeConstraint>& rows, std::size_t vars) {
  LinearProgram lp;
  lp.num_vars = static_cast<int>(rows.size());
  lp.sense = Sense::maximize;
  for (const auto& r : rows) lp.objective.push_back(r.rhs);
  for (std::size_t i = 0; i < vars; ++i) {
    LinearConstraint c;
    for (const auto& r : rows) c.coeffs.push_back(r.coeffs[i]);
    c.rel = Relation::le;
    c.rhs = 1;
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

}  // namespace

SlopeResult zero_statement_slope(int k, int m, int s) {
  if (k < 1 || s < 2) throw DomainError("slope needs k >= 1 and s >= 2");
  const int h = m - k * (s - 1);
  if (h < 1) throw DomainError("slope needs h = m - k(s-1) >= 1");
  if (h > s - 2) {
    throw DomainError("no K_s-free labelling exists when m+1 > (k+1)(s-1)");
  }
  SlopeResult out;
  out.k = k;
  out.m = m;
  out.s = s;
  out.h = h;
  for (int i = h + 1; i <= s - 2; ++i) out.far_indices.push_back(i);
  const std::size_t vars = out.far_indices.size();
  auto column = [&](int i) { return static_cast<std::size_t>(i - h - 1); };

  for (int i : out.far_indices) {
    int z = segment_far_minimum(k, m, s, i);
    if (z == 0) continue;
    SlopeConstraint c;
    c.label = "far(" + std::to_string(i) + ")";
    c.coeffs.assign(vars, 0);
    c.coeffs[column(i)] = 1;
    c.rhs = Rational(z, m + 1 - i);
    c.offset = -Rational(z * m, m + 1 - i);
    out.constraints.push_back(std::move(c));
  }
  for (int j = h + 2; j <= s - 2; ++j) {
    SlopeConstraint c;
    c.label = "pair(" + std::to_string(h + 1) + "," + std::to_string(j) + ")";
    c.coeffs.assign(vars, 0);
    c.coeffs[column(h + 1)] = 1;
    c.coeffs[column(j)] += Rational(h + 1, s - 1 - j);
    c.rhs = 1;
    c.offset = -Rational((k + 1) * (h + 1));
    out.constraints.push_back(std::move(c));
  }

  const Rational path_offset = -Rational((k + 1) * h * (h + 1) / 2);
  if (vars == 0 || out.constraints.empty()) {
    out.slope = h;
    out.intercept = path_offset;
    out.far_densities.assign(vars, 0);
    return out;
  }

  LinearProgram primal;
  primal.num_vars = static_cast<int>(vars);
  primal.sense = Sense::minimize;
  primal.objective.assign(vars, 1);
  for (const auto& c : out.constraints) primal.constraints.push_back({c.coeffs, Relation::ge, c.rhs});
  LpSolution p = solve_lp(primal);
  if (p.status != LpStatus::optimal) throw InternalError("slope LP is not optimal");

  LinearProgram dual = dual_program(out.constraints, vars);
  LpSolution d = solve_lp(dual);
  if (d.status != LpStatus::optimal || d.value != p.value) {
    throw InternalError("slope LP: primal and dual optima disagree");
  }

  // lexicographically smallest optimal multipliers: fix one coordinate at a time at its minimum
  const std::size_t R = out.constraints.size();
  LinearConstraint on_face;
  on_face.coeffs = dual.objective;
  on_face.rel = Relation::eq;
  on_face.rhs = d.value;
  dual.constraints.push_back(on_face);
  std::vector<Rational> y(R, 0);
  for (std::size_t r = 0; r < R; ++r) {
    LinearProgram step = dual;
    step.sense = Sense::minimize;
    step.objective.assign(R, 0);
    step.objective[r] = 1;
    LpSolution sol = solve_lp(step);
    if (sol.status != LpStatus::optimal) throw InternalError("slope LP: lexicographic step failed");
    y[r] = sol.value;
    LinearConstraint fix;
    fix.coeffs.assign(R, 0);
    fix.coeffs[r] = 1;
    fix.rel = Relation::eq;
    fix.rhs = y[r];
    dual.constraints.push_back(std::move(fix));
  }

  Rational check = 0;
  Rational intercept = path_offset;
  for (std::size_t r = 0; r < R; ++r) {
    check += y[r] * out.constraints[r].rhs;
    intercept += y[r] * out.constraints[r].offset;
  }
  if (check != p.value) throw InternalError("slope LP: certificate does not reach the optimum");

  out.slope = Rational(h) + p.value;
  out.intercept = intercept;
  out.far_densities = p.x;
  out.multipliers = y;
  return out;
}

}  // namespace hampower
