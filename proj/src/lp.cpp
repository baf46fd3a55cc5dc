#include "hampower/lp.hpp"

#include "hampower/errors.hpp"

namespace hampower {

namespace {

class Tableau {
 public:
  // rows: constraint rows with the rhs in the last column
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<int> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {}

  // Minimize cost . x over the current tableau, entering only columns below `allowed`.
  LpStatus minimize(const std::vector<Rational>& cost, int allowed) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < allowed; ++j) {
        if (is_basic(j)) continue;
        if (reduced_cost(cost, j).sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return LpStatus::optimal;
      int leave = -1;
      Rational best;
      for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
        const Rational& a = rows_[r][entering];
        if (a.sign() <= 0) continue;
        Rational ratio = rows_[r].back() / a;
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::unbounded;
      pivot(leave, entering);
    }
  }

  void pivot(int r, int c) {
    Rational inv = rows_[r][c].reciprocal();
    for (auto& v : rows_[r]) v *= inv;
    for (int o = 0; o < static_cast<int>(rows_.size()); ++o) {
      if (o == r || rows_[o][c].sign() == 0) continue;
      Rational f = rows_[o][c];
      for (std::size_t j = 0; j < rows_[o].size(); ++j) rows_[o][j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < static_cast<int>(cost.size())) v += cost[basis_[r]] * rows_[r].back();
    }
    return v;
  }

  std::vector<Rational> solution(int n) const {
    std::vector<Rational> x(static_cast<std::size_t>(n), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < n) x[basis_[r]] = rows_[r].back();
    }
    return x;
  }

  // Pivot artificial columns (index >= first_artificial) out of the basis; drop redundant rows.
  void expel(int first_artificial) {
    for (int r = 0; r < static_cast<int>(rows_.size());) {
      if (basis_[r] < first_artificial) {
        ++r;
        continue;
      }
      int col = -1;
      for (int j = 0; j < first_artificial; ++j) {
        if (rows_[r][j].sign() != 0) {
          col = j;
          break;
        }
      }
      if (col < 0) {
        rows_.erase(rows_.begin() + r);
        basis_.erase(basis_.begin() + r);
      } else {
        pivot(r, col);
        ++r;
      }
    }
  }

 private:
  bool is_basic(int j) const {
    for (int b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  Rational reduced_cost(const std::vector<Rational>& cost, int j) const {
    Rational d = j < static_cast<int>(cost.size()) ? cost[j] : Rational(0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < static_cast<int>(cost.size())) d -= cost[basis_[r]] * rows_[r][j];
    }
    return d;
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = lp.num_vars;
  if (n < 0 || static_cast<int>(lp.objective.size()) != n) throw DomainError("LP objective size mismatch");
  for (const auto& c : lp.constraints) {
    if (static_cast<int>(c.coeffs.size()) != n) throw DomainError("LP constraint size mismatch");
  }
  const int rows = static_cast<int>(lp.constraints.size());

  // Columns: originals, one slack/surplus per inequality, one artificial per row needing one.
  int slacks = 0;
  for (const auto& c : lp.constraints) slacks += c.rel != Relation::eq;
  const int first_artificial = n + slacks;
  std::vector<std::vector<Rational>> table;
  std::vector<int> basis;
  std::vector<int> artificial_rows;
  int slack_col = n;
  for (int r = 0; r < rows; ++r) {
    LinearConstraint c = lp.constraints[r];
    if (c.rhs.sign() < 0) {
      for (auto& a : c.coeffs) a = -a;
      c.rhs = -c.rhs;
      if (c.rel == Relation::le) {
        c.rel = Relation::ge;
      } else if (c.rel == Relation::ge) {
        c.rel = Relation::le;
      }
    }
    std::vector<Rational> row(c.coeffs);
    row.resize(static_cast<std::size_t>(first_artificial), 0);
    int own_slack = -1;
    if (c.rel != Relation::eq) {
      own_slack = slack_col++;
      row[own_slack] = c.rel == Relation::le ? 1 : -1;
    }
    row.push_back(c.rhs);  // rhs placeholder; artificial columns are spliced in below
    table.push_back(std::move(row));
    if (c.rel == Relation::le) {
      basis.push_back(own_slack);
    } else {
      basis.push_back(-1);
      artificial_rows.push_back(r);
    }
  }
  const int artificials = static_cast<int>(artificial_rows.size());
  for (auto& row : table) {
    Rational rhs = row.back();
    row.pop_back();
    row.resize(static_cast<std::size_t>(first_artificial + artificials), 0);
    row.push_back(rhs);
  }
  for (int a = 0; a < artificials; ++a) {
    table[artificial_rows[a]][first_artificial + a] = 1;
    basis[artificial_rows[a]] = first_artificial + a;
  }

  Tableau tab(std::move(table), std::move(basis));
  LpSolution out;
  if (artificials > 0) {
    std::vector<Rational> phase1(static_cast<std::size_t>(first_artificial + artificials), 0);
    for (int a = 0; a < artificials; ++a) phase1[first_artificial + a] = 1;
    tab.minimize(phase1, first_artificial + artificials);
    if (tab.value(phase1).sign() != 0) {
      out.status = LpStatus::infeasible;
      return out;
    }
    tab.expel(first_artificial);
  }
  std::vector<Rational> cost(lp.objective);
  if (lp.sense == Sense::maximize) {
    for (auto& c : cost) c = -c;
  }
  if (tab.minimize(cost, first_artificial) == LpStatus::unbounded) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.x = tab.solution(n);
  out.value = 0;
  for (int j = 0; j < n; ++j) out.value += lp.objective[j] * out.x[j];
  return out;
}

}  // namespace hampower
