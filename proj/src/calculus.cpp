#include "hampower/calculus.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hampower/errors.hpp"
#include "hampower/report.hpp"

namespace hampower {

namespace {

void require_pair(int k, int m) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (m <= k) {
    throw DomainError("m must exceed k (got k=" + std::to_string(k) + ", m=" + std::to_string(m) +
                      ")");
  }
}

Rational half_binom(const Rational& y) { return y * (y - 1) / 2; }

// floor(sqrt(m(m+1)/(k^2+1))); floor(sqrt(q)) = isqrt(floor(q)) for rational q >= 0
int lambda_floor(int k, int m) {
  BigInt q = (BigInt(m) * (m + 1)) / (BigInt(k) * k + 1);
  return static_cast<int>(BigInt(sqrt(q)).get_si());
}

bool lambda_is_integer(int k, int m) {
  BigInt num = BigInt(m) * (m + 1);
  BigInt den = BigInt(k) * k + 1;
  if (num % den != 0) return false;
  BigInt q = num / den;
  return mpz_perfect_square_p(q.get_mpz_t()) != 0;
}

// smallest minimizer of f on the integers lo..hi
int argmin_f(int k, int m, int lo, int hi) {
  int best = lo;
  Rational best_value = f_value(k, m, lo);
  for (int x = lo + 1; x <= hi; ++x) {
    Rational v = f_value(k, m, x);
    if (v < best_value) {
      best = x;
      best_value = v;
    }
  }
  return best;
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string opt_str(const std::optional<Rational>& v) { return v ? v->str() : "-"; }

std::string determined_by(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::ordinary_candidate: return "ell_cr";
    case VerdictKind::over_candidate: return "f_ell_star";
    case VerdictKind::over_no_rcr: return "f_ell";
    case VerdictKind::boundary_tie: return "ell_cr=f_ell_star";
  }
  return "?";
}

}  // namespace

Rational f_value(int k, int m, const Rational& x) {
  require_pair(k, m);
  if (x.sign() <= 0 || x > Rational(m)) {
    throw DomainError("f is defined on (0, m]; got x=" + x.str());
  }
  Rational y = Rational(m) - Rational(k) * x + 1;
  Rational second = y.sign() < 0 ? Rational(0) : half_binom(y);
  return (half_binom(x) + second) / x;
}

LambdaProfile lambda_profile(int k, int m) {
  require_pair(k, m);
  BigInt kk = BigInt(k) * k + 1;
  BigInt mm = BigInt(m) * (m + 1);
  Surd lambda = Surd::sqrt(Rational(mm, kk));
  Surd root(0, 1, kk * mm);
  Surd f_lambda = root - Surd(Rational(BigInt(2 * m + 1) * k, 2) + Rational(1, 2));
  return {lambda, f_lambda};
}

// Minimizer over 1 <= x <= floor(m/k), i.e. over the x with m = kx + r for some r >= 0. By
// convexity it is floor(lambda) or ceil(lambda) clipped to that range.
int ell_argmin(int k, int m) {
  require_pair(k, m);
  const int top = m / k;
  int lo = std::min(lambda_floor(k, m), top);
  if (lambda_is_integer(k, m) || lo == top) return lo;
  int hi = lo + 1;
  return f_value(k, m, hi) < f_value(k, m, lo) ? hi : lo;
}

CriticalParams critical_params(int k, int m) {
  require_pair(k, m);
  CriticalParams out;
  for (long r = 0; static_cast<long>(k) * r * (r + 1) + r <= m; ++r) {
    if ((m - r) % k == 0 && (m - r) / k >= r * (r + 1)) {
      out.r_cr = static_cast<int>(r);
      out.ell_cr = static_cast<int>((m - r) / k);
    }
  }
  if (out.r_cr) {
    int lo = std::max(*out.r_cr, 1);
    int hi = *out.ell_cr - 1;
    if (lo <= hi) out.ell_star = argmin_f(k, m, lo, hi);
  }
  return out;
}

Classification classify(int k, int m) {
  require_pair(k, m);
  CriticalParams cp = critical_params(k, m);
  Classification c;
  c.proven = known_lookup(k, m);
  if (!cp.r_cr) {
    c.kind = VerdictKind::over_no_rcr;
    c.exponent = f_value(k, m, ell_argmin(k, m)).reciprocal();
    return c;
  }
  Rational ordinary = Rational(2, *cp.ell_cr);
  if (!cp.ell_star) {
    // no competitor inside {max(r_cr,1), ..., ell_cr - 1}
    c.kind = VerdictKind::ordinary_candidate;
    c.exponent = ordinary;
    return c;
  }
  Rational f_star = f_value(k, m, *cp.ell_star);
  Rational half = Rational(*cp.ell_cr, 2);
  if (f_star < half) {
    c.kind = VerdictKind::over_candidate;
    c.exponent = f_star.reciprocal();
  } else if (f_star > half) {
    c.kind = VerdictKind::ordinary_candidate;
    c.exponent = ordinary;
  } else {
    c.kind = VerdictKind::boundary_tie;
    c.exponent = ordinary;
  }
  return c;
}

DiracProfile profile(int k, int m) {
  require_pair(k, m);
  DiracProfile p;
  p.k = k;
  p.m = m;
  LambdaProfile lp = lambda_profile(k, m);
  p.lambda = lp.lambda;
  p.f_lambda = lp.f_lambda;
  int lo = lambda_floor(k, m);
  int hi = lambda_is_integer(k, m) ? lo : lo + 1;
  p.f_floor = f_value(k, m, lo);
  p.f_ceil = f_value(k, m, hi);
  p.ell = ell_argmin(k, m);
  p.f_ell = f_value(k, m, p.ell);
  CriticalParams cp = critical_params(k, m);
  p.r_cr = cp.r_cr;
  p.ell_cr = cp.ell_cr;
  p.ell_star = cp.ell_star;
  if (cp.ell_star) p.f_ell_star = f_value(k, m, *cp.ell_star);
  p.verdict = classify(k, m);
  return p;
}

std::vector<PellSolution> pell_integer_lambdas(int k, int count) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (count < 1) throw DomainError("count must be at least 1");
  BigInt D = 4 * (BigInt(k) * k + 1);
  // (p, q) = (k, 2k^2+1) always solves the equation, so the search below terminates by p = k.
  BigInt p1, q1;
  for (long p = 1;; ++p) {
    BigInt disc = 1 + D * p * p;
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
      p1 = p;
      q1 = sqrt(disc);
      break;
    }
  }
  std::vector<PellSolution> out;
  BigInt p = p1, q = q1;
  for (int i = 0; i < count; ++i) {
    if (q * q - D * p * p != 1) throw InternalError("Pell recurrence left the solution set");
    BigInt m = (q - 1) / 2;
    out.push_back({p, q, m});
    BigInt np = p1 * q + q1 * p;
    BigInt nq = q1 * q + D * p1 * p;
    p = np;
    q = nq;
  }
  return out;
}

std::vector<ScanRow> scan_inequalities(ScanMode mode, int k, int m_from, int m_to) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (m_from <= k) throw DomainError("scan range must satisfy m > k");
  std::vector<ScanRow> rows;
  for (int m = m_from; m <= m_to; ++m) {
    ScanRow row;
    row.m = m;
    switch (mode) {
      case ScanMode::fact_ad: {
        int ell = ell_argmin(k, m);
        long rest = m - static_cast<long>(k) * ell;
        Rational lower(m, k + 1);
        long upper = rest * (rest + 1);
        row.holds = lower <= Rational(ell) && ell < upper;
        row.witness = {{"ell", std::to_string(ell)},
                       {"m/(k+1)", lower.str()},
                       {"(m-k*ell)(m-k*ell+1)", std::to_string(upper)}};
        break;
      }
      case ScanMode::fact_diff: {
        LambdaProfile lp = lambda_profile(k, m);
        Rational f_ell = f_value(k, m, ell_argmin(k, m));
        Surd diff = lp.f_lambda.reciprocal() - Surd(f_ell.reciprocal());
        Rational bound = Rational(BigInt(128) * BigInt(k) * k * k * k * k, BigInt(m) * m * m);
        row.holds = surd_cmp(diff, Surd(bound)) <= 0;
        row.witness = {{"diff", diff.str()}, {"bound", bound.str()}};
        break;
      }
      case ScanMode::prop_rcr: {
        CriticalParams cp = critical_params(k, m);
        row.applicable = cp.r_cr.has_value() && cp.ell_star.has_value();
        row.witness = {{"r_cr", opt_str(cp.r_cr)},
                       {"ell_cr", opt_str(cp.ell_cr)},
                       {"ell_star", opt_str(cp.ell_star)}};
        if (row.applicable) {
          Rational f_star = f_value(k, m, *cp.ell_star);
          Rational half(*cp.ell_cr, 2);
          row.holds = f_star <= half;
          row.witness.emplace_back("f_ell_star", f_star.str());
          row.witness.emplace_back("ell_cr/2", half.str());
        }
        break;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string emit_table(int k, int m_from, int m_to, TableFormat format) {
  if (m_from > m_to) throw DomainError("empty m range");
  std::vector<DiracProfile> rows;
  for (int m = m_from; m <= m_to; ++m) rows.push_back(profile(k, m));

  std::ostringstream os;
  if (format == TableFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : rows) arr.push_back(nlohmann::json(p));
    os << arr.dump(2) << "\n";
    return os.str();
  }

  const std::vector<std::string> header = {
      "k",       "m",          "r_cr",      "ell_cr",    "ell",
      "ell_star", "f_ell",     "f_ell_star", "verdict",  "exponent",
      "determined_by", "known_reciprocal", "known_nature"};
  auto cells = [](const DiracProfile& p) {
    const auto& known = p.verdict.proven;
    return std::vector<std::string>{std::to_string(p.k),
                                    std::to_string(p.m),
                                    opt_str(p.r_cr),
                                    opt_str(p.ell_cr),
                                    std::to_string(p.ell),
                                    opt_str(p.ell_star),
                                    p.f_ell.str(),
                                    opt_str(p.f_ell_star),
                                    to_string(p.verdict.kind),
                                    p.verdict.exponent.str(),
                                    determined_by(p.verdict.kind),
                                    known ? known->reciprocal_exponent.str() : "-",
                                    known ? to_string(known->nature) : "-"};
  };

  if (format == TableFormat::csv) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& p : rows) {
      auto c = cells(p);
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << "\n";
    }
    return os.str();
  }

  os << "|";
  for (const auto& h : header) os << " " << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& p : rows) {
    os << "|";
    for (const auto& c : cells(p)) os << " " << c << " |";
    os << "\n";
  }
  return os.str();
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::ordinary_candidate: return "ordinary_candidate";
    case VerdictKind::over_candidate: return "over_candidate";
    case VerdictKind::over_no_rcr: return "over_no_rcr";
    case VerdictKind::boundary_tie: return "boundary_tie";
  }
  return "?";
}

std::string to_string(Nature nature) { return nature == Nature::ordinary ? "ordinary" : "over"; }

std::string to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::fact_ad: return "ad";
    case ScanMode::fact_diff: return "diff";
    case ScanMode::prop_rcr: return "rcr";
  }
  return "?";
}

VerdictKind verdict_from_string(const std::string& s) {
  for (auto k : {VerdictKind::ordinary_candidate, VerdictKind::over_candidate,
                 VerdictKind::over_no_rcr, VerdictKind::boundary_tie}) {
    if (to_string(k) == s) return k;
  }
  throw DomainError("unknown verdict '" + s + "'");
}

Nature nature_from_string(const std::string& s) {
  if (s == "ordinary") return Nature::ordinary;
  if (s == "over") return Nature::over;
  throw DomainError("unknown nature '" + s + "'");
}

ScanMode scan_mode_from_string(const std::string& s) {
  if (s == "ad" || s == "fact_ad") return ScanMode::fact_ad;
  if (s == "diff" || s == "fact_diff") return ScanMode::fact_diff;
  if (s == "rcr" || s == "prop_rcr") return ScanMode::prop_rcr;
  throw DomainError("unknown scan mode '" + s + "'");
}

TableFormat table_format_from_string(const std::string& s) {
  if (s == "markdown" || s == "md") return TableFormat::markdown;
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  throw DomainError("unknown format '" + s + "'");
}

}  // namespace hampower
