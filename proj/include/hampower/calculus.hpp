#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hampower/exact.hpp"

namespace hampower {

enum class Nature { ordinary, over };

struct KnownResult {
  int k = 0;
  int m = 0;
  Rational reciprocal_exponent;
  Nature nature = Nature::ordinary;
  // "prior": established before this line of work; "new": starred entries;
  // "k1-general": the closed form f(ell) for k = 1, m >= 10.
  std::string source;
};

enum class VerdictKind { ordinary_candidate, over_candidate, over_no_rcr, boundary_tie };

struct Classification {
  VerdictKind kind = VerdictKind::ordinary_candidate;
  Rational exponent;
  std::optional<KnownResult> proven;
};

struct CriticalParams {
  std::optional<int> r_cr;
  std::optional<int> ell_cr;
  std::optional<int> ell_star;
};

struct LambdaProfile {
  Surd lambda;
  Surd f_lambda;
};

struct DiracProfile {
  int k = 0;
  int m = 0;
  Rational f_floor;
  Rational f_ceil;
  Surd lambda;
  Surd f_lambda;
  int ell = 0;
  Rational f_ell;
  std::optional<int> r_cr;
  std::optional<int> ell_cr;
  std::optional<int> ell_star;
  std::optional<Rational> f_ell_star;
  Classification verdict;
};

// f_{k,m}(x) = (C(x,2) + C(m-kx+1,2)) / x, with the second term 0 once m-kx+1 < 0.
// Accepted for 0 < x <= m (x = m occurs as ell_{1,2} = 2).
Rational f_value(int k, int m, const Rational& x);

LambdaProfile lambda_profile(int k, int m);
int ell_argmin(int k, int m);
CriticalParams critical_params(int k, int m);
Classification classify(int k, int m);
DiracProfile profile(int k, int m);

std::optional<KnownResult> known_lookup(int k, int m);
// Every explicitly tabulated entry, ordered by (k, m). Excludes the k = 1, m >= 10 closed form.
const std::vector<KnownResult>& known_results();

struct PellSolution {
  BigInt p;
  BigInt q;
  BigInt m;
};

// Positive solutions of q^2 - 4(k^2+1)p^2 = 1 ordered by p; each gives lambda_{k,m} = p.
std::vector<PellSolution> pell_integer_lambdas(int k, int count);

enum class ScanMode { fact_ad, fact_diff, prop_rcr };

struct ScanRow {
  int m = 0;
  bool applicable = true;
  bool holds = false;
  std::vector<std::pair<std::string, std::string>> witness;
};

std::vector<ScanRow> scan_inequalities(ScanMode mode, int k, int m_from, int m_to);

enum class TableFormat { markdown, csv, json };

std::string emit_table(int k, int m_from, int m_to, TableFormat format);

std::string to_string(VerdictKind kind);
std::string to_string(Nature nature);
std::string to_string(ScanMode mode);
VerdictKind verdict_from_string(const std::string& s);
Nature nature_from_string(const std::string& s);
ScanMode scan_mode_from_string(const std::string& s);
TableFormat table_format_from_string(const std::string& s);

}  // namespace hampower
