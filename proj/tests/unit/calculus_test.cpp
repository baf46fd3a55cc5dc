#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "hampower/calculus.hpp"
#include "hampower/errors.hpp"

namespace hampower {
namespace {

Rational f_at(int k, int m, int x) { return f_value(k, m, Rational(x)); }

TEST(FValue, Examples) {
  EXPECT_EQ(f_at(1, 20, 14), Rational(8));
  EXPECT_EQ(f_at(1, 20, 15), Rational(8));
  EXPECT_EQ(f_at(2, 12, 5), Rational(13, 5));
  EXPECT_EQ(f_at(2, 4, 2), Rational(1, 2));
  EXPECT_THROW(f_at(2, 12, 0), DomainError);
  EXPECT_THROW(f_at(2, 12, 13), DomainError);
  EXPECT_THROW(f_at(2, 2, 1), DomainError);
}

TEST(FValue, SecondTermVanishesPastTheEnd) {
  // m - kx + 1 < 0 for x = 7 at (2, 12)
  EXPECT_EQ(f_at(2, 12, 7), Rational(21, 7));
}

TEST(LambdaProfile, Examples) {
  LambdaProfile p = lambda_profile(1, 20);
  EXPECT_EQ(p.lambda.str(), "sqrt(210)");
  LambdaProfile q = lambda_profile(2, 4);
  EXPECT_EQ(q.lambda, Surd(Rational(2)));
  EXPECT_EQ(q.f_lambda, Surd(Rational(1, 2)));
  EXPECT_EQ(lambda_profile(3, 9).lambda, Surd(Rational(3)));
}

TEST(LambdaProfile, ClosedFormOfTheMinimum) {
  for (int k = 1; k <= 4; ++k) {
    for (int m = k + 1; m <= 60; ++m) {
      LambdaProfile p = lambda_profile(k, m);
      Surd expected = Surd::sqrt(Rational((k * k + 1) * (m * m + m))) -
                      Surd(Rational((2 * m + 1) * k, 2)) - Surd(Rational(1, 2));
      EXPECT_EQ(p.f_lambda, expected) << k << "," << m;
      EXPECT_EQ(p.lambda * p.lambda, Surd(Rational(m * (m + 1), k * k + 1)));
    }
  }
}

TEST(EllArgmin, Examples) {
  EXPECT_EQ(ell_argmin(1, 20), 14);
  EXPECT_EQ(ell_argmin(1, 7), 5);
  EXPECT_EQ(ell_argmin(2, 4), 2);
  EXPECT_EQ(ell_argmin(3, 11), 3);
}

TEST(EllArgmin, ConvexityAndMinimality) {
  for (int k = 1; k <= 4; ++k) {
    for (int m = k + 1; m <= 200; ++m) {
      const int top = m / k;
      std::vector<Rational> f;
      for (int x = 1; x <= m; ++x) f.push_back(f_at(k, m, x));
      // discrete convexity on [1, m-k]: no interior strict local maximum
      for (std::size_t y = 1; y + 1 < static_cast<std::size_t>(m - k); ++y) {
        ASSERT_LE(f[y], std::max(f[y - 1], f[y + 1])) << k << "," << m << "," << y + 1;
      }
      const int ell = ell_argmin(k, m);
      ASSERT_GE(ell, 1);
      ASSERT_LE(ell, top);
      Surd lam = lambda_profile(k, m).lambda;
      BigInt lo = lam.is_rational() ? lam.a().floor() : BigInt(0);
      if (!lam.is_rational()) {
        while (surd_cmp(Surd(Rational(BigInt(lo + 1))), lam) <= 0) lo += 1;
      }
      const bool near = ell == lo || ell == lo + 1 || ell == top;
      ASSERT_TRUE(near) << k << "," << m;
      for (int x = 1; x <= top; ++x) {
        ASSERT_LE(f[ell - 1], f[x - 1]) << k << "," << m << "," << x;
        if (x < ell) ASSERT_LT(f[ell - 1], f[x - 1]) << "smallest minimizer";
      }
    }
  }
}

TEST(Lambda, FOfEllDominatesFOfLambda) {
  for (int k = 1; k <= 4; ++k) {
    for (int m = k + 1; m <= 200; ++m) {
      DiracProfile p = profile(k, m);
      ASSERT_TRUE(surd_cmp(Surd(p.f_ell), p.f_lambda) >= 0) << k << "," << m;
    }
  }
}

TEST(CriticalParams, Examples) {
  EXPECT_FALSE(critical_params(2, 3).r_cr.has_value());
  CriticalParams c = critical_params(1, 8);
  ASSERT_TRUE(c.r_cr.has_value());
  EXPECT_EQ(*c.r_cr, 2);
  EXPECT_EQ(*c.ell_cr, 6);
  EXPECT_EQ(*c.ell_star, 5);
  EXPECT_FALSE(critical_params(3, 17).r_cr.has_value());
}

TEST(CriticalParams, Invariants) {
  for (int k = 1; k <= 4; ++k) {
    for (int m = k + 1; m <= 300; ++m) {
      CriticalParams c = critical_params(k, m);
      // brute-force r_cr
      std::optional<int> brute;
      for (int r = 0; r <= m; ++r) {
        if ((m - r) % k == 0 && (m - r) / k >= r * (r + 1)) brute = r;
      }
      ASSERT_EQ(c.r_cr, brute) << k << "," << m;
      // characterization of absence
      const int s = m % k;
      const bool absent = s >= 1 && m < k * s * (s + 1) + s;
      ASSERT_EQ(!c.r_cr.has_value(), absent) << k << "," << m;
      if (c.r_cr && m + k <= 300) ASSERT_TRUE(critical_params(k, m + k).r_cr.has_value());
      if (!c.r_cr) continue;
      ASSERT_EQ(*c.ell_cr, (m - *c.r_cr) / k);
      const int from = std::max(*c.r_cr, 1);
      if (from > *c.ell_cr - 1) {
        ASSERT_FALSE(c.ell_star.has_value());
        continue;
      }
      ASSERT_TRUE(c.ell_star.has_value());
      for (int x = from; x <= *c.ell_cr - 1; ++x) ASSERT_LE(f_at(k, m, *c.ell_star), f_at(k, m, x));
    }
  }
}

TEST(Classify, Examples) {
  Classification a = classify(2, 11);
  EXPECT_EQ(a.kind, VerdictKind::ordinary_candidate);
  EXPECT_EQ(a.exponent, Rational(2, 5));
  Classification b = classify(2, 12);
  EXPECT_EQ(b.kind, VerdictKind::over_candidate);
  EXPECT_EQ(b.exponent, Rational(5, 13));
  Classification c = classify(1, 5);
  EXPECT_EQ(c.kind, VerdictKind::boundary_tie);
  EXPECT_EQ(c.exponent, Rational(1, 2));
  ASSERT_TRUE(c.proven.has_value());
  EXPECT_EQ(c.proven->nature, Nature::over);
}

TEST(Classify, ExponentMatchesKind) {
  for (int k = 1; k <= 4; ++k) {
    for (int m = k + 1; m <= 150; ++m) {
      DiracProfile p = profile(k, m);
      const Classification& v = p.verdict;
      switch (v.kind) {
        case VerdictKind::over_no_rcr:
          ASSERT_FALSE(p.r_cr.has_value());
          ASSERT_EQ(v.exponent, p.f_ell.reciprocal());
          break;
        case VerdictKind::over_candidate:
          ASSERT_LT(*p.f_ell_star, Rational(*p.ell_cr, 2));
          ASSERT_EQ(v.exponent, p.f_ell_star->reciprocal());
          break;
        case VerdictKind::ordinary_candidate:
          ASSERT_EQ(v.exponent, Rational(2, *p.ell_cr));
          if (p.f_ell_star) ASSERT_GT(*p.f_ell_star, Rational(*p.ell_cr, 2));
          break;
        case VerdictKind::boundary_tie:
          ASSERT_EQ(*p.f_ell_star, Rational(*p.ell_cr, 2));
          ASSERT_EQ(v.exponent, Rational(2, *p.ell_cr));
          break;
      }
    }
  }
}

TEST(Classify, AgreesWithKnownResults) {
  for (const KnownResult& r : known_results()) {
    Classification c = classify(r.k, r.m);
    ASSERT_TRUE(c.proven.has_value()) << r.k << "," << r.m;
    if (c.kind == VerdictKind::over_no_rcr) {
      // without r_cr the calculus gives only the lower bound 1/f(ell) and no nature
      EXPECT_LE(c.exponent, r.reciprocal_exponent.reciprocal()) << r.k << "," << r.m;
      continue;
    }
    EXPECT_EQ(c.exponent, r.reciprocal_exponent.reciprocal()) << r.k << "," << r.m;
    if (c.kind == VerdictKind::boundary_tie) continue;
    const Nature guess = c.kind == VerdictKind::ordinary_candidate ? Nature::ordinary : Nature::over;
    EXPECT_EQ(guess, r.nature) << r.k << "," << r.m;
  }
}

TEST(KnownLookup, Examples) {
  auto a = known_lookup(1, 9);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->reciprocal_exponent, Rational(7, 2));
  EXPECT_EQ(a->nature, Nature::over);
  EXPECT_FALSE(known_lookup(2, 19).has_value());
  auto c = known_lookup(3, 18);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->reciprocal_exponent, Rational(3));
  EXPECT_EQ(c->nature, Nature::ordinary);
}

TEST(KnownLookup, KOneClosedFormBeyondTheTable) {
  for (int m = 10; m <= 80; ++m) {
    auto r = known_lookup(1, m);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->reciprocal_exponent, f_at(1, m, ell_argmin(1, m)));
  }
}

TEST(Pell, Examples) {
  auto two = pell_integer_lambdas(2, 1);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].p, 2);
  EXPECT_EQ(two[0].q, 9);
  EXPECT_EQ(two[0].m, 4);
  auto three = pell_integer_lambdas(3, 1);
  EXPECT_EQ(three[0].p, 3);
  EXPECT_EQ(three[0].q, 19);
  EXPECT_EQ(three[0].m, 9);
}

TEST(Pell, SolutionsSatisfyTheEquation) {
  for (int k = 1; k <= 6; ++k) {
    auto sols = pell_integer_lambdas(k, 5);
    ASSERT_EQ(sols.size(), 5u);
    for (std::size_t i = 0; i < sols.size(); ++i) {
      const auto& s = sols[i];
      EXPECT_EQ(s.q * s.q - 4 * (k * k + 1) * s.p * s.p, 1);
      EXPECT_EQ(2 * s.m + 1, s.q);
      if (i > 0) EXPECT_LT(sols[i - 1].p, s.p);
      if (s.m > k && s.m < 100000) {
        Surd lam = lambda_profile(k, static_cast<int>(s.m.get_si())).lambda;
        EXPECT_EQ(lam, Surd(Rational(s.p)));
      }
    }
  }
}

TEST(Pell, FirstSolutionIsSmallest) {
  for (int k = 1; k <= 6; ++k) {
    BigInt first = pell_integer_lambdas(k, 1)[0].p;
    for (long p = 1; p < first.get_si(); ++p) {
      BigInt v = 1 + 4 * (k * k + 1) * BigInt(p) * p;
      EXPECT_FALSE(mpz_perfect_square_p(v.get_mpz_t())) << k << "," << p;
    }
  }
}

std::set<int> failures(const std::vector<ScanRow>& rows) {
  std::set<int> out;
  for (const auto& r : rows) {
    if (r.applicable && !r.holds) out.insert(r.m);
  }
  return out;
}

TEST(Scan, PropositionRcrFailures) {
  std::set<int> odd, even;
  for (int m : failures(scan_inequalities(ScanMode::prop_rcr, 2, 15, 100))) {
    if (m % 2 == 1) odd.insert(m);
    if (m % 2 == 0 && m >= 24) even.insert(m);
  }
  EXPECT_EQ(odd, (std::set<int>{27, 29, 31, 33}));
  EXPECT_EQ(even, (std::set<int>{44, 46}));
  std::set<int> above;
  for (int m : failures(scan_inequalities(ScanMode::prop_rcr, 2, 21, 100))) above.insert(m);
  EXPECT_EQ(above, (std::set<int>{22, 27, 29, 31, 33, 44, 46}));
}

TEST(Scan, FactAdHolds) {
  EXPECT_TRUE(failures(scan_inequalities(ScanMode::fact_ad, 2, 240, 250)).empty());
  for (int k = 1; k <= 3; ++k) {
    const int from = 30 * k * k * k;
    EXPECT_TRUE(failures(scan_inequalities(ScanMode::fact_ad, k, from, from + 300)).empty()) << k;
  }
}

TEST(Scan, FactDiffHolds) {
  EXPECT_TRUE(failures(scan_inequalities(ScanMode::fact_diff, 1, 6, 50)).empty());
}

TEST(Scan, RowsAreOrderedByM) {
  auto rows = scan_inequalities(ScanMode::prop_rcr, 3, 4, 40);
  ASSERT_EQ(rows.size(), 37u);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].m, 4 + static_cast<int>(i));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(EmitTable, MatchesGoldenCsv) {
  EXPECT_EQ(emit_table(1, 2, 10, TableFormat::csv), read_file(HAMPOWER_GOLDEN_DIR "/table_k1.csv"));
  EXPECT_EQ(emit_table(2, 7, 20, TableFormat::csv), read_file(HAMPOWER_GOLDEN_DIR "/table_k2.csv"));
  EXPECT_EQ(emit_table(3, 10, 20, TableFormat::csv), read_file(HAMPOWER_GOLDEN_DIR "/table_k3.csv"));
}

TEST(EmitTable, Examples) {
  DiracProfile p = profile(2, 14);
  EXPECT_EQ(p.r_cr, 2);
  EXPECT_EQ(p.ell_cr, 6);
  EXPECT_EQ(p.f_ell_star, Rational(4));
  DiracProfile q = profile(3, 11);
  EXPECT_FALSE(q.r_cr.has_value());
  EXPECT_EQ(q.f_ell, Rational(2));
  EXPECT_EQ(q.verdict.kind, VerdictKind::over_no_rcr);
  EXPECT_EQ(profile(1, 6).f_ell_star, Rational(9, 4));
}

TEST(EmitTable, FormatsAreDeterministic) {
  for (TableFormat fmt : {TableFormat::markdown, TableFormat::csv, TableFormat::json}) {
    EXPECT_EQ(emit_table(2, 3, 30, fmt), emit_table(2, 3, 30, fmt));
  }
}

}  // namespace
}  // namespace hampower
