#pragma once

#include <string>
#include <vector>

#include "hampower/exact.hpp"

namespace hampower {

// One inequality  sum_i coeffs[i] * X_i >= rhs  in the far-edge densities X_i = x_i / L,
// together with the additive constant it carries before homogenization (x_i >= rhs*L + offset).
struct SlopeConstraint {
  std::string label;            // "far(i)" or "pair(h+1,j)"
  std::vector<Rational> coeffs; // indexed like SlopeResult::far_indices
  Rational rhs;
  Rational offset;
};

struct SlopeResult {
  int k = 0;
  int m = 0;
  int s = 0;
  int h = 0;
  Rational slope;                       // h + min sum X_i
  Rational intercept;                   // additive constant of the derived bound M >= slope*L + intercept
  std::vector<int> far_indices;         // i = h+1 .. s-2
  std::vector<Rational> far_densities;  // optimal X_i
  std::vector<SlopeConstraint> constraints;
  std::vector<Rational> multipliers;    // lexicographically smallest optimal dual vector
};

// Best L-coefficient c with M >= c L - O(1) from the spanning h-path edges, the segment
// far-edge counts, and the pair inequalities, h = m - k(s-1).
SlopeResult zero_statement_slope(int k, int m, int s);

}  // namespace hampower
