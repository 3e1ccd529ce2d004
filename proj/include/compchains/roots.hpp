#pragma once

#include <complex>
#include <vector>

#include "compchains/polyfrac.hpp"

namespace compchains {

struct RootReport {
  std::vector<std::complex<double>> roots;
  /// |p(z)| / |lead(p)| at the refined (multiprecision) root.
  std::vector<double> residuals;
  bool converged = true;
  int iterations = 0;
};

/// Simultaneous (Aberth) iteration carried out in MPFR arithmetic; the
/// working precision grows with the degree. Roots are ordered by real part,
/// then imaginary part. Throws std::invalid_argument for degree < 1.
RootReport roots_numeric(const UniPoly& p, int max_iterations = 500);

}  // namespace compchains
