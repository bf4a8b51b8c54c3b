#pragma once

#include <span>
#include <string>
#include <vector>

#include "braidlex/automaton.hpp"
#include "braidlex/sparse_matrix.hpp"

namespace braidlex {

struct PowerIterationOptions {
  double tol = 1e-13;
  int max_iter = 100000;
};

struct SpectralResult {
  double lambda = 0.0;
  std::vector<double> v;  // positive, sums to 1
  int iterations = 0;
  double residual = 0.0;  // sup-norm of vR - lambda v
};

// Perron root and L1-normalized left eigenvector of a primitive 0/1 matrix by
// left power iteration from the uniform vector. Throws ConvergenceError.
SpectralResult perron(const SparseBooleanMatrix& r,
                      const PowerIterationOptions& options = {});

struct ProportionReport {
  int n = 0;
  std::vector<double> per_letter;  // [i-1] = P_{n,i}
  double p_state_t11 = 0.0;        // mass at (1,1,1,{})

  double p_n1() const { return per_letter.at(0); }
};

// `r` must come from recurrent_matrix(a).
ProportionReport proportions(const Automaton& a, const SpectralResult& r);

// Upper bound on the spectral radius of a nonnegative matrix: the
// Collatz-Wielandt quotient max_q (xR)_q / x_q for a positive vector x
// refined by power iteration on R + I.
double spectral_radius_bound(const SparseBooleanMatrix& r);

struct ResolventCheck {
  bool nonnegative = false;
  bool positive = false;
  bool primitive = false;
  double min_entry = 0.0;
  int terms = 0;
  std::vector<std::vector<double>> inverse;  // truncated Neumann sum

  // Nonnegative, and positive when R is primitive.
  bool passed() const { return nonnegative && (!primitive || positive); }
};

// Sums lambda^-1 I + lambda^-2 R + lambda^-3 R^2 + ... until the term
// sup-norm drops below 1e-14. Throws PreconditionError when lambda does not
// exceed the spectral radius bound by 1e-6.
ResolventCheck resolvent_nonneg_check(const SparseBooleanMatrix& r,
                                      double lambda);

// Strongly connected and aperiodic, i.e. some power is entrywise positive.
bool primitivity_check(const SparseBooleanMatrix& r);

struct GrowthRow {
  int n = 0;
  double lambda = 0.0;
  double p_a1 = 0.0;
  double p_1 = 0.0;
  int iterations = 0;
  double residual = 0.0;
};

GrowthRow growth_row(int n, const PowerIterationOptions& options = {},
                     int max_n = kDefaultBuildLimit);

struct BoundCheck {
  std::string bound;
  int n = 0;
  bool passed = false;
  std::string detail;
};

// P_{n,1} > 1/8, P_{n,a1} > 1/32, lambda_n < 3.233637, P_{n,1} = lambda_n P_{n,a1}
// within 1e-10, and across consecutive rows lambda strictly increasing and
// P_{n,1} strictly decreasing. Rows must have consecutive n.
std::vector<BoundCheck> bound_report(std::span<const GrowthRow> rows);
// Throws BoundViolation naming the first failed bound.
void require_bounds(std::span<const GrowthRow> rows);

}  // namespace braidlex
