#include "braidlex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <locale>
#include <numeric>
#include <sstream>

#include "braidlex/errors.hpp"

namespace braidlex {
namespace {

// out = x R
void left_multiply(const SparseBooleanMatrix& r, const std::vector<double>& x,
                   std::vector<double>& out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (const auto& e : r.entries()) out[e.col] += x[e.row];
}

std::string fmt(double value) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.precision(12);
  out << value;
  return out.str();
}

}  // namespace

SpectralResult perron(const SparseBooleanMatrix& r, const PowerIterationOptions& options) {
  const std::size_t dim = r.dim();
  if (dim == 0) throw PreconditionError("perron needs a nonempty matrix");
  if (!(options.tol > 0.0)) throw PreconditionError("tolerance must be positive");

  std::vector<double> v(dim, 1.0 / static_cast<double>(dim));
  std::vector<double> w(dim, 0.0);
  double previous = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::infinity();

  for (int it = 1; it <= options.max_iter; ++it) {
    left_multiply(r, v, w);
    const double lambda = std::accumulate(w.begin(), w.end(), 0.0);
    if (!(lambda > 0.0)) {
      throw ConvergenceError("power iteration collapsed to zero", residual);
    }
    residual = 0.0;
    for (std::size_t q = 0; q < dim; ++q) {
      residual = std::max(residual, std::abs(w[q] - lambda * v[q]));
    }
    if (std::abs(lambda - previous) < options.tol && residual < options.tol) {
      return SpectralResult{lambda, std::move(v), it, residual};
    }
    previous = lambda;
    for (std::size_t q = 0; q < dim; ++q) v[q] = w[q] / lambda;
  }
  throw ConvergenceError("power iteration did not converge in " +
                             std::to_string(options.max_iter) +
                             " iterations (residual " + fmt(residual) + ")",
                         residual);
}

ProportionReport proportions(const Automaton& a, const SpectralResult& r) {
  const auto states = recurrent_states(a);
  if (states.size() != r.v.size()) {
    throw PreconditionError("spectral result does not match the recurrent states");
  }
  ProportionReport out;
  out.n = a.n();
  out.per_letter.assign(static_cast<std::size_t>(a.n()), 0.0);
  const auto t11 = a.find(SegmentConfig{1, 1, 1, {}});
  bool found = false;
  for (std::size_t p = 0; p < states.size(); ++p) {
    out.per_letter[a.final_letter(states[p]) - 1] += r.v[p];
    if (t11 && states[p] == *t11) {
      out.p_state_t11 = r.v[p];
      found = true;
    }
  }
  if (!found) throw InternalConsistencyError("(1,1,1,{}) is not recurrent");
  return out;
}

double spectral_radius_bound(const SparseBooleanMatrix& r) {
  const std::size_t dim = r.dim();
  if (dim == 0) return 0.0;
  std::vector<double> x(dim, 1.0 / static_cast<double>(dim));
  std::vector<double> xr(dim, 0.0);
  double upper = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 100000; ++it) {
    left_multiply(r, x, xr);
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < dim; ++q) {
      const double ratio = xr[q] / x[q];
      hi = std::max(hi, ratio);
      lo = std::min(lo, ratio);
    }
    upper = std::min(upper, hi);
    if (upper - lo < 1e-10) break;
    // x <- x (R + I), renormalized; stays entrywise positive.
    double total = 0.0;
    for (std::size_t q = 0; q < dim; ++q) {
      x[q] += xr[q];
      total += x[q];
    }
    for (auto& value : x) value /= total;
  }
  return upper;
}

ResolventCheck resolvent_nonneg_check(const SparseBooleanMatrix& r, double lambda) {
  const double radius = spectral_radius_bound(r);
  if (!(lambda > radius + 1e-6)) {
    throw PreconditionError("lambda " + fmt(lambda) +
                            " does not exceed the spectral radius bound " +
                            fmt(radius));
  }
  const std::size_t dim = r.dim();
  ResolventCheck out;
  std::vector<std::vector<double>> term(dim, std::vector<double>(dim, 0.0));
  for (std::size_t p = 0; p < dim; ++p) term[p][p] = 1.0 / lambda;
  out.inverse = term;
  out.terms = 1;

  std::vector<double> next(dim);
  double norm = dim > 0 ? 1.0 / lambda : 0.0;
  while (norm >= 1e-14) {
    if (out.terms > 10000000) {
      throw ConvergenceError("Neumann series did not converge", norm);
    }
    norm = 0.0;
    for (std::size_t p = 0; p < dim; ++p) {
      left_multiply(r, term[p], next);
      for (std::size_t q = 0; q < dim; ++q) {
        term[p][q] = next[q] / lambda;
        out.inverse[p][q] += term[p][q];
        norm = std::max(norm, std::abs(term[p][q]));
      }
    }
    ++out.terms;
  }

  out.min_entry = std::numeric_limits<double>::infinity();
  for (const auto& row : out.inverse) {
    for (double value : row) out.min_entry = std::min(out.min_entry, value);
  }
  out.nonnegative = out.min_entry >= 0.0;
  out.positive = out.min_entry > 0.0;
  out.primitive = primitivity_check(r);
  return out;
}

bool primitivity_check(const SparseBooleanMatrix& r) {
  const std::size_t dim = r.dim();
  if (dim == 0) return false;
  std::vector<std::vector<std::size_t>> forward(dim);
  std::vector<std::vector<std::size_t>> backward(dim);
  for (const auto& e : r.entries()) {
    forward[e.row].push_back(e.col);
    backward[e.col].push_back(e.row);
  }

  constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
  auto levels = [&](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<std::size_t> level(dim, unseen);
    std::deque<std::size_t> queue{0};
    level[0] = 0;
    while (!queue.empty()) {
      const std::size_t p = queue.front();
      queue.pop_front();
      for (std::size_t q : adj[p]) {
        if (level[q] == unseen) {
          level[q] = level[p] + 1;
          queue.push_back(q);
        }
      }
    }
    return level;
  };

  const auto level = levels(forward);
  const auto back = levels(backward);
  for (std::size_t p = 0; p < dim; ++p) {
    if (level[p] == unseen || back[p] == unseen) return false;
  }
  // Period of an irreducible matrix: gcd of level[u] + 1 - level[v] over arcs.
  std::size_t period = 0;
  for (const auto& e : r.entries()) {
    const auto diff = static_cast<long long>(level[e.row]) + 1 -
                      static_cast<long long>(level[e.col]);
    period = std::gcd(period, static_cast<std::size_t>(std::llabs(diff)));
  }
  return period == 1;
}

GrowthRow growth_row(int n, const PowerIterationOptions& options, int max_n) {
  const Automaton a = Automaton::build(n, max_n);
  const SpectralResult spectrum = perron(recurrent_matrix(a), options);
  const ProportionReport report = proportions(a, spectrum);
  return GrowthRow{n,
                   spectrum.lambda,
                   report.p_state_t11,
                   report.p_n1(),
                   spectrum.iterations,
                   spectrum.residual};
}

std::vector<BoundCheck> bound_report(std::span<const GrowthRow> rows) {
  std::vector<BoundCheck> out;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    const GrowthRow& row = rows[p];
    if (p > 0 && row.n != rows[p - 1].n + 1) {
      throw PreconditionError("bound report needs consecutive n");
    }
    out.push_back({"P_n_1 > 1/8", row.n, row.p_1 > 0.125, "P_n_1 = " + fmt(row.p_1)});
    out.push_back({"P_n_a1 > 1/32", row.n, row.p_a1 > 0.03125,
                   "P_n_a1 = " + fmt(row.p_a1)});
    out.push_back({"lambda < 3.233637", row.n, row.lambda < 3.233637,
                   "lambda = " + fmt(row.lambda)});
    const double gap = std::abs(row.p_1 - row.lambda * row.p_a1);
    out.push_back({"P_n_1 = lambda * P_n_a1", row.n, gap <= 1e-10,
                   "|difference| = " + fmt(gap)});
    if (p > 0) {
      const GrowthRow& prev = rows[p - 1];
      out.push_back({"lambda increasing", row.n, row.lambda > prev.lambda,
                     fmt(prev.lambda) + " -> " + fmt(row.lambda)});
      out.push_back({"P_n_1 decreasing", row.n, row.p_1 < prev.p_1,
                     fmt(prev.p_1) + " -> " + fmt(row.p_1)});
    }
  }
  return out;
}

void require_bounds(std::span<const GrowthRow> rows) {
  for (const auto& check : bound_report(rows)) {
    if (!check.passed) {
      throw BoundViolation("bound '" + check.bound + "' violated at n=" +
                           std::to_string(check.n) + " (" + check.detail + ")");
    }
  }
}

}  // namespace braidlex
