/*
 * This file is part of qstbench.
 *
 * Licensed under the Apache License, Version 2.0; see the LICENSE file
 * in the project root or http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qst/sampling.hpp"

#include <algorithm>

namespace qst {

RVector born_probabilities(const CMatrix& rho, const ProjectorSet& set) {
  const int d = set.dim();
  if (rho.rows() != d || rho.cols() != d)
    throw Error(ErrorCode::DimensionMismatch,
                "state and projector set dimensions differ");
  RVector p(d);
  for (int i = 0; i < d; ++i) {
    const CVector& m = set.vectors[i];
    double v = (m.adjoint() * rho * m).value().real();
    p[i] = std::clamp(v, 0.0, 1.0);
  }
  return p;
}

RVector exact_frequencies(const CMatrix& rho, const MeasurementSuite& suite) {
  const int d = suite.dim();
  RVector f(suite.total_projectors());
  int offset = 0;
  for (const ProjectorSet& set : suite.sets) {
    f.segment(offset, d) = born_probabilities(rho, set);
    offset += d;
  }
  return f;
}

namespace {

// Multinomial draw via conditional binomials, O(d) per set.
void multinomial_counts(const RVector& p, long trials, RandomEngine& rng,
                        std::vector<long>& counts) {
  const int d = static_cast<int>(p.size());
  counts.assign(d, 0);
  long remaining = trials;
  double rest = 1.0;
  for (int i = 0; i < d - 1 && remaining > 0; ++i) {
    double q = rest > 0.0 ? std::clamp(p[i] / rest, 0.0, 1.0) : 0.0;
    long c = q >= 1.0 ? remaining
                      : std::binomial_distribution<long>(remaining, q)(rng);
    counts[i] = c;
    remaining -= c;
    rest -= p[i];
  }
  counts[d - 1] = remaining;
}

}  // namespace

RVector sample_frequencies(const CMatrix& rho, const MeasurementSuite& suite,
                           long shots_per_measurement, RandomEngine& rng) {
  if (shots_per_measurement < 1)
    throw Error(ErrorCode::OutOfRange, "shots per measurement must be >= 1");
  const int d = suite.dim();
  const long trials = shots_per_measurement * d;
  RVector f(suite.total_projectors());
  std::vector<long> counts;
  int offset = 0;
  for (const ProjectorSet& set : suite.sets) {
    RVector p = born_probabilities(rho, set);
    const double total = p.sum();
    if (total <= 0.0)
      throw Error(ErrorCode::ZeroProbability,
                  "projector set has zero total probability");
    p /= total;
    multinomial_counts(p, trials, rng, counts);
    for (int i = 0; i < d; ++i)
      f[offset + i] = static_cast<double>(counts[i]) / trials;
    // Pin the block sum to exactly 1 by adjusting its largest entry.
    for (int pass = 0; pass < 3; ++pass) {
      double s = 0.0;
      for (int i = 0; i < d; ++i) s += f[offset + i];
      if (s == 1.0) break;
      int imax = 0;
      for (int i = 1; i < d; ++i)
        if (f[offset + i] > f[offset + imax]) imax = i;
      f[offset + imax] += 1.0 - s;
    }
    offset += d;
  }
  return f;
}

}  // namespace qst
