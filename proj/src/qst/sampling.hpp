/*
 * This file is part of qstbench.
 *
 * Licensed under the Apache License, Version 2.0; see the LICENSE file
 * in the project root or http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QSTBENCH_SAMPLING_HPP
#define QSTBENCH_SAMPLING_HPP

#include "qst/common.hpp"
#include "qst/measure.hpp"
#include "qst/rng.hpp"

namespace qst {

/// Born-rule outcome probabilities <m_i|rho|m_i>, clamped to [0,1].
RVector born_probabilities(const CMatrix& rho, const ProjectorSet& set);

/// Infinite-copy feature vector: per-set Born probabilities concatenated in
/// suite order.  Length = d * set_count.
RVector exact_frequencies(const CMatrix& rho, const MeasurementSuite& suite);

/// Finite-shot feature vector.  Each set receives one multinomial draw with
/// S*d trials over its Born probabilities (S copies per measurement operator
/// on average, so the total copy budget is N = S * total_projectors).  Each
/// per-set block sums to exactly 1.
RVector sample_frequencies(const CMatrix& rho, const MeasurementSuite& suite,
                           long shots_per_measurement, RandomEngine& rng);

}  // namespace qst

#endif  // QSTBENCH_SAMPLING_HPP
