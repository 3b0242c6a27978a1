// SPDX-License-Identifier: Apache-2.0
//
// Null-space extraction by singular value thresholding, and the projection
// precoder built from it.

#pragma once

#include "nslink/matcore.hpp"

namespace nslink {

enum class ThresholdMode { absolute, relative };

// Null space of an estimated channel G: the right singular vectors whose
// singular values fall at or below the effective threshold (relative mode
// scales by the largest singular value). Columns of V beyond min(rows, cols)
// carry implicit zero singular values and always qualify.
struct NullSpaceResult {
    SubspaceBasis basis;
    double threshold_used = 0.0;  // effective absolute threshold
    RVector sigma_all;            // full spectrum of the input, descending
    CMatrix projector;            // n_tx x n_tx, zero when basis is empty
};

NullSpaceResult extract_null_space(const CMatrix& g, double threshold,
                                   ThresholdMode mode);

// x -> P x; an empty null space maps everything to zero.
CVector project_symbols(const NullSpaceResult& ns, const CVector& x);

// Interference power leaked through an estimated projector when white symbols
// of total energy e_s are spread over the n_tx antennas:
// (e_s / n_tx) * ||H_true * P_est||_F^2.  Path loss is applied by callers.
double spillover_power(const CMatrix& h_true, const NullSpaceResult& ns,
                       double e_s);

}  // namespace nslink
