// SPDX-License-Identifier: Apache-2.0
//
// Random channel and perturbation models: Rician fading with an all-ones
// specular component, additive CSI error draws, power-law path loss, and a
// couple of structured random-matrix helpers used by experiments and tests.

#pragma once

#include "nslink/matcore.hpp"
#include "nslink/random.hpp"

namespace nslink {

// H = sqrt(K/(K+1)) * ones + sqrt(1/(K+1)) * W, W iid CN(0,1).
// Per-entry mean power is 1 for every K >= 0.
struct RicianParams {
    double k = 3.0;
    int n_rx = 2;
    int n_tx = 2;
};

enum class PerturbationFamily { none, gaussian, uniform };

// Additive error T on the estimated channel. For gaussian, real and imaginary
// parts are each N(0, scale^2); for uniform, each Uniform(-scale, scale).
struct PerturbationSpec {
    PerturbationFamily family = PerturbationFamily::none;
    double scale = 0.0;
};

// Received interference is attenuated by distance^(-attenuation).
struct PathLossParams {
    double distance = 1.0;
    double attenuation = 2.0;
};

CMatrix draw_rician(const RicianParams& p, RandomStream& rng);
CMatrix draw_perturbation(const PerturbationSpec& spec, int rows, int cols,
                          RandomStream& rng);
double path_gain(const PathLossParams& p);

const char* family_name(PerturbationFamily f);

// Haar-distributed orthonormal columns (rows x cols, cols <= rows).
CMatrix haar_cols(int rows, int cols, RandomStream& rng);

// Random matrix with prescribed singular values (descending, padded with
// zeros up to min(rows, cols)) and Haar random singular vector factors.
CMatrix matrix_with_spectrum(int rows, int cols, const RVector& sigma,
                             RandomStream& rng);

}  // namespace nslink
