// SPDX-License-Identifier: Apache-2.0

#include "nslink/channel.hpp"

#include <Eigen/QR>
#include <cmath>

namespace nslink {

CMatrix draw_rician(const RicianParams& p, RandomStream& rng) {
    if (p.k < 0.0 || !std::isfinite(p.k)) {
        throw std::invalid_argument("draw_rician: K factor must be finite and >= 0");
    }
    if (p.n_rx < 1 || p.n_tx < 1) {
        throw std::invalid_argument("draw_rician: dimensions must be >= 1");
    }
    const double los = std::sqrt(p.k / (p.k + 1.0));
    const double nlos = std::sqrt(1.0 / (p.k + 1.0));
    CMatrix h(p.n_rx, p.n_tx);
    for (int j = 0; j < p.n_tx; ++j) {
        for (int i = 0; i < p.n_rx; ++i) {
            h(i, j) = los + nlos * rng.cgaussian();
        }
    }
    return h;
}

CMatrix draw_perturbation(const PerturbationSpec& spec, int rows, int cols,
                          RandomStream& rng) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("draw_perturbation: dimensions must be >= 1");
    }
    if (spec.scale < 0.0 || !std::isfinite(spec.scale)) {
        throw std::invalid_argument("draw_perturbation: scale must be finite and >= 0");
    }
    CMatrix t = CMatrix::Zero(rows, cols);
    switch (spec.family) {
        case PerturbationFamily::none:
            break;
        case PerturbationFamily::gaussian:
            for (int j = 0; j < cols; ++j) {
                for (int i = 0; i < rows; ++i) {
                    const double re = spec.scale * rng.gaussian();
                    const double im = spec.scale * rng.gaussian();
                    t(i, j) = {re, im};
                }
            }
            break;
        case PerturbationFamily::uniform:
            for (int j = 0; j < cols; ++j) {
                for (int i = 0; i < rows; ++i) {
                    const double re = rng.uniform(-spec.scale, spec.scale);
                    const double im = rng.uniform(-spec.scale, spec.scale);
                    t(i, j) = {re, im};
                }
            }
            break;
    }
    return t;
}

double path_gain(const PathLossParams& p) {
    if (p.distance < 1.0 || !std::isfinite(p.distance)) {
        throw std::invalid_argument("path_gain: distance must be >= 1");
    }
    if (p.attenuation < 2.0 || p.attenuation > 4.0) {
        throw std::invalid_argument("path_gain: attenuation must lie in [2, 4]");
    }
    return std::pow(p.distance, -p.attenuation);
}

const char* family_name(PerturbationFamily f) {
    switch (f) {
        case PerturbationFamily::none: return "none";
        case PerturbationFamily::gaussian: return "gaussian";
        case PerturbationFamily::uniform: return "uniform";
    }
    return "?";
}

CMatrix haar_cols(int rows, int cols, RandomStream& rng) {
    if (cols > rows || cols < 1) {
        throw std::invalid_argument("haar_cols: need 1 <= cols <= rows");
    }
    CMatrix g(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) g(i, j) = rng.cgaussian();
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    return qr.householderQ() * CMatrix::Identity(rows, cols);
}

CMatrix matrix_with_spectrum(int rows, int cols, const RVector& sigma,
                             RandomStream& rng) {
    const int k = static_cast<int>(sigma.size());
    if (k < 1 || k > std::min(rows, cols)) {
        throw std::invalid_argument("matrix_with_spectrum: bad spectrum length");
    }
    auto su = rng.split(0);
    auto sv = rng.split(1);
    const CMatrix u = haar_cols(rows, k, su);
    const CMatrix v = haar_cols(cols, k, sv);
    return u * sigma.asDiagonal() * v.adjoint();
}

}  // namespace nslink
