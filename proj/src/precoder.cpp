// SPDX-License-Identifier: Apache-2.0

#include "nslink/precoder.hpp"

#include <cmath>

namespace nslink {

NullSpaceResult extract_null_space(const CMatrix& g, double threshold,
                                   ThresholdMode mode) {
    if (threshold < 0.0 || !std::isfinite(threshold)) {
        throw std::invalid_argument("extract_null_space: threshold must be finite and >= 0");
    }
    const SvdResult dec = svd(g);
    const auto cols = g.cols();
    const auto k = dec.sigma.size();

    const double sigma_max = k > 0 ? dec.sigma(0) : 0.0;
    const double eff =
        mode == ThresholdMode::relative ? threshold * sigma_max : threshold;

    // sigma descends, so qualifying columns are a trailing block of V.
    Eigen::Index first = k;
    while (first > 0 && dec.sigma(first - 1) <= eff) --first;

    const Eigen::Index dim = cols - first;
    NullSpaceResult r;
    r.basis = make_subspace_basis(dec.v.rightCols(dim));
    r.threshold_used = eff;
    r.sigma_all = dec.sigma;
    r.projector = dim > 0 ? projector(r.basis) : CMatrix::Zero(cols, cols);
    return r;
}

CVector project_symbols(const NullSpaceResult& ns, const CVector& x) {
    if (x.size() != ns.projector.rows()) {
        throw std::invalid_argument("project_symbols: symbol vector size mismatch");
    }
    return ns.projector * x;
}

double spillover_power(const CMatrix& h_true, const NullSpaceResult& ns,
                       double e_s) {
    if (e_s < 0.0 || !std::isfinite(e_s)) {
        throw std::invalid_argument("spillover_power: symbol energy must be finite and >= 0");
    }
    if (h_true.cols() != ns.projector.rows()) {
        throw std::invalid_argument("spillover_power: channel/projector dimension mismatch");
    }
    ensure_finite(h_true, "spillover_power channel");
    const double m = static_cast<double>(h_true.cols());
    return (e_s / m) * (h_true * ns.projector).squaredNorm();
}

}  // namespace nslink
