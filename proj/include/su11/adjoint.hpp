#pragma once

#include <Eigen/Dense>

#include <su11/coupling.hpp>

namespace su11 {

// Transport matrix for mean values of (Kx, Ky, Kz); element of SO(2,1) with
// metric eta = diag(1, 1, -1): M^T eta M = eta, det M = 1.
using AdjointMatrix = Eigen::Matrix3d;

AdjointMatrix adjoint_matrix(const PropagatorCoefficients& c);
AdjointMatrix adjoint_matrix(const CouplingParams& p, double t);

// Gaussian-closure state summary: mean of (Kx,Ky,Kz) and symmetrized
// covariance cov_ij = <{Ki,Kj}>/2 - <Ki><Kj>.
struct MomentState {
    Eigen::Vector3d mean;
    Eigen::Matrix3d cov;
};

// Exact for any state: mean' = M mean, cov' = M cov M^T.
MomentState propagate_moments(const MomentState& s, const AdjointMatrix& m);

}  // namespace su11
