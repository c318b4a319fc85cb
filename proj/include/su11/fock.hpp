#pragma once

#include <complex>
#include <variant>

#include <Eigen/Dense>

#include <su11/adjoint.hpp>
#include <su11/bgcs.hpp>
#include <su11/pcs.hpp>

namespace su11 {

// Truncated lowest-weight discrete-series representation: basis |m>,
// m = 0..n_trunc-1, with
//   Kz|m> = (m+k)|m>,  K+|m> = sqrt((m+1)(m+2k))|m+1>,
//   K-|m> = sqrt(m(m+2k-1))|m-1>.
struct FockBasisSpec {
    double k = 0.5;
    int n_trunc = 64;
    double tail_tol = 1e-12;  // max probability allowed in the top ceil(n/8) levels
};

void validate(const FockBasisSpec& s);

struct FockVector {
    FockBasisSpec spec;
    Eigen::VectorXcd amp;  // unit norm
};

// Probability mass in the top ceil(n/8) levels.
double tail_mass(const FockVector& v);

// Throws DomainError if |norm-1| > 1e-12, TruncationError if the tail
// window exceeds spec.tail_tol.
void check_state(const FockVector& v);

// Tridiagonal generator data: kz_diag[m] = m + k and the K+ coupling
// kp_sub[m] = sqrt((m+1)(m+2k)) taking |m> to |m+1>.
struct Generators {
    Eigen::VectorXd kz_diag;
    Eigen::VectorXd kp_sub;
};

Generators build_generators(const FockBasisSpec& s);

// Dense matrices for algebra checks (Kx, Ky, Kz); intended for small n.
struct DenseGenerators {
    Eigen::MatrixXcd kx, ky, kz;
};

DenseGenerators build_dense_generators(const FockBasisSpec& s);

// Amplitudes assembled in log space; both throw TruncationError if the
// truncated state fails its tail bound.
FockVector pcs_fock_vector(const FockBasisSpec& s, const PcsParams& p);
FockVector bgcs_fock_vector(const FockBasisSpec& s, const BgcsParams& p);

// H = 2*omega*Kz + lambda*(K+ + K-) is real symmetric tridiagonal; one
// factorization serves every evolution time.
class FockEvolver {
public:
    FockEvolver(const FockBasisSpec& s, const CouplingParams& c);
    FockVector evolve(const FockVector& v, double t) const;
    const FockBasisSpec& spec() const { return spec_; }

private:
    FockBasisSpec spec_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

// Mean/covariance of (Kx,Ky,Kz) plus the Casimir expectation
// <Kz^2 - Kx^2 - Ky^2> (= k(k-1) exactly on the full space).  Imaginary
// residues of Hermitian expectations are asserted < 1e-12.
struct KMoments {
    Eigen::Vector3d mean;
    Eigen::Matrix3d cov;
    double casimir;
};

KMoments fock_moments(const FockVector& v);
MomentState to_moment_state(const KMoments& m);

using StatePrep = std::variant<PcsParams, BgcsParams>;

// Doubles n_trunc from the initial spec until evolved moments at time t
// drift < 1e-9 between consecutive sizes and the evolved tail stays within
// tail_tol.  Returns the converged spec and moments.  Throws
// ConvergenceError when n_cap is exceeded.
struct TruncationResult {
    FockBasisSpec spec;
    MomentState moments;
};

TruncationResult adaptive_truncation(const FockBasisSpec& initial, const CouplingParams& c,
                                     const StatePrep& state, double t, int n_cap = 1 << 16);

}  // namespace su11
