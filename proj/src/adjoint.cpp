#include <su11/adjoint.hpp>

namespace su11 {

AdjointMatrix adjoint_matrix(const PropagatorCoefficients& c) {
    AdjointMatrix m;
    m << c.r1, -c.j, -c.s,
         c.j,  c.r2, c.v,
         c.s,  c.v,  c.r3;
    return m;
}

AdjointMatrix adjoint_matrix(const CouplingParams& p, double t) {
    return adjoint_matrix(coefficients(p, t));
}

MomentState propagate_moments(const MomentState& s, const AdjointMatrix& m) {
    MomentState out;
    out.mean = m * s.mean;
    out.cov = m * s.cov * m.transpose();
    return out;
}

}  // namespace su11
