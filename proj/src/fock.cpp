#include <su11/fock.hpp>

#include <cmath>
#include <cstdio>
#include <string>

#include <su11/special.hpp>

namespace su11 {

namespace {

using cd = std::complex<double>;

constexpr double kPi = 3.14159265358979323846264338327950288;

// Normalized amplitudes from log magnitudes and linear phases (phase m*arg
// on level m); the largest log is subtracted before exponentiation.
Eigen::VectorXcd from_log_amplitudes(const Eigen::VectorXd& logs, double arg) {
    const double top = logs.maxCoeff();
    const int n = static_cast<int>(logs.size());
    Eigen::VectorXcd amp(n);
    for (int m = 0; m < n; ++m)
        amp(m) = std::exp(logs(m) - top) * std::exp(cd(0.0, arg * m));
    amp /= amp.norm();
    return amp;
}

void apply_kx(const Generators& g, const Eigen::VectorXcd& a, Eigen::VectorXcd& out) {
    const int n = static_cast<int>(a.size());
    out.setZero(n);
    for (int m = 0; m + 1 < n; ++m) {
        out(m + 1) += 0.5 * g.kp_sub(m) * a(m);  // K+ part
        out(m) += 0.5 * g.kp_sub(m) * a(m + 1);  // K- part
    }
}

void apply_ky(const Generators& g, const Eigen::VectorXcd& a, Eigen::VectorXcd& out) {
    const int n = static_cast<int>(a.size());
    out.setZero(n);
    const cd half_over_i(0.0, -0.5);  // 1/(2i)
    for (int m = 0; m + 1 < n; ++m) {
        out(m + 1) += half_over_i * g.kp_sub(m) * a(m);
        out(m) -= half_over_i * g.kp_sub(m) * a(m + 1);
    }
}

void apply_kz(const Generators& g, const Eigen::VectorXcd& a, Eigen::VectorXcd& out) {
    out = g.kz_diag.cast<cd>().cwiseProduct(a);
}

}  // namespace

void validate(const FockBasisSpec& s) {
    if (!(s.k > 0.0) || !std::isfinite(s.k)) throw DomainError("fock: k must be positive");
    if (s.n_trunc < 4) throw DomainError("fock: n_trunc must be >= 4");
    if (!(s.tail_tol > 0.0) || s.tail_tol > 1e-6)
        throw DomainError("fock: tail_tol must lie in (0, 1e-6]");
}

double tail_mass(const FockVector& v) {
    const int n = static_cast<int>(v.amp.size());
    const int window = (n + 7) / 8;
    double mass = 0.0;
    for (int m = n - window; m < n; ++m) mass += std::norm(v.amp(m));
    return mass;
}

void check_state(const FockVector& v) {
    if (std::abs(v.amp.norm() - 1.0) > 1e-12)
        throw DomainError("fock state norm deviates from 1 beyond 1e-12");
    const double tail = tail_mass(v);
    if (tail > v.spec.tail_tol) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "fock state tail mass %.3e exceeds tail_tol", tail);
        throw TruncationError(buf, v.spec.n_trunc, tail);
    }
}

Generators build_generators(const FockBasisSpec& s) {
    validate(s);
    Generators g;
    g.kz_diag.resize(s.n_trunc);
    g.kp_sub.resize(s.n_trunc - 1);
    for (int m = 0; m < s.n_trunc; ++m) g.kz_diag(m) = m + s.k;
    for (int m = 0; m + 1 < s.n_trunc; ++m)
        g.kp_sub(m) = std::sqrt((m + 1.0) * (m + 2.0 * s.k));
    return g;
}

DenseGenerators build_dense_generators(const FockBasisSpec& s) {
    const Generators g = build_generators(s);
    const int n = s.n_trunc;
    DenseGenerators d;
    d.kx.setZero(n, n);
    d.ky.setZero(n, n);
    d.kz.setZero(n, n);
    for (int m = 0; m < n; ++m) d.kz(m, m) = g.kz_diag(m);
    for (int m = 0; m + 1 < n; ++m) {
        d.kx(m + 1, m) = 0.5 * g.kp_sub(m);
        d.kx(m, m + 1) = 0.5 * g.kp_sub(m);
        d.ky(m + 1, m) = cd(0.0, -0.5) * g.kp_sub(m);
        d.ky(m, m + 1) = cd(0.0, 0.5) * g.kp_sub(m);
    }
    return d;
}

FockVector pcs_fock_vector(const FockBasisSpec& s, const PcsParams& p) {
    validate(s);
    validate(p);
    const double tmag = std::abs(std::tanh(0.5 * p.r));
    FockVector v{s, Eigen::VectorXcd::Zero(s.n_trunc)};
    if (tmag == 0.0) {
        v.amp(0) = 1.0;
        return v;
    }
    // |xi,k>: amp_m ~ sqrt(Gamma(m+2k)/(m! Gamma(2k))) xi^m,
    // xi = -tanh(r/2) e^{-i phi}.
    const double arg = p.r > 0.0 ? kPi - p.phi : -p.phi;
    Eigen::VectorXd logs(s.n_trunc);
    const double lg2k = log_gamma(2.0 * p.k);
    for (int m = 0; m < s.n_trunc; ++m)
        logs(m) = 0.5 * (log_gamma(m + 2.0 * p.k) - log_gamma(m + 1.0) - lg2k) +
                  m * std::log(tmag);
    v.amp = from_log_amplitudes(logs, arg);
    check_state(v);
    return v;
}

FockVector bgcs_fock_vector(const FockBasisSpec& s, const BgcsParams& p) {
    validate(s);
    validate(p);
    FockVector v{s, Eigen::VectorXcd::Zero(s.n_trunc)};
    if (p.zmag == 0.0) {
        v.amp(0) = 1.0;
        return v;
    }
    // |Z,k>: amp_m ~ Z^m / sqrt(m! Gamma(m+2k)).
    Eigen::VectorXd logs(s.n_trunc);
    for (int m = 0; m < s.n_trunc; ++m)
        logs(m) = m * std::log(p.zmag) -
                  0.5 * (log_gamma(m + 1.0) + log_gamma(m + 2.0 * p.k));
    v.amp = from_log_amplitudes(logs, p.phi);
    check_state(v);
    return v;
}

FockEvolver::FockEvolver(const FockBasisSpec& s, const CouplingParams& c) : spec_(s) {
    validate(s);
    validate(c);
    const Generators g = build_generators(s);
    const Eigen::VectorXd diag = 2.0 * c.omega * g.kz_diag;
    const Eigen::VectorXd sub = c.lambda * g.kp_sub;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("tridiagonal eigensolve failed", s.n_trunc, 0.0);
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
}

FockVector FockEvolver::evolve(const FockVector& v, double t) const {
    if (v.spec.n_trunc != spec_.n_trunc || v.spec.k != spec_.k)
        throw DomainError("fock evolve: basis mismatch");
    // Real orthogonal U: apply to real and imaginary parts separately.
    const Eigen::VectorXd pr = eigenvectors_.transpose() * v.amp.real().eval();
    const Eigen::VectorXd pi = eigenvectors_.transpose() * v.amp.imag().eval();
    const int n = spec_.n_trunc;
    Eigen::VectorXcd w(n);
    for (int i = 0; i < n; ++i)
        w(i) = cd(pr(i), pi(i)) * std::exp(cd(0.0, -eigenvalues_(i) * t));
    const Eigen::VectorXd or_ = eigenvectors_ * w.real().eval();
    const Eigen::VectorXd oi = eigenvectors_ * w.imag().eval();
    FockVector out{v.spec, Eigen::VectorXcd(n)};
    for (int i = 0; i < n; ++i) out.amp(i) = cd(or_(i), oi(i));
    return out;
}

KMoments fock_moments(const FockVector& v) {
    const Generators g = build_generators(v.spec);
    Eigen::VectorXcd w[3];
    apply_kx(g, v.amp, w[0]);
    apply_ky(g, v.amp, w[1]);
    apply_kz(g, v.amp, w[2]);

    KMoments out;
    for (int i = 0; i < 3; ++i) {
        const cd e = v.amp.dot(w[i]);  // <v|w_i>
        if (std::abs(e.imag()) > 1e-12)
            throw DomainError("fock_moments: non-real expectation (residue " +
                              std::to_string(e.imag()) + ")");
        out.mean(i) = e.real();
    }
    // Second moments <w_i|w_j>; the real part is the symmetrized product.
    double sq[3];
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            const double m2 = w[i].dot(w[j]).real();
            out.cov(i, j) = out.cov(j, i) = m2 - out.mean(i) * out.mean(j);
            if (i == j) sq[i] = m2;
        }
    }
    out.casimir = sq[2] - sq[0] - sq[1];
    return out;
}

MomentState to_moment_state(const KMoments& m) { return {m.mean, m.cov}; }

namespace {

FockVector prepare(const FockBasisSpec& s, const StatePrep& state) {
    if (std::holds_alternative<PcsParams>(state))
        return pcs_fock_vector(s, std::get<PcsParams>(state));
    return bgcs_fock_vector(s, std::get<BgcsParams>(state));
}

MomentState evolved_moments(const FockBasisSpec& s, const CouplingParams& c,
                            const StatePrep& state, double t) {
    const FockVector v0 = prepare(s, state);
    const FockEvolver evolver(s, c);
    const FockVector vt = evolver.evolve(v0, t);
    check_state(vt);
    return to_moment_state(fock_moments(vt));
}

double moment_drift(const MomentState& a, const MomentState& b) {
    return std::max((a.mean - b.mean).cwiseAbs().maxCoeff(),
                    (a.cov - b.cov).cwiseAbs().maxCoeff());
}

}  // namespace

TruncationResult adaptive_truncation(const FockBasisSpec& initial, const CouplingParams& c,
                                     const StatePrep& state, double t, int n_cap) {
    validate(initial);
    validate(c);
    constexpr double kDriftTol = 1e-9;

    FockBasisSpec spec = initial;
    MomentState prev;
    bool have_prev = false;
    double last_residual = 0.0;
    while (spec.n_trunc <= n_cap) {
        MomentState cur;
        try {
            cur = evolved_moments(spec, c, state, t);
        } catch (const TruncationError& e) {
            // Preparation or evolved tail does not fit yet; double and retry.
            last_residual = e.tail_mass;
            have_prev = false;
            spec.n_trunc *= 2;
            continue;
        }
        if (have_prev) {
            const double drift = moment_drift(prev, cur);
            last_residual = drift;
            if (drift < kDriftTol) return {spec, cur};
        }
        prev = cur;
        have_prev = true;
        spec.n_trunc *= 2;
    }
    throw ConvergenceError("adaptive_truncation: no convergence up to n_trunc cap " +
                               std::to_string(n_cap),
                           spec.n_trunc / 2, last_residual);
}

}  // namespace su11
