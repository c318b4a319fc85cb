#pragma once

// Frozen reference values, generated once with an independent
// arbitrary-precision library (30 significant digits, rounded here to
// double).  Tests compare library output against these constants; none are
// produced by the code under test.

namespace frozen {

// log_gamma references
inline constexpr double kLgamma0p1 = 2.25271265173420595987;
inline constexpr double kLgamma0p5 = 0.5723649429247000870717;
inline constexpr double kLgamma1p5 = -0.1207822376352452223455;
inline constexpr double kLgamma12p3 = 18.23898340709224194193;
inline constexpr double kLgamma456p78 = 2338.489952287580433807;
inline constexpr double kLgamma1e6 = 12815504.56914761165998;
inline constexpr double kLnFact10 = 15.10441257307551529523;

// bessel_i references
inline constexpr double kI0_0p5 = 1.063483370741323519263;
inline constexpr double kI1_2 = 1.590636854637329063382;
inline constexpr double kI0_2 = 2.279585302336067267437;
inline constexpr double kI3_10 = 1758.3807166108532381;
inline constexpr double kI2p5_1 = 0.05709890920304824735138;
inline constexpr double kI0p3_29p9 = 707394384451.4245185729;
inline constexpr double kI7p5_30p1 = 335129426142.7651215092;
inline constexpr double kI2_35 = 101293439862977.1340818;
inline constexpr double kI0p5_2 = 2.046236863089055036605;  // sinh(2)/sqrt(pi/2 * 2)
inline constexpr double kLogI50_700 = 694.0194695529353356705;
inline constexpr double kI0_699 = 5.631084539969660918488e+301;

// bessel ratio references
inline constexpr double kRatio1_0_400 = 0.9987492167892056748118;
inline constexpr double kRatio4_3_2 = 0.2230497646133683191152;
inline constexpr double kTanh1p7 = 0.9354090706030989805224;
inline constexpr double kRatio1_0_4 = 0.8635226110245505828546;

// BGCS t=0 references at zmag=2, k=1/2 (rho = I_1(4)/I_0(4))
inline constexpr double kBgcsKz_2_half = 2.227045222049101165709;
inline constexpr double kBgcsVarz_2_half = 1.017314800997370848732;

// PCS t=0 reference: <Kz> = k cosh r at r=1, k=1/2
inline constexpr double kKCoshOne = 0.771540317407621889239;

// analytic roots / boundaries
inline constexpr double kLn2 = 0.6931471805599453094172;
inline constexpr double kInvSqrt2 = 0.7071067811865475244008;
inline constexpr double kTauMaxW1L10 = 2.649146182805242295351;  // asinh(sqrt(99)/sqrt(2))

// transport coefficients (r1, r2, r3, j, s, v), frozen from the derivation
// notebooks ((omega, lambda, t) as named)
inline constexpr double kCoA[6] = {-1.0904932088774197, -0.85821618566881752,
                                   1.2322770232086022, 0.54442455950119828,
                                   0.69683106962580654, 0.1814748531670661};  // (3, 1, pi/2)
inline constexpr double kCoC[6] = {-1.2094610707931794, 7.6283832123795365,
                                   9.837844283172716, 4.3662428713526671,
                                   4.418922141586358, 8.7324857427053342};  // (1, 2, pi/4)
inline constexpr double kCoD[6] = {-1.88, 1.0, 3.88, 2.4, 2.88, 2.4};  // (1, 1, 1.2), exact

// closed-form vs oracle spot values at (r=1, phi=1, k=1/2), coeffs (3,1,pi/2)
inline constexpr double kPcsLitVarX = 4.621629033450854e-01;
inline constexpr double kPcsLitVarY = 4.032833684409198e-01;
inline constexpr double kPcsLitKz = 6.397900806885837e-01;
inline constexpr double kPcsOrcVarX = 2.560479789065843e-01;

// closed-form vs oracle spot values at (zmag=2, phi=1, k=1/2, omega=3,
// lambda=1, t=1)
inline constexpr double kBgcsLitVarX = 9.893460340608614e-01;
inline constexpr double kBgcsLitVarY = 7.832294971491148e-01;
inline constexpr double kBgcsLitKz = 2.705585714749200e+00;
inline constexpr double kBgcsOrcVarX = 1.138305657933262e+00;
inline constexpr double kBgcsOrcVarY = 1.626856005944566e+00;

// oracle figure-7 profile minima (720 phi points, zmag=200, k=1/2,
// omega=3, lambda=1, t=pi/2)
inline constexpr double kFig7MinFx = -0.485802178;
inline constexpr double kFig7MinFy = -0.487494335;

// oracle resonance f_y sign change along phi=0 at tau=3pi (omega=lambda=1):
// root in r, slightly below ln 2
inline constexpr double kFig5FyRoot = 0.690367730116;

// regime-seam deviations of the coefficients against the resonance
// polynomials at t=5 (max over the six coefficients)
inline constexpr double kSeamDev1em6 = 9.333410e-04;  // lambda = 1 +- 1e-6
inline constexpr double kSeamDev1em9 = 9.333334e-07;  // lambda = 1 + 1e-9

}  // namespace frozen
