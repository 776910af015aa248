// Generated by tests/oracle/golden_oracle.py (mpmath, 50 digits). Do not edit.
#pragma once

namespace radicsum::golden {

inline constexpr double kRootSum_4_2 = 6.1462643699419723423;
inline constexpr double kLogFactorial_5 = 4.7874917427820459942;
inline constexpr double kLogFactorial_10 = 15.104412573075515295;
inline constexpr double kWeightedLogSum_3_2 = 2.8831104452612391233;
inline constexpr double kHyperLog_2 = 1.3862943611198906188;
inline constexpr double kHyperLog_10 = 102.08283055193492589;
inline constexpr double kHyperLog_100 = 20756.741958037947772;
inline constexpr double kApprox_4_2 = 6.3355259362494041398;
inline constexpr double kApprox_1_2 = 1.1785113019775792073;
inline constexpr double kPhi_4_2 = 0.1892615663074317975;
inline constexpr double kPhi_1_64 = 0.48522964335288298357;
inline constexpr double kPhi_10_2 = 0.19532454789113214525;
inline constexpr double kStirling_1 = -0.08106146679532725822;
inline constexpr double kStirling_10 = 15.096082009642152424;
inline constexpr double kHyperMain_1 = -0.30685281944005469058;
inline constexpr double kHyperMain_2 = 1.0458368660043290742;
inline constexpr double kHyperMain_10 = 101.63424000391037992;
inline constexpr double kHyperResidual_1 = 0.30685281944005469058;
inline constexpr double kHyperResidual_2 = 0.34045749511556154465;
inline constexpr double kHyperResidual_10 = 0.44859054802454596988;
inline constexpr double kHyperResidual_100 = 0.63334798958754502083;
inline constexpr double kXi_1 = 0.96027922916008203587;
inline constexpr double kXi_10 = 0.92651220869262458258;
inline constexpr double kXi_100 = 0.91976361301691533022;
inline constexpr double kXi_10000 = 0.91894686570475328984;
inline constexpr double kExpXi_10 = 2.5256847363899456774;
inline constexpr double kDphiDr_4_2 = 0.10702587012280318184;
inline constexpr double kDphiDr_10_2 = 0.10402568332531912578;
inline constexpr double kDphiDrAtOne_10 = 0.44859054802454596988;
inline constexpr double kSqrtTwoPi = 2.5066282746310005024;

}  // namespace radicsum::golden
