#pragma once

// Generated by make_oracles.py (mpmath, 40 digits).

#include <complex>

namespace oracle {

inline const std::complex<double> kQPochHalfHalf{0.28878809508660242, 0.0};
inline const std::complex<double> kEqHalfAtOne{3.4627466194550636, 0.0};
inline const std::complex<double> kQPochComplex{-0.00023232506535296948, -0.42421747507602085};
inline const std::complex<double> kCqHermite5{0.084321, 0.0};
inline const std::complex<double> kWall3{-0.12171453347923936, 0.0};
inline const std::complex<double> kAsc3{0.11025, 0.08425};
inline const std::complex<double> kOmega{0.30848768022584348, 0.0};
inline const std::complex<double> kPhi3{-0.51895083081271899, 0.0};
inline const std::complex<double> kCoeff21{-0.6711601895225908, -0.44744012634839387};
inline const std::complex<double> kCoeff13{-0.04781377234994084, -0.063751696466587787};
inline const std::complex<double> kNormalization2{24.601534249810979, 0.0};
inline const std::complex<double> kOverlapSeries1{2.1398340294241828, 0.16790667874241919};
inline const std::complex<double> kKernelSeries2{-1.250550123303941, -0.028862447255975695};
inline const std::complex<double> kHClassical21{-0.39668690424565316, -0.26445793616376877};
inline const std::complex<double> kClassicalBm{-0.39668690424565316, -0.26445793616376877};
inline const std::complex<double> kOmegaNearOne{0.24199089328476633, 0.0};

}  // namespace oracle
