#pragma once

#include <complex>

#include "doctest.h"

namespace support {

inline double rel(std::complex<double> value, std::complex<double> reference) {
  return std::abs(value - reference) / std::abs(reference);
}

}  // namespace support
