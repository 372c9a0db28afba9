#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace eqs {

/// exp(2 pi i k / order), exact at multiples of a quarter turn.
template <typename Real = double>
std::complex<Real> unit_root(long long k, long long order) {
  long long rem = k % order;
  if (rem < 0) rem += order;
  if ((4 * rem) % order == 0) {
    switch ((4 * rem) / order) {
      case 0: return {Real(1), Real(0)};
      case 1: return {Real(0), Real(1)};
      case 2: return {Real(-1), Real(0)};
      default: return {Real(0), Real(-1)};
    }
  }
  const Real angle = Real(2) * std::numbers::pi_v<Real> * Real(rem) / Real(order);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace eqs
