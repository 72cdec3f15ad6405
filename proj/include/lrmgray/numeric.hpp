#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

namespace lrmgray {

using Rational = boost::rational<std::int64_t>;

/// Binomial coefficient C(n, k); 0 when k is out of range. Throws
/// Error(Resource) when the value does not fit in 63 bits.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);

/// a mod n, always in [0, n).
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace lrmgray
