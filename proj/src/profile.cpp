#include "grinv/profile.hpp"

#include "grinv/qarith.hpp"

#include <sstream>

namespace grinv {

void DivisorProfile::add(int exponent, std::int64_t count) {
  std::int64_t &slot = mults[exponent];
  slot += count;
  if (slot == 0)
    mults.erase(exponent);
}

std::int64_t DivisorProfile::dimension() const {
  std::int64_t total = zero_count;
  for (const auto &[i, e] : mults)
    total += e;
  return total;
}

std::int64_t DivisorProfile::weighted_sum() const {
  std::int64_t total = 0;
  for (const auto &[i, e] : mults)
    total += static_cast<std::int64_t>(i) * e;
  return total;
}

std::string DivisorProfile::to_string() const {
  std::ostringstream os;
  for (const auto &[i, e] : mults)
    os << i << ':' << e << ' ';
  os << "zero:" << zero_count;
  return os.str();
}

DivisorProfile profile_from_invariants(const std::vector<mpz_class> &invariants, std::uint64_t prime) {
  DivisorProfile out;
  out.prime = prime;
  for (const auto &d : invariants) {
    if (d == 0)
      ++out.zero_count;
    else
      out.add(val(static_cast<Int>(prime), d), 1);
  }
  return out;
}

} // namespace grinv
