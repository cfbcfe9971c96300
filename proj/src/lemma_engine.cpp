#include "grinv/lemma_engine.hpp"

#include "grinv/errors.hpp"

#include <string>

namespace grinv {

DivisorProfile resolve_multiplicities(const LemmaInput &input, std::uint64_t prime) {
  const auto &steps = input.steps;
  if (input.kernel_dim < 0 || input.kernel_dim > input.ambient_dim)
    throw MonotonicityError("kernel dimension outside [0, ambient_dim]");
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (steps[j].exponent <= (j == 0 ? 0 : steps[j - 1].exponent))
      throw MonotonicityError("staircase exponents must be positive and strictly increasing");
    if (j > 0 && steps[j].bound >= steps[j - 1].bound)
      throw MonotonicityError("staircase bounds must strictly decrease");
  }
  if (!steps.empty() && (steps.front().bound > input.ambient_dim || steps.back().bound < input.kernel_dim))
    throw MonotonicityError("staircase bounds must lie between kernel_dim and ambient_dim");

  std::int64_t spent = 0;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const std::int64_t next = j + 1 < steps.size() ? steps[j + 1].bound : input.kernel_dim;
    spent += (steps[j].bound - next) * steps[j].exponent;
  }
  if (spent != input.d)
    throw InconsistentBudget("staircase spends " + std::to_string(spent) + " but the budget is " +
                             std::to_string(input.d));

  DivisorProfile out;
  out.prime = prime;
  out.zero_count = input.kernel_dim;
  const std::int64_t top = steps.empty() ? input.kernel_dim : steps.front().bound;
  out.add(0, input.ambient_dim - top);
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const std::int64_t next = j + 1 < steps.size() ? steps[j + 1].bound : input.kernel_dim;
    out.add(static_cast<int>(steps[j].exponent), steps[j].bound - next);
  }
  return out;
}

} // namespace grinv
