#ifndef OACK_COMMON_HPP
#define OACK_COMMON_HPP

#include <stdexcept>
#include <string>

namespace oack {

// Thrown when a request exceeds an enumeration cap. Distinct from
// std::invalid_argument so callers can map it to its own exit code.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Default dimension cap for exponential-size enumerations (vertex scans,
// sign-pattern scans, isometry searches). Overridable per call.
inline constexpr int kDefaultCap = 6;

// Hard guards on combinatorial search sizes, independent of the dimension
// cap. They keep worst cases (e.g. facet subsets of the zero-norm ball at
// the top of the cap range) from silently running for hours.
inline constexpr long long kMaxBasisSubsets = 10'000'000;
inline constexpr long long kMaxBasisTuples = 5'000'000;

} // namespace oack

#endif
