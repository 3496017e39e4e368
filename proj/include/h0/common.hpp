#ifndef h0_common_hpp
#define h0_common_hpp

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace h0 {

  using cplx = std::complex<double>;

  inline constexpr double kPi = 3.141592653589793238462643383279502884;
  inline constexpr double kTwoPi = 2.0 * kPi;
  inline const double kSqrt2Pi = 2.506628274631000502415765284811045253;
  inline constexpr cplx kI{0.0, 1.0};

  // Error taxonomy. Every throw carries a human-readable message naming the
  // offending quantity; callers that need to distinguish failure modes catch
  // the specific type.

  // Malformed or out-of-contract arguments (bad grids, empty data, parameter
  // combinations the constructions reject up front).
  class InvalidInputError : public std::runtime_error {
  public:
    explicit InvalidInputError(const std::string& msg)
      : std::runtime_error(msg) {}
  };

  // The requested accuracy is unreachable on the supplied grid or node
  // budget. The message states the budget that would be needed.
  class ResolutionError : public std::runtime_error {
  public:
    explicit ResolutionError(const std::string& msg)
      : std::runtime_error(msg) {}
  };

  // An intermediate object violates a structural guarantee the construction
  // is supposed to enforce (for example mass appearing in a region that must
  // be identically zero).
  class ConstructionError : public std::runtime_error {
  public:
    explicit ConstructionError(const std::string& msg)
      : std::runtime_error(msg) {}
  };

  // The ladder of regularized boundary evaluations failed to stabilize.
  class BoundaryConvergenceError : public std::runtime_error {
  public:
    explicit BoundaryConvergenceError(const std::string& msg)
      : std::runtime_error(msg) {}
  };

  inline void require(bool cond, const std::string& msg)
  {
    if (!cond)
      throw InvalidInputError(msg);
  }

}

#endif
