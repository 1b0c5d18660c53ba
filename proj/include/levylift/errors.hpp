#ifndef LEVYLIFT_ERRORS_HPP
#define LEVYLIFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace levylift {

struct DivergentKernel : std::runtime_error {
  explicit DivergentKernel(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeKernel : std::runtime_error {
  explicit NegativeKernel(const std::string& what) : std::runtime_error(what) {}
};

struct TailDivergence : std::runtime_error {
  explicit TailDivergence(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedOrder : std::runtime_error {
  explicit UnsupportedOrder(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureFailure : std::runtime_error {
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

struct SingularQuadratureFailure : QuadratureFailure {
  explicit SingularQuadratureFailure(const std::string& what) : QuadratureFailure(what) {}
};

struct OscillatoryQuadratureFailure : QuadratureFailure {
  explicit OscillatoryQuadratureFailure(const std::string& what) : QuadratureFailure(what) {}
};

struct InsufficientSmoothness : std::runtime_error {
  explicit InsufficientSmoothness(const std::string& what) : std::runtime_error(what) {}
};

struct AliasingError : std::runtime_error {
  explicit AliasingError(const std::string& what) : std::runtime_error(what) {}
};

struct MissingNormalDerivative : std::runtime_error {
  explicit MissingNormalDerivative(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegrable : std::runtime_error {
  explicit NonIntegrable(const std::string& what) : std::runtime_error(what) {}
};

struct PositivityFailure : std::runtime_error {
  explicit PositivityFailure(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyK0 : std::runtime_error {
  explicit EmptyK0(const std::string& what) : std::runtime_error(what) {}
};

struct NotSupersolution : std::runtime_error {
  explicit NotSupersolution(const std::string& what) : std::runtime_error(what) {}
};

struct NotSubsolution : std::runtime_error {
  explicit NotSubsolution(const std::string& what) : std::runtime_error(what) {}
};

struct ScenarioError : std::runtime_error {
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace levylift

#endif
