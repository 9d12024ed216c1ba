#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finslie/algebra.hpp"
#include "finslie/hypercomplex.hpp"
#include "finslie/rational.hpp"
#include "finslie/riemann.hpp"

namespace finslie {

/// Parse failure in a definition file. `location()` is either "line L,
/// column C" for syntax errors or a JSON pointer such as "/brackets/2/coeffs".
class DefinitionError : public ParseError {
 public:
  DefinitionError(std::string location, const std::string& message)
      : ParseError(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// The metric section parsed but is not symmetric positive definite.
class MetricDefinitionError : public DefinitionError {
 public:
  using DefinitionError::DefinitionError;
};

/// Contents of an algebra definition file:
///
///   {
///     "dim": 4,
///     "labels": ["X", "Y", "Z", "W"],
///     "brackets": [{"i": 0, "j": 2, "coeffs": ["1", "0", "0", "0"]}, ...],
///     "metric": [["1", "0", ...], ...],          (optional, identity)
///     "Q": ["0", "0", "1/2", "0"],              (optional)
///     "hypercomplex": {"j1": [[...]], "j2": [[...]], "j3": [[...]]}   (optional)
///   }
///
/// Scalars are strings "p/q" or integers. Unlisted bracket pairs are zero.
struct DefinitionFile {
  LieAlgebra algebra;
  std::optional<MetricTensor> metric;
  std::optional<ExactVector> q;
  std::optional<ComplexStructureTriple> hypercomplex;

  MetricTensor metric_or_identity() const {
    return metric ? *metric : MetricTensor::identity(algebra.dim());
  }

  friend bool operator==(const DefinitionFile&, const DefinitionFile&) = default;
};

DefinitionFile parse_definition(std::string_view text);
DefinitionFile load_definition(const std::filesystem::path& path);

/// Canonical text form; parse_definition(serialize_definition(d)) == d.
std::string serialize_definition(const DefinitionFile& def);

/// Comma-separated rationals, e.g. "1/2,0,-3,0".
ExactVector parse_rational_list(std::string_view text);

}  // namespace finslie
