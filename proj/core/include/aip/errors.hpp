#pragma once

#include <stdexcept>
#include <string>

namespace aip {

/// Base class for all geometry-lab errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input whose affine rank is too low (flat point cloud, empty body, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Dimension outside the exact-algebra range {2, 3}.
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Halfspace removes the whole body (or leaves no interior).
class EmptyClip : public Error {
 public:
  using Error::Error;
};

/// Requested polar/gauge center lies outside the interior.
class CenterOutside : public Error {
 public:
  using Error::Error;
};

class Unbounded : public Error {
 public:
  using Error::Error;
};

class Empty : public Error {
 public:
  using Error::Error;
};

class SingularMap : public Error {
 public:
  using Error::Error;
};

/// Iterative solver hit its iteration cap before certifying the tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Floating-body net intersection lost its interior.
class EmptyFloatingBody : public Error {
 public:
  using Error::Error;
};

/// |K| - |K_delta| too small relative to the cut-volume tolerance.
class DegenerateDifference : public Error {
 public:
  using Error::Error;
};

/// Direction p((K-g(K))^polar) vanished; the cap map is undefined there.
class ZeroDirection : public Error {
 public:
  using Error::Error;
};

class InadmissibleParameters : public Error {
 public:
  using Error::Error;
};

/// Cap rounding could not fit an admissible ball near the vertex.
class EtaTooLarge : public Error {
 public:
  using Error::Error;
};

/// Staged density construction failed; message names the stage and bound.
class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

/// Separation experiment exhausted its search budget.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// Body/config file rejected; message carries a line/field diagnostic.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace aip
