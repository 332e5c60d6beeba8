#pragma once

#include <stdexcept>
#include <string>

namespace wittkit {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error(what) {}
};

class RankDeficient : public Error {
 public:
  explicit RankDeficient(const std::string& what) : Error(what) {}
};

// k exceeds the maximal dimension floor(m/2) of an isotropic plane.
class DimensionBound : public Error {
 public:
  explicit DimensionBound(const std::string& what) : Error(what) {}
};

class DegenerateForm : public Error {
 public:
  explicit DegenerateForm(const std::string& what) : Error(what) {}
};

class NotIsotropic : public Error {
 public:
  explicit NotIsotropic(const std::string& what) : Error(what) {}
};

// No row permutation makes the second k-block invertible within tolerance.
class NotNormalizable : public Error {
 public:
  explicit NotNormalizable(const std::string& what) : Error(what) {}
};

// The generic transporter's open condition failed (singular N1 or
// rank-deficient X); callers fall back to the frame construction.
class NotGeneric : public Error {
 public:
  explicit NotGeneric(const std::string& what) : Error(what) {}
};

// A produced object failed its own residual certificate.
class CertificationFailure : public Error {
 public:
  explicit CertificationFailure(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace wittkit
