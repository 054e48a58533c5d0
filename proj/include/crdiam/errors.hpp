#pragma once

#include <stdexcept>
#include <string>

namespace crdiam {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text, job file or serialized report.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class RingRejection { NotArtinian, NotRegularSequence, NonHomogeneous };

/// The generators handed to build_ring do not define an Artinian complete intersection.
class RingRejected : public Error {
 public:
  RingRejected(RingRejection why, const std::string& msg) : Error(msg), why_(why) {}
  RingRejection why() const noexcept { return why_; }

 private:
  RingRejection why_;
};

class NotInIdeal : public Error {
 public:
  using Error::Error;
};

/// Analyzer window too small for the trim margins.
class TooNarrow : public Error {
 public:
  using Error::Error;
};

class OutOfWindow : public Error {
 public:
  using Error::Error;
};

class SpliceFailure : public Error {
 public:
  using Error::Error;
};

class DivisionFailure : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must hold exactly did not.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace crdiam
