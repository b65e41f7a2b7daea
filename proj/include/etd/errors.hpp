#pragma once

#include <stdexcept>
#include <string>

namespace etd {

enum class MonoidErrorCode {
  NotSharp,
  NotSaturatedMonoid,
  DegenerateInput,
};

class MonoidError : public std::runtime_error {
 public:
  MonoidError(MonoidErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  MonoidErrorCode code() const { return code_; }

 private:
  MonoidErrorCode code_;
};

enum class EtdErrorCode {
  NotInjective,
  NotFreeBasis,
  BasisNotFaceUnion,
  FacetSetTooSmall,
  NotAnElement,
};

class EtdError : public std::runtime_error {
 public:
  EtdError(EtdErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  EtdErrorCode code() const { return code_; }

 private:
  EtdErrorCode code_;
};

}  // namespace etd
