#pragma once

#include <stdexcept>
#include <string>

namespace funk {

enum class ErrorCode {
    NotInterior,
    NoConvergence,
    NonConvex,
    DegenerateChord,
    NearTangency,
    NormalSolveFailed,
    RadiusTooLarge,
    ZeroLeadingTerm,
    OutsideDisk,
    NoRealBranch,
    InvalidDomainSpec,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace funk
