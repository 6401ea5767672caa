// common.hpp -- error codes, exception type, small shared utilities.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace polaron {

enum class Err {
  NotSymmetric,
  EigenvalueOutOfRange,
  OriginSingular,
  GridTooSmall,
  GridMismatch,
  NegativeInput,
  ZeroMass,
  IoError,
  BadMagic,
  VersionMismatch,
  ShapeMismatch,
  NoBinding,
  NotConverged,
  NotSymmetricSolution,
  LanczosStall,
  NotCylindrical,
  SingularConfiguration,
  SlowConvergence,
  CriterionFailed,
  ConfigError,
  InvalidArgument,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

using Vec3 = std::array<double, 3>;
using IVec3 = std::array<int, 3>;

inline double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

// Thread cap from POLARON_THREADS (>=1). Used only for embarrassingly
// parallel fills; reductions stay sequential so outputs are bit-stable.
int thread_cap();

// parallel_for over [0, count) with deterministic work assignment.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body);

}  // namespace polaron
