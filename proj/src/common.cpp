#include "common.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace polaron {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotSymmetric: return "NotSymmetric";
    case Err::EigenvalueOutOfRange: return "EigenvalueOutOfRange";
    case Err::OriginSingular: return "OriginSingular";
    case Err::GridTooSmall: return "GridTooSmall";
    case Err::GridMismatch: return "GridMismatch";
    case Err::NegativeInput: return "NegativeInput";
    case Err::ZeroMass: return "ZeroMass";
    case Err::IoError: return "IoError";
    case Err::BadMagic: return "BadMagic";
    case Err::VersionMismatch: return "VersionMismatch";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::NoBinding: return "NoBinding";
    case Err::NotConverged: return "NotConverged";
    case Err::NotSymmetricSolution: return "NotSymmetricSolution";
    case Err::LanczosStall: return "LanczosStall";
    case Err::NotCylindrical: return "NotCylindrical";
    case Err::SingularConfiguration: return "SingularConfiguration";
    case Err::SlowConvergence: return "SlowConvergence";
    case Err::CriterionFailed: return "CriterionFailed";
    case Err::ConfigError: return "ConfigError";
    case Err::InvalidArgument: return "InvalidArgument";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

int thread_cap() {
  static const int cap = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("POLARON_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return std::min(v, hw);
    }
    return hw;
  }();
  return cap;
}

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& body) {
  const int nt = std::min<std::int64_t>(thread_cap(), std::max<std::int64_t>(1, count));
  if (nt <= 1 || count < 128) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      // fixed block partition: thread t owns [lo, hi)
      const std::int64_t lo = count * t / nt;
      const std::int64_t hi = count * (t + 1) / nt;
      for (std::int64_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace polaron
