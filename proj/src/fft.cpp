#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace polaron {
namespace {

// FFTW planning is not thread safe; execution with the new-array interface is.
std::mutex plan_mutex;

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

PlanPair& plans_for(const FftShape& s) {
  static std::map<std::array<int, 3>, PlanPair> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::array<int, 3>{s.n0, s.n1, s.n2};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  // FFTW is row-major with the last dimension contiguous; our contiguous
  // axis is axis 0, so the FFTW dims are (n2, n1, n0).
  const int dims[3] = {s.n2, s.n1, s.n0};
  std::vector<double> re(s.size());
  std::vector<std::complex<double>> cp(s.csize());
  PlanPair p;
  p.fwd = fftw_plan_dft_r2c(3, dims, re.data(), reinterpret_cast<fftw_complex*>(cp.data()),
                            FFTW_ESTIMATE);
  p.bwd = fftw_plan_dft_c2r(3, dims, reinterpret_cast<fftw_complex*>(cp.data()), re.data(),
                            FFTW_ESTIMATE);
  if (!p.fwd || !p.bwd) fail(Err::Internal, "fftw plan creation failed");
  return cache.emplace(key, p).first->second;
}

}  // namespace

void fft_r2c(const FftShape& s, const double* in, std::complex<double>* out) {
  PlanPair& p = plans_for(s);
  // new-array execute; FFTW r2c would destroy the input for multi-d
  // transforms only with FFTW_PRESERVE_INPUT unavailable -- copy instead.
  std::vector<double> tmp(in, in + s.size());
  fftw_execute_dft_r2c(p.fwd, tmp.data(), reinterpret_cast<fftw_complex*>(out));
}

void fft_c2r(const FftShape& s, const std::complex<double>* in, double* out) {
  PlanPair& p = plans_for(s);
  // c2r destroys its input; work on a scratch copy.
  std::vector<std::complex<double>> tmp(in, in + s.csize());
  fftw_execute_dft_c2r(p.bwd, reinterpret_cast<fftw_complex*>(tmp.data()), out);
}

}  // namespace polaron
