#include "lrt/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace lrt::fft {

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex g_mutex;
std::map<int, PlanPair>& plan_cache() {
  static std::map<int, PlanPair> cache;
  return cache;
}

// FFTW_ESTIMATE keeps planning deterministic; in-place plans with
// FFTW_UNALIGNED work on any caller buffer.
PlanPair& plans_for(int n) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PlanPair p;
  std::vector<std::complex<double>> tmp(static_cast<size_t>(n) * n * n);
  auto* ptr = reinterpret_cast<fftw_complex*>(tmp.data());
  p.fwd = fftw_plan_dft_3d(n, n, n, ptr, ptr, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_3d(n, n, n, ptr, ptr, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(n, p).first->second;
}

}  // namespace

// fftw_execute_dft on distinct buffers is thread-safe; only planning needs
// the lock.
void forward3(int n, std::complex<double>* data) {
  auto& p = plans_for(n);
  fftw_execute_dft(p.fwd, reinterpret_cast<fftw_complex*>(data),
                   reinterpret_cast<fftw_complex*>(data));
}

void backward3(int n, std::complex<double>* data) {
  auto& p = plans_for(n);
  fftw_execute_dft(p.bwd, reinterpret_cast<fftw_complex*>(data),
                   reinterpret_cast<fftw_complex*>(data));
}

}  // namespace lrt::fft
