#include "gzk/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace gzk::fft {

namespace {

// FFTW planning is not thread-safe; execution of an existing plan on new
// arrays is. Plans are created once per shape and kept for the process.
using Key = std::tuple<int, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, int>;

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(const Key& key) {
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    const auto [kind, n0, n1, count, stride, dist, sign] = key;
    const std::size_t extent = kind == 2 ? n0 * n1 : (count - 1) * dist + (n0 - 1) * stride + 1;
    auto* scratch = fftw_alloc_complex(extent);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = nullptr;
    if (kind == 2) {
      plan = fftw_plan_dft_2d(static_cast<int>(n0), static_cast<int>(n1), scratch, scratch, sign,
                              flags);
    } else {
      const int n = static_cast<int>(n0);
      plan = fftw_plan_many_dft(1, &n, static_cast<int>(count), scratch, nullptr,
                                static_cast<int>(stride), static_cast<int>(dist), scratch, nullptr,
                                static_cast<int>(stride), static_cast<int>(dist), sign, flags);
    }
    fftw_free(scratch);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

fftw_complex* as_fftw(std::span<std::complex<double>> data) {
  return reinterpret_cast<fftw_complex*>(data.data());
}

}  // namespace

void transform_2d(std::span<std::complex<double>> data, std::size_t nx, std::size_t ny,
                  Direction dir) {
  const fftw_plan plan = cache().get({2, nx, ny, 1, 1, 1, static_cast<int>(dir)});
  fftw_execute_dft(plan, as_fftw(data), as_fftw(data));
}

void transform_lines(std::span<std::complex<double>> data, std::size_t n, std::size_t count,
                     std::size_t stride, std::size_t dist, Direction dir) {
  const fftw_plan plan = cache().get({1, n, 0, count, stride, dist, static_cast<int>(dir)});
  fftw_execute_dft(plan, as_fftw(data), as_fftw(data));
}

}  // namespace gzk::fft
