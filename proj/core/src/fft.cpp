#include "gsqg/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "gsqg/error.hpp"

namespace gsqg::fft {
namespace {

enum class Kind { r2c_2d, c2r_2d, c2c_fwd_1d, c2c_inv_1d };

using PlanKey = std::tuple<Kind, int, int>;

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(Kind kind, int n1, int n2) {
    std::lock_guard lock(mutex_);
    const PlanKey key{kind, n1, n2};
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    // The planner needs scratch arrays; FFTW_ESTIMATE never touches them.
    const std::size_t real_len = static_cast<std::size_t>(n1) * n2;
    const std::size_t cplx_len = static_cast<std::size_t>(n1) * (n2 / 2 + 1) + n1;
    auto* rbuf = fftw_alloc_real(real_len);
    auto* cbuf = fftw_alloc_complex(std::max(cplx_len, real_len));
    auto* cbuf2 = fftw_alloc_complex(std::max(cplx_len, real_len));
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = nullptr;
    switch (kind) {
      case Kind::r2c_2d: plan = fftw_plan_dft_r2c_2d(n1, n2, rbuf, cbuf, flags); break;
      case Kind::c2r_2d:
        plan = fftw_plan_dft_c2r_2d(n1, n2, cbuf, rbuf, flags | FFTW_DESTROY_INPUT);
        break;
      case Kind::c2c_fwd_1d: plan = fftw_plan_dft_1d(n1, cbuf, cbuf2, FFTW_FORWARD, flags); break;
      case Kind::c2c_inv_1d: plan = fftw_plan_dft_1d(n1, cbuf, cbuf2, FFTW_BACKWARD, flags); break;
    }
    fftw_free(rbuf);
    fftw_free(cbuf);
    fftw_free(cbuf2);
    if (plan == nullptr) throw Error("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

void forward_real_2d(int n1, int n2, std::span<const double> in, std::span<cplx> out) {
  const std::size_t n = static_cast<std::size_t>(n1) * n2;
  if (in.size() != n || out.size() != n) throw PreconditionError("forward_real_2d: size mismatch");
  const int h2 = n2 / 2 + 1;
  std::vector<double> src(in.begin(), in.end());
  std::vector<cplx> half(static_cast<std::size_t>(n1) * h2);
  fftw_execute_dft_r2c(cache().get(Kind::r2c_2d, n1, n2), src.data(), as_fftw(half.data()));
  for (int i1 = 0; i1 < n1; ++i1) {
    for (int i2 = 0; i2 < h2; ++i2) out[static_cast<std::size_t>(i1) * n2 + i2] = half[static_cast<std::size_t>(i1) * h2 + i2];
    const int j1 = (n1 - i1) % n1;
    for (int i2 = h2; i2 < n2; ++i2) {
      out[static_cast<std::size_t>(i1) * n2 + i2] = std::conj(half[static_cast<std::size_t>(j1) * h2 + (n2 - i2)]);
    }
  }
}

void inverse_real_2d(int n1, int n2, std::span<const cplx> in, std::span<double> out) {
  const std::size_t n = static_cast<std::size_t>(n1) * n2;
  if (in.size() != n || out.size() != n) throw PreconditionError("inverse_real_2d: size mismatch");
  const int h2 = n2 / 2 + 1;
  std::vector<cplx> half(static_cast<std::size_t>(n1) * h2);
  for (int i1 = 0; i1 < n1; ++i1)
    for (int i2 = 0; i2 < h2; ++i2) half[static_cast<std::size_t>(i1) * h2 + i2] = in[static_cast<std::size_t>(i1) * n2 + i2];
  fftw_execute_dft_c2r(cache().get(Kind::c2r_2d, n1, n2), as_fftw(half.data()), out.data());
}

void forward_1d(std::span<const cplx> in, std::span<cplx> out) {
  if (in.size() != out.size()) throw PreconditionError("forward_1d: size mismatch");
  std::vector<cplx> src(in.begin(), in.end());
  const int n = static_cast<int>(in.size());
  fftw_execute_dft(cache().get(Kind::c2c_fwd_1d, n, 1), as_fftw(src.data()), as_fftw(out.data()));
}

void inverse_1d(std::span<const cplx> in, std::span<cplx> out) {
  if (in.size() != out.size()) throw PreconditionError("inverse_1d: size mismatch");
  std::vector<cplx> src(in.begin(), in.end());
  const int n = static_cast<int>(in.size());
  fftw_execute_dft(cache().get(Kind::c2c_inv_1d, n, 1), as_fftw(src.data()), as_fftw(out.data()));
}

}  // namespace gsqg::fft
