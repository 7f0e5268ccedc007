#include "gsqg/product.hpp"

#include "gsqg/projection.hpp"

namespace gsqg {

SpectralField dealias_product(const SpectralField& f, const SpectralField& g) {
  require_same_grid(f, g, "dealias_product");
  const int m1 = padded_size(f.n1());
  const int m2 = padded_size(f.n2());
  auto a = resample(f, m1, m2).to_grid();
  const auto b = resample(g, m1, m2).to_grid();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  return resample(SpectralField::from_grid(m1, m2, a), f.n1(), f.n2());
}

}  // namespace gsqg
