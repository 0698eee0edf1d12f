#include "gzk/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <map>
#include <mutex>

namespace gzk {

const GaussRule& gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) {
    gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(n);
    it->second.nodes.resize(n);
    it->second.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      gsl_integration_glfixed_point(-1.0, 1.0, i, &it->second.nodes[i], &it->second.weights[i], table);
    }
    gsl_integration_glfixed_table_free(table);
  }
  return it->second;
}

}  // namespace gzk
