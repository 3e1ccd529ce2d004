#include "compchains/kernels.hpp"

#include <exception>
#include <utility>
#include <vector>

namespace compchains {

Layer layer_step_serial(const Layer& layer, const Alphabet& a, int max_width) {
  Layer next;
  for (const auto& [p, count] : layer)
    for (auto& c : admissible_letters(p, a)) {
      if (max_width >= 0 && c.result.width() > max_width) continue;
      next[std::move(c.result)] += count;
    }
  return next;
}

Layer layer_step(const Layer& layer, const Alphabet& a, int max_width) {
  std::vector<const Layer::value_type*> entries;
  entries.reserve(layer.size());
  for (const auto& e : layer) entries.push_back(&e);
  const long n = static_cast<long>(entries.size());

  Layer next;
  std::exception_ptr failure;
#pragma omp parallel
  {
    Layer local;
#pragma omp for schedule(dynamic, 16) nowait
    for (long idx = 0; idx < n; ++idx) {
      const auto& [p, count] = *entries[idx];
      try {
        for (auto& c : admissible_letters(p, a)) {
          if (max_width >= 0 && c.result.width() > max_width) continue;
          local[std::move(c.result)] += count;
        }
      } catch (...) {
#pragma omp critical(compchains_layer_error)
        if (!failure) failure = std::current_exception();
      }
    }
    // Sums commute, so the merge order does not affect the result.
#pragma omp critical(compchains_layer_merge)
    for (auto& [q, count] : local) next[q] += count;
  }
  if (failure) std::rethrow_exception(failure);
  return next;
}

}  // namespace compchains
