#pragma once

#include <cstddef>

namespace quandle::detail {

/// Runs fn(p) for p in [0, parts). With jobs > 1 the partitions are spread
/// over an OpenMP team; callers write results into per-partition slots and
/// merge them in partition order, so output never depends on `jobs`.
template <typename Fn>
void for_each_partition(std::size_t parts, int jobs, Fn&& fn) {
  const long count = static_cast<long>(parts);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs > 1 ? jobs : 1) if (jobs > 1)
  for (long p = 0; p < count; ++p) fn(static_cast<std::size_t>(p));
}

}  // namespace quandle::detail
