#include <limits>

#include <omp.h>

#include "hole_search.hpp"

namespace perfect::parallel {

std::vector<Hole> find_odd_holes_omp(const Graph& g, std::size_t min_length, HoleKind kind) {
    const int n = g.order();
    std::vector<std::vector<Hole>> per_start(static_cast<std::size_t>(n));
    constexpr auto unlimited = std::numeric_limits<std::size_t>::max();

    // Low labels own far more paths than high ones (only larger labels may
    // follow the start), hence dynamic scheduling.
#pragma omp parallel if (n >= 16 && !omp_in_parallel())
    {
        detail::MinVertexHoleSearch search(g, min_length, kind);
#pragma omp for schedule(dynamic, 1)
        for (int u = 0; u < n; ++u) search.run(u, per_start[static_cast<std::size_t>(u)], unlimited);
    }

    std::size_t total = 0;
    for (const auto& part : per_start) total += part.size();
    std::vector<Hole> out;
    out.reserve(total);
    for (auto& part : per_start)
        for (auto& h : part) out.push_back(std::move(h));
    return out;
}

}  // namespace perfect::parallel
