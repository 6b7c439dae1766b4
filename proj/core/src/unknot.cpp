#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "normalcut/error.hpp"
#include "normalcut/homology.hpp"
#include "normalcut/unknot.hpp"

// A knot is trivial exactly when its complement contains an essential disk
// (a spanning disk for the knot), and such a disk exists exactly when one
// shows up among the fundamental normal surfaces.

namespace normalcut {

bool check_knot_complement(const Triangulation& tri) {
  const BoundarySurface b = boundary_surface(tri);
  if (b.component_count != 1) return false;
  if (b.component_euler[0] != 0 || !b.component_orientable[0]) return false;
  const HomologyResult h1 = homology_h1(tri, Coefficients::integers);
  return h1.free_rank == 1 && h1.torsion.empty();
}

UnknotVerdict decide_unknot(const Triangulation& tri, const UnknotOptions& opts) {
  if (!check_knot_complement(tri))
    throw std::invalid_argument(
        "decide_unknot requires a one-torus-boundary triangulation with H1 = Z");

  const MatchingSystem sys = matching_system(tri);
  // Only admissible solutions reconstruct to embedded surfaces, so the disk
  // search needs nothing else; the per-quad-pattern enumeration reaches them
  // even when the unrestricted search box is far beyond the cap.
  const std::vector<NormalVector> admissible =
      admissible_fundamentals_direct(sys, opts.limits);

  UnknotVerdict verdict;
  verdict.diagnostics.admissible_count = static_cast<std::int64_t>(admissible.size());
  try {
    const FundamentalSet fs = fundamental_solutions(sys, opts.limits);
    verdict.diagnostics.fundamental_count =
        static_cast<std::int64_t>(fs.solutions.size());
  } catch (const limit_error&) {
    // Unrestricted box over the cap: the full count stays unreported.
  }

  struct PerSurface {
    bool disk = false;
    bool essential_disk = false;
    std::optional<std::int64_t> spanning_genus;
  };
  std::vector<PerSurface> results(admissible.size());

  auto examine = [&](std::size_t i) {
    const SurfaceReport rep = reconstruct(tri, admissible[i]);
    if (!rep.connected() || rep.boundary_curves.size() != 1) return;
    const bool essential = rep.boundary_curves[0].essential;
    if (rep.euler == 1) {
      results[i].disk = true;
      results[i].essential_disk = essential;
    }
    if (essential && rep.components[0].orientable)
      results[i].spanning_genus = (1 - rep.euler) / 2;
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || admissible.size() < 2) {
    for (std::size_t i = 0; i < admissible.size(); ++i) examine(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    const int n = std::min<int>(jobs, static_cast<int>(admissible.size()));
    workers.reserve(n);
    for (int w = 0; w < n; ++w)
      workers.emplace_back([&] {
        try {
          for (std::size_t i = next.fetch_add(1); i < admissible.size();
               i = next.fetch_add(1))
            examine(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    for (std::thread& th : workers) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t i = 0; i < admissible.size(); ++i) {
    if (results[i].disk) ++verdict.diagnostics.disk_count;
    if (results[i].essential_disk) {
      ++verdict.diagnostics.essential_disk_count;
      if (!verdict.certificate) verdict.certificate = admissible[i];  // lex least
    }
    if (results[i].spanning_genus) {
      auto& best = verdict.diagnostics.min_spanning_genus_found;
      if (!best || *results[i].spanning_genus < *best)
        best = results[i].spanning_genus;
    }
  }
  verdict.unknot = verdict.certificate.has_value();
  return verdict;
}

}  // namespace normalcut
