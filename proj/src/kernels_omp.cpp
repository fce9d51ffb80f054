#include <algorithm>
#include <atomic>
#include <limits>

#include "trel/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trel::kernels {

namespace {

constexpr std::uint64_t kBlock = 4096;
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::int64_t block_count(const RowSpace& space) {
  return static_cast<std::int64_t>((space.size() + kBlock - 1) / kBlock);
}

// Lowest row index for which `hit(row)` holds. Blocks beyond the best hit so
// far are skipped, so the answer matches a sequential scan.
template <class Hit>
std::optional<std::uint64_t> scan(const RowSpace& space, const Hit& hit) {
  std::atomic<std::uint64_t> best{kNone};
  const std::int64_t blocks = block_count(space);
#pragma omp parallel
  {
    std::vector<TruthValue> row(space.columns());
    std::vector<std::uint8_t> digits(space.columns());
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
      if (begin >= best.load(std::memory_order_relaxed)) continue;
      const std::uint64_t end = std::min(space.size(), begin + kBlock);
      space.decode(begin, row, digits);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (hit(row)) {
          std::uint64_t current = best.load(std::memory_order_relaxed);
          while (i < current && !best.compare_exchange_weak(current, i)) {
          }
          break;
        }
        space.advance(row, digits);
      }
    }
  }
  const std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

}  // namespace

namespace parallel {

void evaluate_rows(const Program& program, const RowSpace& space, std::span<TruthValue> out) {
  const std::int64_t blocks = block_count(space);
#pragma omp parallel
  {
    std::vector<TruthValue> row(space.columns());
    std::vector<std::uint8_t> digits(space.columns());
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) {
      const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
      const std::uint64_t end = std::min(space.size(), begin + kBlock);
      space.decode(begin, row, digits);
      for (std::uint64_t i = begin; i < end; ++i) {
        out[i] = program.run(row);
        space.advance(row, digits);
      }
    }
  }
}

std::optional<std::uint64_t> find_first_outside(const Program& program, const RowSpace& space,
                                                ValueMask accepted) {
  return scan(space, [&](std::span<const TruthValue> row) {
    return (mask_of(program.run(row)) & accepted) == 0;
  });
}

std::optional<std::uint64_t> find_first_mismatch(const Program& a, const Program& b,
                                                 const RowSpace& space) {
  return scan(space, [&](std::span<const TruthValue> row) { return a.run(row) != b.run(row); });
}

}  // namespace parallel

int worker_count() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace trel::kernels
