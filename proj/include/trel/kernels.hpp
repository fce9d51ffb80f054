#pragma once

// Row-enumeration kernels behind tables, tautology checks, determining-set
// tests and equivalence checks. Each kernel exists twice: a serial
// reference in `serial` and an OpenMP version in `parallel`. Both produce
// identical results; the parallel scans report the lowest matching row.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trel/formula.hpp"
#include "trel/truth_value.hpp"

namespace trel::kernels {

// A formula flattened to postfix over column slots.
class Program {
 public:
  // Every variable of `f` must appear in `columns`.
  Program(const Formula& f, std::span<const Variable> columns);

  TruthValue run(std::span<const TruthValue> row) const noexcept;
  std::size_t columns() const noexcept { return columns_; }

 private:
  struct Op {
    Connective connective;
    std::uint32_t slot;
  };
  std::vector<Op> ops_;
  std::size_t columns_ = 0;
  std::size_t max_stack_ = 0;
};

// Values one column ranges over.
class ColumnDomain {
 public:
  static ColumnDomain full() { return ColumnDomain({TruthValue::T, TruthValue::F, TruthValue::X}, 3); }
  static ColumnDomain definite() { return ColumnDomain({TruthValue::T, TruthValue::F}, 2); }
  static ColumnDomain pinned(TruthValue v) { return ColumnDomain({v}, 1); }

  std::span<const TruthValue> values() const noexcept { return {values_.data(), radix_}; }
  std::size_t radix() const noexcept { return radix_; }

 private:
  ColumnDomain(std::array<TruthValue, 3> values, std::size_t radix)
      : values_(values), radix_(radix) {}
  std::array<TruthValue, 3> values_;
  std::size_t radix_;
};

// Cartesian product of column domains in lexicographic order; the first
// column is the most significant digit.
class RowSpace {
 public:
  explicit RowSpace(std::vector<ColumnDomain> columns);

  std::uint64_t size() const noexcept { return size_; }
  std::size_t columns() const noexcept { return columns_.size(); }

  // Writes row `index` into `row` and its digits into `digits`.
  void decode(std::uint64_t index, std::span<TruthValue> row, std::span<std::uint8_t> digits) const;
  // Odometer step to the following row; false after the last row.
  bool advance(std::span<TruthValue> row, std::span<std::uint8_t> digits) const noexcept;

 private:
  std::vector<ColumnDomain> columns_;
  std::uint64_t size_ = 1;
};

namespace serial {
// out.size() must equal space.size().
void evaluate_rows(const Program& program, const RowSpace& space, std::span<TruthValue> out);
// First row whose value is not in `accepted`.
std::optional<std::uint64_t> find_first_outside(const Program& program, const RowSpace& space,
                                                ValueMask accepted);
// First row on which the two programs disagree.
std::optional<std::uint64_t> find_first_mismatch(const Program& a, const Program& b,
                                                 const RowSpace& space);
}  // namespace serial

namespace parallel {
void evaluate_rows(const Program& program, const RowSpace& space, std::span<TruthValue> out);
std::optional<std::uint64_t> find_first_outside(const Program& program, const RowSpace& space,
                                                ValueMask accepted);
std::optional<std::uint64_t> find_first_mismatch(const Program& a, const Program& b,
                                                 const RowSpace& space);
}  // namespace parallel

enum class Execution { Automatic, Serial, Parallel };

// Automatic picks the parallel kernel for spaces of at least this many rows.
inline constexpr std::uint64_t kParallelThreshold = 1u << 14;

void evaluate_rows(const Program& program, const RowSpace& space, std::span<TruthValue> out,
                   Execution execution = Execution::Automatic);
std::optional<std::uint64_t> find_first_outside(const Program& program, const RowSpace& space,
                                                ValueMask accepted,
                                                Execution execution = Execution::Automatic);
std::optional<std::uint64_t> find_first_mismatch(const Program& a, const Program& b,
                                                 const RowSpace& space,
                                                 Execution execution = Execution::Automatic);

// Number of worker threads the parallel kernels would use.
int worker_count() noexcept;

}  // namespace trel::kernels
