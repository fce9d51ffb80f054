#include <algorithm>
#include <array>

#include "trel/error.hpp"
#include "trel/kernels.hpp"

namespace trel::kernels {

namespace {

std::size_t compile(const Formula& f, std::span<const Variable> columns, auto& ops) {
  switch (f.connective()) {
    case Connective::Var: {
      auto it = std::find(columns.begin(), columns.end(), f.variable());
      if (it == columns.end()) {
        throw EvaluationError("no column for variable '" + f.variable().name() + "'");
      }
      ops.push_back({Connective::Var, static_cast<std::uint32_t>(it - columns.begin())});
      return 1;
    }
    case Connective::Not: {
      const std::size_t depth = compile(f.operand(), columns, ops);
      ops.push_back({Connective::Not, 0});
      return depth;
    }
    default: {
      const std::size_t left = compile(f.lhs(), columns, ops);
      const std::size_t right = compile(f.rhs(), columns, ops);
      ops.push_back({f.connective(), 0});
      return std::max(left, right + 1);
    }
  }
}

}  // namespace

Program::Program(const Formula& f, std::span<const Variable> columns) : columns_(columns.size()) {
  ops_.reserve(f.size());
  max_stack_ = compile(f, columns, ops_);
}

TruthValue Program::run(std::span<const TruthValue> row) const noexcept {
  constexpr std::size_t kInline = 128;
  std::array<TruthValue, kInline> inline_stack{};
  std::vector<TruthValue> heap_stack;
  TruthValue* stack = inline_stack.data();
  if (max_stack_ > kInline) {
    heap_stack.resize(max_stack_);
    stack = heap_stack.data();
  }
  std::size_t top = 0;
  for (const Op& op : ops_) {
    switch (op.connective) {
      case Connective::Var:
        stack[top++] = row[op.slot];
        break;
      case Connective::Not:
        stack[top - 1] = kleene_not(stack[top - 1]);
        break;
      case Connective::And:
        --top;
        stack[top - 1] = kleene_and(stack[top - 1], stack[top]);
        break;
      case Connective::Or:
        --top;
        stack[top - 1] = kleene_or(stack[top - 1], stack[top]);
        break;
      case Connective::Implies:
        --top;
        stack[top - 1] = kleene_implies(stack[top - 1], stack[top]);
        break;
    }
  }
  return stack[0];
}

RowSpace::RowSpace(std::vector<ColumnDomain> columns) : columns_(std::move(columns)) {
  for (const ColumnDomain& c : columns_) {
    if (size_ > (std::uint64_t{1} << 62) / c.radix()) throw LimitError("row space too large");
    size_ *= c.radix();
  }
}

void RowSpace::decode(std::uint64_t index, std::span<TruthValue> row,
                      std::span<std::uint8_t> digits) const {
  for (std::size_t i = columns_.size(); i-- > 0;) {
    const std::size_t radix = columns_[i].radix();
    digits[i] = static_cast<std::uint8_t>(index % radix);
    row[i] = columns_[i].values()[digits[i]];
    index /= radix;
  }
}

bool RowSpace::advance(std::span<TruthValue> row, std::span<std::uint8_t> digits) const noexcept {
  for (std::size_t i = columns_.size(); i-- > 0;) {
    const auto values = columns_[i].values();
    if (++digits[i] < values.size()) {
      row[i] = values[digits[i]];
      return true;
    }
    digits[i] = 0;
    row[i] = values[0];
  }
  return false;
}

namespace serial {

void evaluate_rows(const Program& program, const RowSpace& space, std::span<TruthValue> out) {
  std::vector<TruthValue> row(space.columns());
  std::vector<std::uint8_t> digits(space.columns());
  space.decode(0, row, digits);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    out[i] = program.run(row);
    space.advance(row, digits);
  }
}

std::optional<std::uint64_t> find_first_outside(const Program& program, const RowSpace& space,
                                                ValueMask accepted) {
  std::vector<TruthValue> row(space.columns());
  std::vector<std::uint8_t> digits(space.columns());
  space.decode(0, row, digits);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    if ((mask_of(program.run(row)) & accepted) == 0) return i;
    space.advance(row, digits);
  }
  return std::nullopt;
}

std::optional<std::uint64_t> find_first_mismatch(const Program& a, const Program& b,
                                                 const RowSpace& space) {
  std::vector<TruthValue> row(space.columns());
  std::vector<std::uint8_t> digits(space.columns());
  space.decode(0, row, digits);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    if (a.run(row) != b.run(row)) return i;
    space.advance(row, digits);
  }
  return std::nullopt;
}

}  // namespace serial

namespace {
bool use_parallel(const RowSpace& space, Execution execution) {
  switch (execution) {
    case Execution::Serial: return false;
    case Execution::Parallel: return true;
    default: return space.size() >= kParallelThreshold && worker_count() > 1;
  }
}
}  // namespace

void evaluate_rows(const Program& program, const RowSpace& space, std::span<TruthValue> out,
                   Execution execution) {
  if (use_parallel(space, execution)) {
    parallel::evaluate_rows(program, space, out);
  } else {
    serial::evaluate_rows(program, space, out);
  }
}

std::optional<std::uint64_t> find_first_outside(const Program& program, const RowSpace& space,
                                                ValueMask accepted, Execution execution) {
  return use_parallel(space, execution) ? parallel::find_first_outside(program, space, accepted)
                                        : serial::find_first_outside(program, space, accepted);
}

std::optional<std::uint64_t> find_first_mismatch(const Program& a, const Program& b,
                                                 const RowSpace& space, Execution execution) {
  return use_parallel(space, execution) ? parallel::find_first_mismatch(a, b, space)
                                        : serial::find_first_mismatch(a, b, space);
}

}  // namespace trel::kernels
