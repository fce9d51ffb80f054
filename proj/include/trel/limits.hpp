#pragma once

#include <cstddef>
#include <string>

namespace trel {

// Caps on brute-force enumeration and tableau size. Exceeding one raises
// LimitError instead of running away.
struct Limits {
  // Variables that may range over {T, F, X} (3^n rows).
  std::size_t max_three_valued_vars = 14;
  // Variables that may range over {T, F} (2^n rows).
  std::size_t max_two_valued_vars = 20;
  std::size_t max_tableau_nodes = 1'000'000;
};

// Throws LimitError naming the cap when count > cap.
void require_within_cap(std::size_t count, std::size_t cap, const std::string& what);

}  // namespace trel
