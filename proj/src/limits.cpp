#include "trel/limits.hpp"

#include "trel/error.hpp"

namespace trel {

void require_within_cap(std::size_t count, std::size_t cap, const std::string& what) {
  if (count > cap) {
    throw LimitError(what + ": " + std::to_string(count) + " variables exceeds the cap of " +
                     std::to_string(cap) + " (raise it with --max-vars or TREL_MAX_VARS)");
  }
}

}  // namespace trel
