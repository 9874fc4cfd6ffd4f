#pragma once

#include <stdexcept>
#include <string>

namespace matchbounds {

enum class errc {
  not_a_matching,
  bad_vertex,
  duplicate_member,
  empty_family,
  size_too_large,
  unsupported_space,
  dimension_mismatch,
  bad_epsilon,
  bad_params,
  too_large,
  no_perfect_matching,
  odd_sum,
  odd_product,
  not_perfect,
  not_regular,
  bad_partition,
  class_not_exclusive,
  invalid_rectangle,
};

/// All library failures are reported through this exception; `code()` lets
/// callers distinguish the named error conditions without string matching.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

} // namespace matchbounds
