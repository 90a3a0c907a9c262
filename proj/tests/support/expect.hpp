#pragma once

#include <optional>

#include "envact/error.hpp"

namespace envact::testing {

/// Runs `fn` and returns the library error code it threw, if any.
template <class Fn>
std::optional<ErrorCode> error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  return std::nullopt;
}

}  // namespace envact::testing
