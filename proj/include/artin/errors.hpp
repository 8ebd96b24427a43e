#pragma once

#include <stdexcept>
#include <string>

namespace artin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (word syntax, graph files, trace dumps).
struct ParseError : Error {
  using Error::Error;
};

// A letter that does not belong to the active alphabet / order.
struct AlphabetError : Error {
  using Error::Error;
};

// An operation was called outside its contract (unreduced input,
// too many generators, membership violations, bad parameter patterns).
struct PreconditionError : Error {
  using Error::Error;
};

// The presentation does not support the requested computation
// (non-large graph for the rewriting engine, odd labels in kernel ops).
struct UnsupportedPresentationError : Error {
  using Error::Error;
};

// A search or enumeration exceeded its configured budget or cap.
// Distinct from "nothing found": the answer is unknown, not negative.
struct BudgetError : Error {
  using Error::Error;
};

// An internal cross-check failed. This always indicates a bug, never a
// mathematically possible outcome; callers should not swallow it.
struct SoundnessError : Error {
  using Error::Error;
};

}  // namespace artin
