#pragma once

#include <stdexcept>
#include <string>

namespace trop {

// Base class for all library errors. Subclasses map to distinct CLI exit
// codes, so callers can tell "computed: negative verdict" (exit 0) apart
// from "failed to compute".
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files / tokens (floats where rationals are required, ...).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Shape mismatches: non-square determinants, index sets out of range.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// A search or enumeration exceeded its configured budget. Always explicit,
// never converted into a negative verdict.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// An operation was called outside its contract (matrix not in the required
// prevariety, inadmissible coloring, non-maximal tree, invalid plane data).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Internal consistency checks failed (e.g. reconstructed tree does not
// reproduce its matrix). Signals a bug or corrupted input, never returned
// as a regular verdict.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace trop
