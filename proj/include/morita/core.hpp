#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morita {

// Elements of every finite structure in this library are dense indices.
using Idx = int;

// Execution policy for the exhaustive verification kernels.  The serial
// path is the reference implementation; the parallel path must produce an
// identical report (same verdicts, same least witnesses) on every input.
enum class Exec { serial, parallel };

enum class ErrorKind {
  BadTable,
  NotAssociative,
  NoInverse,
  NonUniqueInverse,
  IdempotentsDoNotCommute,
  NotASemilattice,
  NotAGroup,
  TooLarge,
  NotAnAction,
  NotAutomorphism,
  InvalidTriple,
  NoZero,
  NoIdentity,
  NotIdempotent,
  NotClosed,
  NotEnlargement,
  TNotMonoid,
  NotMonoid,
  NotFull,
  ContextNotVerified,
  OrdersDiffer,
  MiddleMismatch,
  NotDirected,
  NotInverseCategory,
  OutOfDomain,
  ScreenNotPassed,
};

std::string_view to_string(ErrorKind kind);

// Recoverable data/contract error: bad input tables, violated preconditions.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<int> witness = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

// A statement the paper proves unconditionally failed to verify.  Reaching
// this is a bug in the library, never a property of the input.
class TheoremViolation : public std::logic_error {
 public:
  TheoremViolation(std::string message, std::vector<int> witness = {})
      : std::logic_error(std::move(message)), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, std::string expected)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": expected " + expected),
        line_(line),
        col_(col),
        expected_(std::move(expected)) {}

  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  int line_;
  int col_;
  std::string expected_;
};

// One named exhaustive check.  `witness` is the least counterexample tuple
// (empty when the check passes), so reports are reproducible across runs
// and execution policies.
struct CheckResult {
  std::string id;
  bool pass = true;
  std::vector<int> witness;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckResult* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

namespace detail {

template <class F>
std::int64_t first_failure_serial(std::int64_t total, F&& ok) {
  for (std::int64_t i = 0; i < total; ++i)
    if (!ok(i)) return i;
  return -1;
}

template <class F>
std::int64_t first_failure_parallel(std::int64_t total, F&& ok) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t i = 0; i < total; ++i) {
    // `best` is the thread-local running minimum inside the loop; indices
    // past a thread's own first failure cannot improve the global minimum.
    if (i < best && !ok(i)) best = i;
  }
  return best == std::numeric_limits<std::int64_t>::max() ? -1 : best;
}

}  // namespace detail

// Least index in [0, total) where `ok` fails, or nullopt.  The parallel
// path returns the same index as the serial scan.
template <class F>
std::optional<std::int64_t> first_failure(std::int64_t total, Exec exec,
                                          F&& ok) {
  std::int64_t r = -1;
#ifdef _OPENMP
  if (exec == Exec::parallel)
    r = detail::first_failure_parallel(total, ok);
  else
    r = detail::first_failure_serial(total, ok);
#else
  (void)exec;
  r = detail::first_failure_serial(total, ok);
#endif
  if (r < 0) return std::nullopt;
  return r;
}

}  // namespace morita
