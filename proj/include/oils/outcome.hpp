#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "oils/mat.hpp"

namespace oils {

enum class OutcomeKind { Enclosure, Unsolvable, Unbounded, Failure };

enum class FailureReason {
  None,
  SingularMatrix,
  PivotBreakdown,
  ZeroOnDiagonal,
  NoConvergence,
  EmptyIntersection,
  NoInitialEnclosure,
  NoInclusion,
  IterationLimit,
  OrthantBudgetExceeded,
};

inline const char* to_string(FailureReason r) {
  switch (r) {
    case FailureReason::None: return "none";
    case FailureReason::SingularMatrix: return "singular matrix";
    case FailureReason::PivotBreakdown: return "pivot breakdown";
    case FailureReason::ZeroOnDiagonal: return "zero on diagonal";
    case FailureReason::NoConvergence: return "no convergence";
    case FailureReason::EmptyIntersection: return "empty intersection";
    case FailureReason::NoInitialEnclosure: return "no initial enclosure";
    case FailureReason::NoInclusion: return "no inclusion";
    case FailureReason::IterationLimit: return "iteration limit";
    case FailureReason::OrthantBudgetExceeded: return "orthant budget exceeded";
  }
  return "unknown";
}

struct SolveStats {
  std::size_t iterations = 0;
  std::int64_t time_ns = 0;
  bool converged = true;  // false when an iteration cap ended the run early
};

// Tagged result of every solver: a verified box, a solvability verdict, or a
// method-specific failure.
struct SolveOutcome {
  OutcomeKind kind = OutcomeKind::Failure;
  IntervalVector box;  // meaningful for Enclosure only
  FailureReason reason = FailureReason::None;
  SolveStats stats;

  static SolveOutcome enclosure(IntervalVector b) {
    SolveOutcome o;
    o.kind = OutcomeKind::Enclosure;
    o.box = std::move(b);
    return o;
  }
  static SolveOutcome unsolvable() {
    SolveOutcome o;
    o.kind = OutcomeKind::Unsolvable;
    return o;
  }
  static SolveOutcome unbounded() {
    SolveOutcome o;
    o.kind = OutcomeKind::Unbounded;
    return o;
  }
  static SolveOutcome failure(FailureReason r) {
    SolveOutcome o;
    o.kind = OutcomeKind::Failure;
    o.reason = r;
    return o;
  }

  bool is_enclosure() const { return kind == OutcomeKind::Enclosure; }
};

inline const char* to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Enclosure: return "enclosure";
    case OutcomeKind::Unsolvable: return "unsolvable";
    case OutcomeKind::Unbounded: return "unbounded";
    case OutcomeKind::Failure: return "failure";
  }
  return "unknown";
}

}  // namespace oils
