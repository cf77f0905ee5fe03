#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mdl {

enum class ErrorCode {
  ParseError,
  InvalidInput,
  InvalidSpec,
  NotBipartite,
  ImproperColoring,
  Disconnected,
  DuplicateEdge,
  EulerViolation,
  InputRequired,
  NotACycle,
  NoPerfectMatching,
  SizeCapExceeded,
  NotAMatching,
  CycleDetected,
  HasseMismatch,
  MultipleSources,
  MultipleSinks,
  NotComparable,
  NotAPath,
  NotOuterplane,
  DirectedCycleInInnerDual,
  IsoFailure,
  NotALattice,
  NotGraded,
  DuplicateComplement,
  NotComplementary,
  ChainNotSaturated,
  ProductMismatch,
  InvalidRowLengths,
  NotATree,
  ColorClash,
  EmbeddingConflict,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Exhaustive algorithms refuse inputs beyond these bounds instead of truncating.
struct Caps {
  std::size_t max_vertices = 64;
  std::size_t max_inner_faces = 20;
  std::size_t max_matchings = 100000;
  std::size_t max_lattice_elements = 100000;
};

}  // namespace mdl
