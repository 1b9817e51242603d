// Executable catalog of the identities the engine is built around.  Every
// entry evaluates exact equalities over an exhaustive range and reports a
// structured outcome; failures always carry rendered witnesses.
#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "qtsym/symfunc.hpp"

namespace qtsym {

struct CheckReport {
  enum class Status { pass, fail, skipped };

  std::string check_id;
  std::string params;   // human-readable range descriptor
  Status status = Status::skipped;
  long instances = 0;   // equalities evaluated
  std::vector<std::string> witnesses;  // failing instances, both sides rendered
  std::chrono::milliseconds elapsed{0};
  std::string note;     // e.g. conjecture provenance remarks
};

const char* status_name(CheckReport::Status s);

/// All catalog identifiers, in catalog order.
const std::vector<std::string>& check_ids();

/// Runs one catalog entry exhaustively up to n_max (meaning is per check;
/// operator grids use their fixed index ranges with degrees capped at 4).
/// Throws std::invalid_argument for unknown ids.
CheckReport run_check(const std::string& check_id, int n_max);

/// Runs all (or the selected) checks, never aborting early.  Monomial-level
/// checks are capped at n = 5 here to bound the suite's runtime; call
/// run_check directly for larger ranges.  When both scalar conjecture checks
/// run, a synthetic "conj_scalar_equivalence" report asserting that their
/// outcomes agree is appended.  Reports are ordered by check id.
std::vector<CheckReport> run_suite(int n_max, const std::vector<std::string>& only = {});

/// Renders the difference of two symmetric functions as a witness fragment,
/// or nothing when they are equal.  The same comparator every check uses.
std::optional<std::string> diff_witness(const SymFunc& lhs, const SymFunc& rhs);
std::optional<std::string> diff_witness(const Scalar& lhs, const Scalar& rhs);

}  // namespace qtsym
