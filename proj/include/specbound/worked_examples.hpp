#pragma once

#include <string>
#include <vector>

#include "specbound/matrix.hpp"

namespace specbound {

/// The six 4x4 worked-example matrices behind `specbound paper-examples`,
/// embedded so the regression never depends on working-directory layout.
/// Primed variants are simultaneous row/column permutations of the unprimed
/// ones and share their spectral radius.
const NonnegMatrix& example_a1();
const NonnegMatrix& example_a1_permuted();
const NonnegMatrix& example_a2();
const NonnegMatrix& example_a2_permuted();
const NonnegMatrix& example_a3();
const NonnegMatrix& example_a3_permuted();

enum class CheckKind {
  AbsoluteValue,     // |computed - expected| <= tolerance
  RelativeIdentity,  // relative difference <= tolerance
  StrictLess,        // lhs < rhs
};

struct RegressionRow {
  CheckKind kind = CheckKind::AbsoluteValue;
  std::string label;
  double expected = 0.0;  // published value, or the right side of a strict check
  double computed = 0.0;
  double tolerance = 0.0;
  double difference = 0.0;
  bool pass = false;
  std::string note;
};

/// Evaluates the full regression table: published values at 1e-4 absolute
/// (they are rounded to four decimals), internal identities at 1e-9 relative.
std::vector<RegressionRow> worked_example_rows();

bool all_rows_pass(const std::vector<RegressionRow>& rows);

std::string render_row_table(const std::vector<RegressionRow>& rows);

}  // namespace specbound
