#pragma once

#include "grinv/geometry.hpp"
#include "grinv/lemma_engine.hpp"
#include "grinv/profile.hpp"
#include "grinv/qarith.hpp"

#include <map>
#include <string>
#include <utility>

namespace grinv {

/// Which branch of the case analysis produced a prediction, with every
/// valuation it used, so a report can be audited by hand.
struct CaseTrace {
  std::string matrix_label; // "grassmann-laplacian", "skew-adjacency", ...
  std::string case_id;      // e.g. "grassmann-laplacian ell|q+1 n even (iii)"
  std::map<std::string, Int> params;
  LemmaInput lemma_input;
};

/// Selects the unique applicable case for ell != p and assembles its
/// staircase. Throws CharacteristicClash if ell is the characteristic,
/// DomainError if ell is not prime, UnclassifiedCase if no case applies
/// (a coverage bug).
CaseTrace classify_case(int n, Int q, Int ell, GraphKind graph, MatrixKind matrix);

/// ell-adic profile of the matrix for ell != p. The staircase budget must
/// equal the ell-valuation of the group order; InconsistentBudget otherwise.
std::pair<DivisorProfile, CaseTrace> predict_crosschar(int n, Int q, Int ell, GraphKind graph,
                                                       MatrixKind matrix);

} // namespace grinv
