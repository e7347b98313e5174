#pragma once

#include <optional>

#include "liegrad/freeness.hpp"

namespace liegrad::reference {

// Published values from the classification of |3|-gradings that the tool
// reproduces and error-checks. Everything here is data, independent of the
// root-enumeration machinery it is compared against.

// Highest root coefficient pattern (the nine-row table of highest roots).
Root highest_root_pattern(SimpleLieType t);

struct ExceptionalGrading {
  SimpleLieType type;
  Sigma sigma;
  DimTriple published_dims;  // (dim n_{-1}, dim n_{-2}, dim n_{-3}) as printed
};

// The 13 exceptional |3|-grading classes: e6 (4), e7 (5), e8 (2), f4 (1), g2 (1).
// Four published rows disagree with root enumeration (one root filed under the
// wrong depth; totals and dim n0 unaffected); the corrected tuples are below.
const std::vector<ExceptionalGrading>& exceptional_gradings();

// Enumeration-verified dimensions for the rows whose published values are
// misprinted: E6 {4}, E7 {1,7}, E7 {2,7}, E7 {6,7}. Empty optional otherwise.
std::optional<DimTriple> corrected_exceptional_dims(SimpleLieType t, const Sigma& sigma);

struct LeviRow {
  SimpleLieType type;
  Sigma sigma;
  int center_dim;
  std::vector<SimpleLieType> factors;  // family ascending, rank descending
};

// The exceptional reductive-part table, same 13 classes.
const std::vector<LeviRow>& exceptional_levi_rows();

// Expected reductive parts for the classical |3|-gradings: the published A_n and
// B/C/D tables reduce to subpath bookkeeping; low-rank coincidences resolved to
// the canonical labels (B1/C1/D1 -> A1, C2 -> B2, D2 -> A1+A1, D3 -> A3).
ReductiveDescription classical_levi_expected(SimpleLieType t, const Sigma& sigma);

// Appends (family, rank) to out under the canonical-label conventions above.
void append_canonical_factor(std::vector<SimpleLieType>& out, Family family, int rank);

// Published cubic constants 3(dim g - dim n0) for the exceptional classes, where
// the published value exists; two of them disagree with the computed constant
// (e7 {5}: 360 vs 300, e8 {2}: 282 vs 552).
std::optional<long long> published_cubic_constant(SimpleLieType t, const Sigma& sigma);

// A pinned discrepancy between a published value and the computed one.
struct Erratum {
  std::string location;   // content-addressed slug, e.g. "closed_form:B n=4 i=3 depth=2"
  std::string published;
  std::string computed;
  std::string note;
};

// Cell-level errata of the published classical depth-2 closed forms for this type
// (rank fixed), one record per |3|-sigma where published != corrected.
std::vector<Erratum> closed_form_errata(SimpleLieType t);

// The fixed list of non-tabular discrepancies (e7 reductive-part brace, cubic
// constants, the f4 dimension misprint, the B/C relation slips).
const std::vector<Erratum>& standing_errata();

}  // namespace liegrad::reference
