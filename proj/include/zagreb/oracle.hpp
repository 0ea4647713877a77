#ifndef ZAGREB_ORACLE_HPP
#define ZAGREB_ORACLE_HPP

#include <string>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/rational.hpp"

namespace zagreb::oracle {

// Term-by-term transcriptions of the published formulas, deliberately not
// routed through the shared kernel, so a disagreement between the two
// separates transcription/kernel bugs from genuine claim failures.

// The degree-pair theorems at integer alpha: removed is the 0-2 sorted
// positions whose powers lead the formula, (j, k) the distinguished pair.
Rational theorem_bound(const DegreeSequence& ds, long alpha,
                       const std::vector<int>& removed, int j, int k);

// Named corollary instances by catalog id (cor_* / mm1_*).
Rational corollary_bound(const std::string& id, const DegreeSequence& ds);

}  // namespace zagreb::oracle

#endif
