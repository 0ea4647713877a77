#ifndef ZAGREB_VERIFY_HPP
#define ZAGREB_VERIFY_HPP

#include <string>
#include <vector>

#include "zagreb/enumerate.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/rational.hpp"

namespace zagreb {

enum class PropertyId {
    P1_validity,
    P2_equality_iff,
    P3_dominance,
    P4_identities,
    P5_incomparability,
    P6_amhm_chain,
    P7_table1,
};

const char* property_name(PropertyId id);
PropertyId parse_property(const std::string& name);

// A universal claim that failed and survived re-checking against the
// transcription oracle would be a genuine disproof; anything else is a bug.
struct Violation {
    std::string graph6;
    std::string bound_id;
    std::string lhs;
    std::string rhs;
    std::string context;
};

// A reproducible discrepancy between our recomputation and the printed
// claim, with the arithmetic confirmed by the independent oracle route.
struct Finding {
    std::string graph6;
    std::string bound_id;
    std::string detail;
};

struct WitnessEntry {
    std::string graph6;
    std::string detail;
};

struct VerificationReport {
    std::string property;
    CorpusSpec corpus;
    long graphs_checked = 0;
    long checks = 0;
    long skipped = 0;
    bool existential = false;
    long witnesses_required = 0;
    std::vector<Violation> violations;
    std::vector<Finding> findings;
    std::vector<WitnessEntry> witnesses;

    bool pass() const;
    void sort_entries();  // determinism: by graph6, then bound id
};

VerificationReport check_validity(const CorpusSpec& corpus);
VerificationReport check_equality_iff(const CorpusSpec& corpus);
VerificationReport check_dominance(const CorpusSpec& corpus);
VerificationReport check_identities(const CorpusSpec& corpus);
VerificationReport find_incomparability_witnesses(const CorpusSpec& corpus);
VerificationReport check_amhm_chain(const CorpusSpec& corpus);
VerificationReport reproduce_table1();

// lambda_1 >= sqrt(M_1/n) - tol on every corpus graph, with convergence
// accounting (run at full corpus scale).
VerificationReport check_spectral(const CorpusSpec& corpus, double tol = 1e-9);

VerificationReport run_property(PropertyId id, const CorpusSpec& corpus);

std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

}  // namespace zagreb

#endif
