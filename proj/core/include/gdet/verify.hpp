#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdet/group_determinant.hpp"
#include "gdet/sets.hpp"

namespace gdet {

// Outcome of one bounded empirical check. `checked` counts the cases whose
// hypothesis was satisfied and whose conclusion was asserted; `vacuous`
// counts inspected cases that never reached the conclusion, so a bound too
// small to exercise a hypothesis is visible instead of silently green.
struct LemmaReport {
    std::string lemma;
    std::uint64_t checked = 0;
    std::uint64_t vacuous = 0;
    bool passed = false;
    bool inconclusive = false;  // an existence search exhausted its bound
    std::optional<std::string> counterexample;
    std::string notes;
};

struct SearchSummary {
    std::uint64_t vectors_tested = 0;
    std::uint64_t values_seen = 0;  // distinct determinant values
    std::vector<std::pair<CoeffVec16, Int>> violations;
};

enum class SearchMode { Exhaustive01, Random };

// Injection points so the checks can be turned against a deliberately
// broken implementation in tests; default-constructed means the real one.
using QuadDetFn = std::function<Int(const QuadVec&)>;
using CoeffDetFn = std::function<Int(const CoeffVec16&)>;
using ClassifyFn = std::function<Classification(const Int&)>;

// Structural identities of the order-4 determinant and the b/c/d/e
// transform: cyclic antisymmetry det(x0,x1,x2,x3) = -det(x1,x2,x3,x0),
// det parity = coefficient-sum parity, the transform's mod-2 and mod-4
// invariants, and equal parity of the four factor determinants.
// Antisymmetry runs exhaustively over [-bound, bound]^4 while that grid
// stays within ~2e6 quads, sampled beyond; transform checks are sampled.
LemmaReport check_remarks(int range_bound, unsigned threads = 0, QuadDetFn det = {});

// The two congruences mod 16 of the order-4 determinant on the
// three-even / one-even argument patterns:
//   det(2k+1, 2l,   2m,   2n)   =  8m + 1            (mod 16)
//   det(2k,   2l+1, 2m+1, 2n+1) =  8(k+l+n) - 3      (mod 16).
// Both sides are polynomial, so a full residue system mod 16 per variable
// (2 * 16^4 cases) decides the claims exactly.
LemmaReport check_lemma32();

// The 2-adic valuation case analysis of the order-4 determinant on the
// four all-even / all-odd / alternating / paired parity patterns, for
// k, l, m, n in [-bound, bound).
LemmaReport check_lemma44(int range_bound, unsigned threads = 0);

// Four prime-factor-forcing claims about the factors of the order-4
// determinant (reported ids lemma45, lemma46, lemma47, lemma410). Scans
// grow their box automatically until every claim has seen at least
// `min_nonvacuous` hypothesis-satisfying cases (a few doublings at most;
// gives up inconclusively rather than looping forever).
std::vector<LemmaReport> check_lemmas45_410(int range_bound,
                                            std::uint64_t min_nonvacuous = 100,
                                            unsigned threads = 0);

// Falsification harness: every reachable determinant value must classify
// as a member. Exhaustive01 walks all 2^16 coefficient vectors with
// entries in {0,1}; Random draws `budget` vectors with entries uniform in
// [-entry_bound, entry_bound] from SplitMix64 substreams of `seed`, so
// results are reproducible and independent of the thread count.
SearchSummary search_cross_validate(SearchMode mode, std::uint64_t budget, int entry_bound,
                                    std::uint64_t seed, unsigned threads = 0,
                                    CoeffDetFn det = {}, ClassifyFn classify = {});

// The strict inclusion chain of achievable-value sets along
//   C2^4 < C4xC2^2 < C4^2 < C8xC2 < D16 < C16:
// (i) membership at each stage implies membership at the next, over
// `sample_budget` seeded draws with |v| <= magnitude_bound; (ii) each
// adjacent gap is witnessed by some value in the larger set only
// (sampled first, then a deterministic outward sweep). A missing witness
// makes the report inconclusive, not failed.
LemmaReport check_inclusion_chain(std::uint64_t sample_budget, const Int& magnitude_bound,
                                  std::uint64_t seed);

}  // namespace gdet
