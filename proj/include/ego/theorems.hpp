#ifndef EGO_THEOREMS_HPP
#define EGO_THEOREMS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ego {

// One reproduction check of the library's headline results about the de re
// and de dicto modalities.
struct TheoremCheck {
    std::string id;          // "theorem-1", ...
    std::string label;       // printable one-line heading
    bool pass = false;
    std::string detail;      // first failure, or a short success note
    std::int64_t millis = 0;
};

struct PaperReport {
    std::vector<TheoremCheck> checks;
    bool all_pass = false;
};

struct PaperCheckOptions {
    std::uint64_t seed = 20240814;
    // Test hook: perturbs the four-world fixture's valuation so the closure
    // check fails; exercises the FAIL reporting path.
    bool corrupt_m_dr = false;
};

// Runs, in order:
//   theorem-1: D[n]x equals R[m]@[n]x on rigid models (fixtures, then
//              1000 random models x 50 random formulas x all name pairs);
//   theorem-3: on the four-world fixture, {not,or,R[Ann]} closes at four
//              truth sets and D[Ann]p is undefinable (certificate verified);
//   theorem-4: on the two-world fixture, {not,or,D[Ann],@[Ann]} closes at
//              four truth sets and R[Ann]p is undefinable (verified);
//   theorem-5: bounded search finds an agent-specific model where D[bf]p is
//              undefinable over {not,or,@[bf],R[bf]}, with the eight
//              expected family patterns present (verified);
//   se-recovery: with the self name, D[n]x equals R[se]@[n]x on 500 random
//              agent-specific models x 20 random formulas.
PaperReport run_paper_checks(const PaperCheckOptions& options);

} // namespace ego

#endif
