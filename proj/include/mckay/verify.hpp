#pragma once

#include <string>
#include <vector>

#include "mckay/glgu.hpp"
#include "mckay/group_oracle.hpp"
#include "mckay/mckay_sym.hpp"

namespace mckay {

struct CaseResult {
    std::string key;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;

    void add(std::string key, std::string expected, std::string computed);
    void add_check(std::string key, bool ok, std::string detail = "");
    bool passed() const;
    int fail_count() const;
};

// Run fn(0..count-1) on a small work pool; results must be written to
// per-index slots so the outcome is independent of scheduling.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

SuiteReport verify_psi(int k);
SuiteReport verify_lem1(int p, int k);
SuiteReport verify_thmB(int p, int k);
SuiteReport verify_c3precise(int k);
SuiteReport verify_hooks23k(int k);
SuiteReport verify_sym_bijection(int nmax, int jobs);
SuiteReport verify_sym_constituents();
SuiteReport verify_mckay_counts(const std::vector<std::string>& kinds, long cap);
SuiteReport verify_glgu_equivariance(char epsilon, int q, int nmax);
SuiteReport verify_glgu_orbits(char epsilon, int q, int nmax);
SuiteReport verify_oracle_fields_crosscheck(long cap);
SuiteReport verify_oracle_crosscheck(const std::string& kind, long cap);
SuiteReport verify_negative_control(long cap);
SuiteReport verify_properties(unsigned seed);

} // namespace mckay
