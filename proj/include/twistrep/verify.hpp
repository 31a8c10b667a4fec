#pragma once

#include "twistrep/hecke.hpp"

#include <random>
#include <string>

namespace twistrep {

struct SuiteResult {
    explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

    std::string name;
    bool ok = true;
    long checks = 0;
    std::string detail;  // first failure, empty when ok

    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
    std::string to_string() const;
};

// order of w_kappa w_kappa' acting on cocharacters
int braid_length(const KappaOrbit& a, const KappaOrbit& b);

SuiteResult quadratic_suite(const ExtBlock& blk);
SuiteResult braid_suite(const ExtBlock& blk);
// fuzzed extensions per block parameter
SuiteResult closure_suite(const ExtBlock& blk, std::mt19937_64& rng, int per_param);
SuiteResult sgn_suite(const ExtBlock& blk, std::mt19937_64& rng, int per_param);
SuiteResult z_epsilon_suite(const ExtBlock& blk, std::mt19937_64& rng, int per_param);
SuiteResult round_trip_suite(const ExtBlock& blk);
SuiteResult normal_form_suite(const ExtBlock& blk, int seeds);

}  // namespace twistrep
