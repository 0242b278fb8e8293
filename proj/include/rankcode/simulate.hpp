#ifndef RANKCODE_SIMULATE_HPP
#define RANKCODE_SIMULATE_HPP

#include "rankcode/gabidulin.hpp"
#include "rankcode/lifting.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace rankcode {

struct SimConfig {
    ChannelConfig chan;            // chan.seed is the master seed
    std::uint64_t trials = 0;
    bool adversarial = false;      // pick the worst of several Z draws per trial
    unsigned adversarial_candidates = 16;
    bool oracle_check = false;     // cross-check each trial against the brute-force oracle
};

struct SimReport {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
    std::uint64_t miscorrections = 0;  // decoder reported ok but returned a wrong codeword
    std::map<std::string, std::uint64_t> failure_reasons;
    std::map<std::string, std::uint64_t> errata_hist;  // "eps_mu_delta" of successful decodes
    double mean_rank_Z = 0.0;
    double mean_ops = 0.0;  // extension-field operations per decode
    std::uint64_t oracle_disagreements = 0;
    std::uint64_t seed = 0;

    double success_rate() const { return trials ? double(successes) / double(trials) : 0.0; }
};

// Trials run in parallel with per-trial seeds derived from the master seed;
// the report is identical to the serial reference for a fixed seed.
SimReport run_simulation(const GabidulinCode& code, const SimConfig& cfg);
SimReport run_simulation_serial(const GabidulinCode& code, const SimConfig& cfg);

// flat key=value lines, deterministic order
std::string format_report(const SimReport& rep);

}  // namespace rankcode

#endif
