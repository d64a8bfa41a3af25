#ifndef GAG_SIMULATION_HPP
#define GAG_SIMULATION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gag/decoder.hpp"
#include "gag/words_csv.hpp"

namespace gag {

struct SimulationConfig {
    std::size_t error_weight = 0;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct TrialRecord {
    std::size_t trial = 0;
    std::size_t lifted_weight = 0;  ///< weight of the lifted error pattern
    std::size_t error_count = 0;    ///< reported by the decoder on success
    std::string outcome;            ///< "success", "miscorrected", or a FailureReason string
};

struct SimulationReport {
    std::string label;
    std::size_t trials = 0;
    std::size_t error_weight = 0;
    std::size_t radius = 0;
    std::size_t successes = 0;
    std::map<std::string, std::size_t> failures;          ///< by reason, "miscorrected" for a wrong codeword
    std::map<std::size_t, std::size_t> lifted_histogram;  ///< lifted error weight → trials
    double mean_decode_us = 0.0;
    std::vector<TrialRecord> records;
};

/// Per-trial generator, a pure function of (seed, trial) so results do not depend on threading.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Uniform message, then `weight` distinct positions receive uniform nonzero offsets.
struct Trial {
    Word message;
    Word codeword;
    Word received;
};
Trial make_trial(const GagCode& code, std::size_t weight, std::mt19937_64& rng);

SimulationReport simulate(const Decoder& decoder, const SimulationConfig& config, std::string label);

/// Per-trial CSV (no timing, byte-identical across runs with the same seed).
std::string simulation_csv(const SimulationReport& report);
/// Human-readable summary, including timing.
std::string simulation_summary(const SimulationReport& report);

}  // namespace gag

#endif  // GAG_SIMULATION_HPP
