#pragma once

#include <string>
#include <vector>

#include "alexcert/braid.hpp"
#include "alexcert/surfaces.hpp"

namespace alexcert {

enum class SweepMode { Theorem1, Methods, Skein, Ito };

struct SweepConfig {
    int max_strands = 3;
    int max_len = 6;
    int max_vertices = 6;
    int jobs = 1;
    SweepMode mode = SweepMode::Theorem1;
    bool sorted = false;
};

struct SweepFailure {
    std::string input;
    std::string property;
    std::string observed;
};

struct SweepReport {
    long cases_run = 0;
    std::vector<SweepFailure> failures;
    double wall_time = 0.0;
};

SweepMode parse_sweep_mode(const std::string& name);
std::string to_string(SweepMode mode);

// Runs the configured exhaustive check. Theorem1 certifies and verifies every
// full-support braid word and every plane tree in range; Methods compares the
// three polynomial routes; Skein checks the skein identity on adjacent-square
// words; Ito checks the summand count on generated connected sums.
SweepReport run_sweep(const SweepConfig& config);

}  // namespace alexcert
