#pragma once

#include "hypercone/report.hpp"

namespace hypercone {

// The full desk-scale verification suite: one row per criterion, each row's
// id naming the invariant family it exercises. `quick` trims the sample
// counts for interactive runs; the shipped thresholds stay identical.
SuiteReport run_acceptance_suite(uint64_t seed, bool quick = false);

}  // namespace hypercone
