#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace olo {

struct PropResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs every module's invariant/property suite on seeded random draws and
// returns one result per property.  Used by the CLI `propcheck` subcommand.
std::vector<PropResult> run_property_suites(std::uint64_t seed);

// Prints one pass/fail line per property; returns true when all passed.
bool report_property_suites(std::ostream& out, std::uint64_t seed);

}  // namespace olo
