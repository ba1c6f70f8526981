/// telemetry.hpp — CSV and plot-data emission.
#pragma once

#include <string>
#include <vector>

#include "attsim/simharness.hpp"

namespace attsim {

/// The exact CSV column header (24 columns).
extern const char* const kCsvHeader;

/// Writes one CSV file: the fixed header plus one row per record, every
/// value printed with 9 significant digits, newline-terminated, UTF-8.
/// Deterministic byte-for-byte for identical records.
/// Throws IoError (message carries the path) on any write failure.
void emit_csv(const std::vector<SimRecord>& records, const std::string& path);

/// Writes whitespace-separated data files into `directory`, one per figure
/// panel — theta.dat (t, theta), omega.dat (t, we1..we3), euler.dat
/// (t, roll, pitch, yaw), torque.dat (t, u1..u3) — plus manifest.txt listing
/// each panel with its axis labels. Throws ValidationError on an empty
/// record list (nothing is written) and IoError on write failures.
void emit_plot_data(const std::vector<SimRecord>& records,
                    const std::string& directory);

} // namespace attsim
