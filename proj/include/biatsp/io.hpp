#pragma once

#include <filesystem>
#include <string>

#include "biatsp/dominance.hpp"
#include "biatsp/instance.hpp"
#include "biatsp/moga.hpp"
#include "biatsp/reduction.hpp"

namespace biatsp {

// Front CSV: header "d1,d2,tour", one row per entry in canonical order, the
// tour as a '-'-joined vertex sequence starting at 0 (empty when absent).
std::string front_to_csv(const Front& front);
Front front_from_csv(const std::string& text);

// Sweep CSV: case, theta values (exact decimals or fractions), sizes and the
// exclusion percentage with four decimals.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

// Instance JSON document {name, n, w1, w2}; w2 is null for single-criterion
// carriers. Diagonals are stored as written and forced back to the sentinel
// on load.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

// Run report JSON {config, instance, front, traces, wall_ms, ...}.
std::string report_to_json(const RunReport& report);

// File helpers; writes go through a temp file + rename.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

void write_front_csv(const Front& front, const std::filesystem::path& path);
Front read_front_csv(const std::filesystem::path& path);
void write_instance_json(const Instance& inst, const std::filesystem::path& path);
Instance read_instance_json(const std::filesystem::path& path);

}  // namespace biatsp
