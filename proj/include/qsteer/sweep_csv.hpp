#pragma once

#include <string>
#include <vector>

#include "qsteer/steering.hpp"

namespace qsteer {

/// Fixed sweep CSV header; reals are printed with 12 significant digits,
/// flags as 0/1, rows ascending in param, LF line endings.
inline constexpr const char* kSweepCsvHeader = "param,lhs,rhs,fulfilled,entangled,psd";

std::string sweep_csv(const std::vector<SweepRecord>& records);

/// Side-by-side emission of a second functional evaluated on the same
/// grid; appends lhs_literal, rhs_literal, fulfilled_literal columns.
std::string sweep_csv_both(const std::vector<SweepRecord>& primary,
                           const std::vector<SweepRecord>& literal);

/// Reads back the first six columns. Throws ParseError with a line
/// reference on malformed input.
std::vector<SweepRecord> parse_sweep_csv(const std::string& text);

/// gnuplot script rendering the lhs/rhs curves of a sweep CSV.
std::string gnuplot_script(const std::string& csv_path, const std::string& title,
                           const std::string& xlabel);

} // namespace qsteer
