#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fareyidx/asympt.hpp"

namespace fareyidx {

// 15 significant digits, no locale surprises.
std::string format_double(double v);

struct FareyRow {
    std::uint64_t a = 0, q = 1, nu = 0;
};

std::string farey_rows_to_csv(const std::vector<FareyRow>& rows);
std::string farey_rows_to_json(const std::vector<FareyRow>& rows);

struct MomentRow {
    std::uint64_t q = 0;
    int l = 1;
    std::uint32_t k = 1;
    std::uint64_t u = 1;
    std::string bspec = "none";
    std::string value;  // exact integer, decimal text
    std::uint64_t count = 0;
};

std::string moment_rows_to_csv(const std::vector<MomentRow>& rows);
std::string moment_rows_to_json(const std::vector<MomentRow>& rows);
std::vector<MomentRow> moment_rows_from_csv(const std::string& text);

std::string reports_to_csv(const std::vector<MomentReport>& reports);
std::string reports_to_json(const std::vector<MomentReport>& reports);
std::vector<MomentReport> reports_from_csv(const std::string& text);
std::vector<MomentReport> reports_from_json(const std::string& text);

// Writes to the path, or to stdout when the path is "-" or empty.
void write_output(const std::string& path, const std::string& payload);

}  // namespace fareyidx
