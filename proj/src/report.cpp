#include "fareyidx/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace fareyidx {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string farey_rows_to_csv(const std::vector<FareyRow>& rows) {
    std::string out = "a,q,nu\n";
    for (const auto& r : rows) {
        out += std::to_string(r.a);
        out += ',';
        out += std::to_string(r.q);
        out += ',';
        out += std::to_string(r.nu);
        out += '\n';
    }
    return out;
}

std::string farey_rows_to_json(const std::vector<FareyRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"a", r.a}, {"q", r.q}, {"nu", r.nu}});
    return arr.dump(2) + "\n";
}

std::string moment_rows_to_csv(const std::vector<MomentRow>& rows) {
    std::string out = "Q,l,k,u,bspec,value,count\n";
    for (const auto& r : rows) {
        out += std::to_string(r.q) + ',' + std::to_string(r.l) + ',' + std::to_string(r.k) + ',' +
               std::to_string(r.u) + ',' + r.bspec + ',' + r.value + ',' +
               std::to_string(r.count) + '\n';
    }
    return out;
}

std::string moment_rows_to_json(const std::vector<MomentRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back({{"Q", r.q},
                       {"l", r.l},
                       {"k", r.k},
                       {"u", r.u},
                       {"bspec", r.bspec},
                       {"value", r.value},
                       {"count", r.count}});
    return arr.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

std::vector<MomentRow> moment_rows_from_csv(const std::string& text) {
    std::vector<MomentRow> rows;
    std::stringstream ss(text);
    std::string line;
    bool header = true;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        const auto cells = split_csv_line(line);
        if (cells.size() != 7) throw std::invalid_argument("moment CSV: bad row: " + line);
        MomentRow r;
        r.q = std::stoull(cells[0]);
        r.l = std::stoi(cells[1]);
        r.k = static_cast<std::uint32_t>(std::stoul(cells[2]));
        r.u = std::stoull(cells[3]);
        r.bspec = cells[4];
        r.value = cells[5];
        r.count = std::stoull(cells[6]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string reports_to_csv(const std::vector<MomentReport>& reports) {
    std::string out = "q,theorem,empirical,main,raw_error,normalized_error\n";
    for (const auto& r : reports) {
        out += std::to_string(r.q) + ',' + r.theorem + ',' + format_double(r.empirical) + ',' +
               format_double(r.main) + ',' + format_double(r.raw_error) + ',' +
               format_double(r.normalized_error) + '\n';
    }
    return out;
}

std::string reports_to_json(const std::vector<MomentReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports)
        arr.push_back({{"q", r.q},
                       {"theorem", r.theorem},
                       {"empirical", r.empirical},
                       {"main", r.main},
                       {"raw_error", r.raw_error},
                       {"normalized_error", r.normalized_error}});
    return arr.dump(2) + "\n";
}

std::vector<MomentReport> reports_from_csv(const std::string& text) {
    std::vector<MomentReport> reports;
    std::stringstream ss(text);
    std::string line;
    bool header = true;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        const auto cells = split_csv_line(line);
        if (cells.size() != 6) throw std::invalid_argument("report CSV: bad row: " + line);
        MomentReport r;
        r.q = std::stoull(cells[0]);
        r.theorem = cells[1];
        r.empirical = std::stod(cells[2]);
        r.main = std::stod(cells[3]);
        r.raw_error = std::stod(cells[4]);
        r.normalized_error = std::stod(cells[5]);
        reports.push_back(std::move(r));
    }
    return reports;
}

std::vector<MomentReport> reports_from_json(const std::string& text) {
    std::vector<MomentReport> reports;
    const json arr = json::parse(text);
    for (const auto& j : arr) {
        MomentReport r;
        r.q = j.at("q").get<std::uint64_t>();
        r.theorem = j.at("theorem").get<std::string>();
        r.empirical = j.at("empirical").get<double>();
        r.main = j.at("main").get<double>();
        r.raw_error = j.at("raw_error").get<double>();
        r.normalized_error = j.at("normalized_error").get<double>();
        reports.push_back(std::move(r));
    }
    return reports;
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << payload;
}

}  // namespace fareyidx
