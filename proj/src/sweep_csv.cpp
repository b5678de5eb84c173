#include "qsteer/sweep_csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "qsteer/errors.hpp"

namespace qsteer {

namespace {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void append_flags(std::string& out, const SweepRecord& r) {
    out += r.fulfilled ? "1" : "0";
    out += ',';
    out += r.entangled ? "1" : "0";
    out += ',';
    out += r.psd ? "1" : "0";
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        const size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

double parse_real(const std::string& field, const std::string& where) {
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0')
        throw ParseError(where, "expected a number, got '" + field + "'");
    return v;
}

bool parse_flag(const std::string& field, const std::string& where) {
    if (field == "0") return false;
    if (field == "1") return true;
    throw ParseError(where, "expected 0 or 1, got '" + field + "'");
}

} // namespace

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const SweepRecord& r : records) {
        out += format_real(r.param);
        out += ',';
        out += format_real(r.lhs);
        out += ',';
        out += format_real(r.rhs);
        out += ',';
        append_flags(out, r);
        out += '\n';
    }
    return out;
}

std::string sweep_csv_both(const std::vector<SweepRecord>& primary,
                           const std::vector<SweepRecord>& literal) {
    if (primary.size() != literal.size())
        throw std::invalid_argument("sweep_csv_both: grids differ in length");
    std::string out = kSweepCsvHeader;
    out += ",lhs_literal,rhs_literal,fulfilled_literal\n";
    for (size_t k = 0; k < primary.size(); ++k) {
        const SweepRecord& r = primary[k];
        const SweepRecord& l = literal[k];
        if (r.param != l.param)
            throw std::invalid_argument("sweep_csv_both: grids differ in params");
        out += format_real(r.param);
        out += ',';
        out += format_real(r.lhs);
        out += ',';
        out += format_real(r.rhs);
        out += ',';
        append_flags(out, r);
        out += ',';
        out += format_real(l.lhs);
        out += ',';
        out += format_real(l.rhs);
        out += ',';
        out += l.fulfilled ? "1" : "0";
        out += '\n';
    }
    return out;
}

std::vector<SweepRecord> parse_sweep_csv(const std::string& text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t pos = text.find('\n', start);
        if (pos == std::string::npos) pos = text.size();
        if (pos > start) lines.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    if (lines.empty()) throw ParseError("line 1", "empty CSV");

    const auto header = split(lines[0], ',');
    const auto expected = split(kSweepCsvHeader, ',');
    if (header.size() < expected.size())
        throw ParseError("line 1", "missing columns in header");
    for (size_t k = 0; k < expected.size(); ++k)
        if (header[k] != expected[k])
            throw ParseError("line 1", "unexpected header column '" + header[k] + "'");

    std::vector<SweepRecord> records;
    records.reserve(lines.size() - 1);
    for (size_t li = 1; li < lines.size(); ++li) {
        const std::string where = "line " + std::to_string(li + 1);
        const auto fields = split(lines[li], ',');
        if (fields.size() < 6) throw ParseError(where, "expected at least 6 fields");
        SweepRecord r;
        r.param = parse_real(fields[0], where);
        r.lhs = parse_real(fields[1], where);
        r.rhs = parse_real(fields[2], where);
        r.fulfilled = parse_flag(fields[3], where);
        r.entangled = parse_flag(fields[4], where);
        r.psd = parse_flag(fields[5], where);
        records.push_back(r);
    }
    return records;
}

std::string gnuplot_script(const std::string& csv_path, const std::string& title,
                           const std::string& xlabel) {
    std::string s;
    s += "# render with: gnuplot -persist <script>\n";
    s += "set datafile separator ','\n";
    s += "set title '" + title + "'\n";
    s += "set xlabel '" + xlabel + "'\n";
    s += "set ylabel 'correlation'\n";
    s += "set key left top\n";
    s += "set style data lines\n";
    s += "plot '" + csv_path + "' using 1:2 lc rgb 'gray50' lw 2 title 'max correlation', \\\n";
    s += "     '" + csv_path + "' using 1:3 lc rgb 'black' lw 2 title 'bound'\n";
    return s;
}

} // namespace qsteer
