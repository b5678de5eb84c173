#include "qsteer/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qsteer {

namespace {

using nlohmann::json;

const json& expect_array(const json& j, size_t size, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array");
    if (j.size() != size)
        throw ParseError(where, "expected " + std::to_string(size) + " elements, got " +
                                    std::to_string(j.size()));
    return j;
}

double expect_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where, "expected a number");
    return j.get<double>();
}

} // namespace

DensityMatrix parse_density_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }

    if (!j.is_object()) throw ParseError("$", "expected a JSON object");
    if (!j.contains("convention")) throw ParseError("$.convention", "missing key");
    if (!j["convention"].is_string())
        throw ParseError("$.convention", "expected \"spin\" or \"two_qubit\"");
    const std::string conv = j["convention"].get<std::string>();
    IndexConvention convention;
    if (conv == "spin")
        convention = IndexConvention::SpinProjection;
    else if (conv == "two_qubit")
        convention = IndexConvention::TwoQubit;
    else
        throw ParseError("$.convention", "unknown convention \"" + conv + "\"");

    if (!j.contains("rows")) throw ParseError("$.rows", "missing key");
    const json& rows = expect_array(j["rows"], 4, "$.rows");

    DensityMatrix rho(convention);
    for (int i = 0; i < 4; ++i) {
        const std::string row_path = "$.rows[" + std::to_string(i) + "]";
        const json& row = expect_array(rows[i], 4, row_path);
        for (int k = 0; k < 4; ++k) {
            const std::string entry_path = row_path + "[" + std::to_string(k) + "]";
            const json& entry = expect_array(row[k], 2, entry_path);
            const double re = expect_number(entry[0], entry_path + "[0]");
            const double im = expect_number(entry[1], entry_path + "[1]");
            rho.at(i, k) = Complex{re, im};
        }
    }
    return rho;
}

DensityMatrix read_density_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
    return parse_density_json(ss.str());
}

std::string density_to_json(const DensityMatrix& rho) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int k = 0; k < 4; ++k)
            row.push_back(json::array({rho.at(i, k).real(), rho.at(i, k).imag()}));
        rows.push_back(std::move(row));
    }
    json j;
    j["convention"] = rho.convention() == IndexConvention::SpinProjection ? "spin" : "two_qubit";
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

void write_density_json(const std::filesystem::path& path, const DensityMatrix& rho) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << density_to_json(rho);
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

} // namespace qsteer
