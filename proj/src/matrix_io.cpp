#include "geninv/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace geninv {

using nlohmann::json;

ComplexMatrix parse_matrix_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("matrix file: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("matrix file: top level must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "rows" && key != "cols" && key != "data")
            throw ParseError("matrix file: unknown key \"" + key + "\"");
    }
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ParseError("matrix file: required keys are rows, cols, data");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw ParseError("matrix file: rows and cols must be nonnegative integers");

    const auto rows = j["rows"].get<std::size_t>();
    const auto cols = j["cols"].get<std::size_t>();
    if (rows == 0 || cols == 0)
        throw ParseError("matrix file: rows and cols must be at least 1");

    const json& data = j["data"];
    if (!data.is_array() || data.size() != rows)
        throw ParseError("matrix file: data must hold exactly `rows` rows");

    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (const json& row : data) {
        if (!row.is_array() || row.size() != cols)
            throw ParseError("matrix file: each row must hold exactly `cols` entries");
        for (const json& entry : row) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number())
                throw ParseError("matrix file: each entry must be [re, im]");
            const double re = entry[0].get<double>();
            const double im = entry[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw ParseError("matrix file: entries must be finite");
            entries.emplace_back(re, im);
        }
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

std::string matrix_to_json(const ComplexMatrix& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Complex& z = m(i, j);
            row.push_back({z.real(), z.imag()});
        }
        data.push_back(std::move(row));
    }
    json j{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
    return j.dump();
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix_json(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot open " + path.string() + " for writing");
    out << matrix_to_json(m) << "\n";
    if (!out)
        throw Error("write failed for " + path.string());
}

} // namespace geninv
