#include "opradius/matrix_io.hpp"

#include <cmath>
#include <fstream>

namespace opradius {

CMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::runtime_error("matrix json: need object with rows, cols, entries");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw std::runtime_error("matrix json: rows/cols must be integers");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    if (rows < 1 || cols < 1) throw std::runtime_error("matrix json: dimensions must be positive");
    const auto& ent = j["entries"];
    if (!ent.is_array() || ent.size() != static_cast<std::size_t>(rows) * cols)
        throw std::runtime_error("matrix json: entries length does not match rows*cols");
    std::vector<Complex> data;
    data.reserve(ent.size());
    for (const auto& e : ent) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw std::runtime_error("matrix json: each entry must be [re, im]");
        const double re = e[0].get<double>();
        const double im = e[1].get<double>();
        if (!std::isfinite(re) || !std::isfinite(im))
            throw std::runtime_error("matrix json: non-finite entry");
        data.emplace_back(re, im);
    }
    return CMatrix(rows, cols, std::move(data));
}

Json matrix_to_json(const CMatrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json ent = Json::array();
    for (const Complex& z : m.entries()) ent.push_back(Json::array({z.real(), z.imag()}));
    j["entries"] = std::move(ent);
    return j;
}

CMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("malformed json in " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

void save_matrix(const std::string& path, const CMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matrix file: " + path);
    out << matrix_to_json(m).dump(2) << "\n";
}

} // namespace opradius
