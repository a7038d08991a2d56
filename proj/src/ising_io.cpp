#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include <json.hpp>

#include "gsim/error.hpp"
#include "gsim/ising.hpp"
#include "gsim/report.hpp"

namespace gsim {

IsingModel symmetrize(std::size_t n, std::vector<double> values, double tolerance) {
    if (values.size() != n * n) throw ParseError("matrix must be square");
    double max_abs = 1.0;
    for (double v : values) {
        if (!std::isfinite(v)) throw ParseError("matrix entries must be finite");
        max_abs = std::max(max_abs, std::abs(v));
    }
    for (std::size_t i = 0; i < n; ++i) {
        values[i * n + i] = 0.0;
        for (std::size_t k = i + 1; k < n; ++k) {
            const double a = values[i * n + k];
            const double b = values[k * n + i];
            if (std::abs(a - b) > tolerance * max_abs) {
                throw ParseError("matrix not symmetric at (" + std::to_string(i) + ", " + std::to_string(k) + ")");
            }
            const double mean = 0.5 * (a + b);
            values[i * n + k] = mean;
            values[k * n + i] = mean;
        }
    }
    return IsingModel(n, std::move(values));
}

IsingModel parse_matrix_json(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        const auto n = doc.at("n").get<std::size_t>();
        const auto& rows = doc.at("J");
        if (!rows.is_array() || rows.size() != n) throw ParseError("J must have n rows");
        std::vector<double> values;
        values.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != n) {
                throw ParseError("row " + std::to_string(i) + " must have n entries");
            }
            for (const auto& v : rows[i]) values.push_back(v.get<double>());
        }
        return symmetrize(n, std::move(values));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

IsingModel parse_matrix_csv(std::string_view text) {
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

        std::size_t count = 0;
        while (true) {
            const std::size_t comma = line.find(',');
            std::string_view field = line.substr(0, comma);
            const auto b = field.find_first_not_of(" \t");
            const auto e = field.find_last_not_of(" \t");
            field = b == std::string_view::npos ? std::string_view{} : field.substr(b, e - b + 1);
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
                throw ParseError("bad number '" + std::string(field) + "'", line_no);
            }
            values.push_back(v);
            ++count;
            if (comma == std::string_view::npos) break;
            line.remove_prefix(comma + 1);
        }
        if (rows == 0) cols = count;
        if (count != cols) throw ParseError("row has " + std::to_string(count) + " columns, expected " + std::to_string(cols), line_no);
        ++rows;
    }
    if (rows == 0) throw ParseError("empty matrix");
    if (rows != cols) {
        throw ParseError("matrix is " + std::to_string(rows) + "x" + std::to_string(cols) + ", not square");
    }
    return symmetrize(rows, std::move(values));
}

IsingModel read_matrix(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    return path.extension() == ".json" ? parse_matrix_json(text) : parse_matrix_csv(text);
}

std::string matrix_to_json(const IsingModel& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        const auto r = m.row(i);
        rows.push_back(std::vector<double>(r.begin(), r.end()));
    }
    return nlohmann::json{{"n", m.n()}, {"J", std::move(rows)}}.dump() + '\n';
}

std::string matrix_to_csv(const IsingModel& m) {
    std::string out;
    for (std::size_t i = 0; i < m.n(); ++i) {
        for (std::size_t k = 0; k < m.n(); ++k) {
            if (k) out += ',';
            out += format_double(m.at(i, k));
        }
        out += '\n';
    }
    return out;
}

}  // namespace gsim
