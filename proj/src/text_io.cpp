#include "poisprox/text_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace poisprox {

namespace {

std::runtime_error parse_error(const std::filesystem::path& path, std::size_t line,
                               const std::string& what) {
    return std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what);
}

bool parse_row(const std::string& line, std::vector<double>& out) {
    out.clear();
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            return false;
        }
        if (used != tok.size()) return false;
        out.push_back(v);
    }
    return true;
}

bool is_positive_integer(double v) {
    return v > 0.0 && v == static_cast<double>(static_cast<long long>(v));
}

}  // namespace

TextMatrix load_text_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> row_lines;
    std::string line;
    std::size_t line_no = 0;
    std::vector<double> row;
    while (std::getline(in, line)) {
        ++line_no;
        if (!parse_row(line, row))
            throw parse_error(path, line_no, "malformed numeric row '" + line + "'");
        if (row.empty()) continue;  // blank line
        rows.push_back(row);
        row_lines.push_back(line_no);
    }
    if (rows.empty()) throw parse_error(path, line_no ? line_no : 1, "no data rows");

    // "w h" header detection: two positive integers followed by h rows of w.
    std::size_t start = 0, cols = rows[0].size(), nrows = rows.size();
    if (rows[0].size() == 2 && is_positive_integer(rows[0][0]) && is_positive_integer(rows[0][1])) {
        const auto w = static_cast<std::size_t>(rows[0][0]);
        const auto h = static_cast<std::size_t>(rows[0][1]);
        bool consistent = rows.size() == h + 1;
        for (std::size_t r = 1; consistent && r < rows.size(); ++r)
            consistent = rows[r].size() == w;
        if (consistent) {
            start = 1;
            cols = w;
            nrows = h;
        }
    }

    TextMatrix m;
    m.cols = cols;
    m.rows = nrows;
    m.values.reserve(cols * nrows);
    for (std::size_t r = start; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw parse_error(path, row_lines[r],
                              "expected " + std::to_string(cols) + " entries, got " +
                                  std::to_string(rows[r].size()));
        m.values.insert(m.values.end(), rows[r].begin(), rows[r].end());
    }
    return m;
}

void save_text_matrix(const TextMatrix& m, const std::filesystem::path& path, bool as_integers) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << m.cols << " " << m.rows << "\n";
    char buf[64];
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            const double v = m.values[r * m.cols + c];
            if (as_integers)
                std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
            else
                std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << buf << (c + 1 == m.cols ? "" : " ");
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace poisprox
