#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

namespace poisprox {

struct TextMatrix {
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::vector<double> values;  // row-major
};

// Reads a whitespace-separated matrix. A first line of exactly two positive
// integers is taken as a "w h" header when the remaining lines agree with
// it; otherwise dimensions are inferred from the rows. Malformed input is
// rejected with the offending line number.
TextMatrix load_text_matrix(const std::filesystem::path& path);

// Writes "w h" header plus h rows of w entries; 17 significant digits.
void save_text_matrix(const TextMatrix& m, const std::filesystem::path& path,
                      bool as_integers = false);

}  // namespace poisprox
