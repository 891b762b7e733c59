#pragma once

#include <string>
#include <vector>

namespace wsi {

/// Rectangular numeric table rendered as comma-separated text with '.' as the
/// decimal separator, independent of locale and evaluation order. Emitting a
/// non-finite value is a logic error; producers clamp dB sentinels to
/// [-300, 300] before insertion.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::string to_csv() const;
};

/// Locale-free formatting with up to 10 significant digits.
std::string format_number(double value);

}  // namespace wsi
