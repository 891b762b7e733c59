#include "wsi/result_table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace wsi {

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 10);
    if (ec != std::errc()) {
        throw std::logic_error("format_number: conversion failed");
    }
    return std::string(buf, ptr);
}

std::string ResultTable::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += columns[i];
    }
    out += '\n';
    for (const std::vector<double>& row : rows) {
        if (row.size() != columns.size()) {
            throw std::logic_error("ResultTable: ragged row");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!std::isfinite(row[i])) {
                throw std::logic_error("ResultTable: non-finite value");
            }
            if (i > 0) {
                out += ',';
            }
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace wsi
