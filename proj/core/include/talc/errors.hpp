#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace talc {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A weight evaluated negative at a cell visited by an array build.
struct negative_weight_error : error {
    negative_weight_error(long row, long col)
        : error("negative weight at cell (n=" + std::to_string(row) +
                ", k=" + std::to_string(col) + ")"),
          n(row), k(col) {}
    long n, k;
};

struct unknown_name_error : error {
    explicit unknown_name_error(const std::string& name)
        : error("unknown catalog name: " + name) {}
};

struct row_not_built_error : error {
    explicit row_not_built_error(long n)
        : error("row " + std::to_string(n) + " not built") {}
};

struct unreachable_error : error {
    using error::error;
};

struct bad_endpoints_error : error {
    using error::error;
};

struct invalid_split_error : error {
    using error::error;
};

struct too_large_error : error {
    using error::error;
};

struct zero_polynomial_error : error {
    zero_polynomial_error() : error("zero polynomial") {}
};

struct parse_error : error {
    parse_error(std::size_t lineno, const std::string& what)
        : error("parse error at line " + std::to_string(lineno) + ": " + what),
          line(lineno) {}
    std::size_t line;
};

struct fetch_error : error {
    using error::error;
};

}  // namespace talc
