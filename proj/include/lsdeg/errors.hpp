#pragma once

#include <stdexcept>
#include <string>

namespace lsdeg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct PoleAtZero : Error {
    explicit PoleAtZero(const std::string& what = "pole at t = 0") : Error(what) {}
};

struct EvalAtPole : Error {
    explicit EvalAtPole(const std::string& what = "evaluation at a pole") : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

struct SingularBlock : Error {
    explicit SingularBlock(const std::string& what = "singular basis change block") : Error(what) {}
};

struct ExcludedParameter : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct InconsistentGraph : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg), line(line_), column(column_) {}
};

}  // namespace lsdeg
