#pragma once

#include "lsdeg/ratfun.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lsdeg {

// Symbol environment for scalar expressions. `t` and `i` are builtin; under sqrt_mode
// the formal variable is s with t = s^2, and sqrt(t) evaluates to s.
struct ExprEnv {
    std::map<std::string, RatFun> symbols;
    std::set<std::string> basis;
    bool sqrt_mode = false;
};

using LinComb = std::map<std::string, RatFun>;

RatFun parse_scalar(std::string_view text, const ExprEnv& env, int line = 1, int column = 1);
LinComb parse_lincomb(std::string_view text, const ExprEnv& env, int line = 1, int column = 1);

// Identifiers occurring in an expression other than t, i and function names.
std::set<std::string> expression_symbols(std::string_view text);

// Splits on top-level commas.
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

std::string trim(std::string_view s);

}  // namespace lsdeg
