#pragma once

#include "lsdeg/superalg.hpp"

#include <string>

namespace lsdeg {

struct ParsedAlgebra {
    std::string name;
    bool has_param = false;
    bool uses_sqrt = false;
    AlgebraT algebra;

    bool is_constant() const;
    // Throws Error when some constant depends on t.
    Algebra constant_algebra() const;
};

// Line-oriented algebra file format:
//   superalgebra <name> dim (<m>,<n>)
//   [param t] [uses_sqrt true|false]
//   [<b1>,<b2>] = <scalar> <b3> + ...
ParsedAlgebra parse_algebra(const std::string& text);
ParsedAlgebra read_algebra_file(const std::string& path);

std::string print_algebra(const Algebra& a, const std::string& name);
std::string print_algebra(const AlgebraT& a, const std::string& name, bool uses_sqrt = false);

// "2 e1 - 1/2 f2"-style text for a coordinate vector.
std::string format_combination(SuperDim d, const std::vector<GaussianRational>& v);
std::string format_combination(SuperDim d, const std::vector<RatFun>& v);

}  // namespace lsdeg
