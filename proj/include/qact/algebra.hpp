#pragma once

#include <set>
#include <string>
#include <vector>

#include "qact/basis.hpp"

namespace qact {

// Smallest unital associative algebra containing the generators, as a
// canonical basis: seed with the identity and the generators, then adjoin
// left and right products by generators until the rank stops growing.
Basis unital_closure(const std::vector<Mat>& gens);

// Centralizer of the span of b inside M_n: nullspace of the stacked maps
// X -> vec(XB - BX) over the basis elements B.
Basis centralizer(const Basis& b);

// Shape pattern: each cell is a linear combination of named free symbols
// with expression coefficients; `*` cells get fresh symbols in row-major
// order at parse time.
struct PatternTerm {
    std::string symbol;
    AstPtr coeff;
};

struct Pattern {
    int n = 0;
    std::vector<std::vector<std::vector<PatternTerm>>> cells;  // [row][col]
    std::vector<std::string> symbols;  // distinct, first-appearance order
};

// Cell grammar: "0", "*", or a sum of terms each containing exactly one bare
// symbol factor; identifiers in `params` are coefficient parameters, all
// other identifiers are pattern symbols.
Pattern parse_pattern(const std::vector<std::vector<std::string>>& cells,
                      const std::set<std::string>& params);

// One spanning matrix per symbol (symbol set to 1, others 0), coefficients
// evaluated at env; returns the canonical basis of the span.
Basis pattern_space(const Pattern& p, const ParamEnv& env);

}  // namespace qact
