#pragma once

#include <map>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/rational.hpp"

namespace riordan {

// Succession rule with labels abstracted to integer indices. The label
// window bounds how many distinct labels are materialized; producing a
// label at or beyond the window raises WindowOverflow with that label.
// A label with no production entry produces nothing (a leaf).
struct SuccessionRule {
    int axiom = 0;
    std::map<int, std::vector<int>> productions;
    int window = 64;
};

struct LevelsResult {
    std::vector<Integer> counts;                  // nodes per level
    std::vector<std::map<int, Integer>> labels;   // label multiset per level
};

// Breadth-first expansion of the generating tree to the given depth
// (inclusive), tracked as label multiplicities.
LevelsResult rule_levels(const SuccessionRule& rule, int depth);

// P[i][j] = multiplicity of label j among the productions of label i,
// over the full label window.
Mat rule_production(const SuccessionRule& rule);

// ECO matrix rows: row 0 is the seed (default e_0), row k+1 = row k * P.
// The caller supplies a P large enough that truncation edge effects stay
// outside the rows of interest.
Mat generate_from_production(const Mat& p, int rows);
Mat generate_from_production(const Mat& p, int rows, const std::vector<Rational>& seed);

// Checks the (Z | shifted-Toeplitz A) shape that characterizes Riordan
// production matrices; nonnegativity is reported separately.
struct RiordanShapeVerdict {
    bool shape = false;
    bool nonneg = false;
};

RiordanShapeVerdict is_riordan_production(const Mat& p);

}  // namespace riordan
