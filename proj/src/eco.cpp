#include "riordan/eco.hpp"

#include "riordan/errors.hpp"

namespace riordan {

LevelsResult rule_levels(const SuccessionRule& rule, int depth) {
    if (rule.axiom < 0 || rule.axiom >= rule.window)
        throw WindowOverflow("axiom label outside window", rule.axiom);
    LevelsResult res;
    std::map<int, Integer> level{{rule.axiom, Integer(1)}};
    for (int d = 0; d <= depth; ++d) {
        Integer total = 0;
        for (const auto& [label, count] : level) total += count;
        res.counts.push_back(total);
        res.labels.push_back(level);
        if (d == depth) break;
        std::map<int, Integer> next;
        for (const auto& [label, count] : level) {
            auto it = rule.productions.find(label);
            if (it == rule.productions.end()) continue;
            for (int child : it->second) {
                if (child < 0 || child >= rule.window)
                    throw WindowOverflow("produced label " + std::to_string(child) +
                                             " outside window " + std::to_string(rule.window),
                                         child);
                next[child] += count;
            }
        }
        level = std::move(next);
    }
    return res;
}

Mat rule_production(const SuccessionRule& rule) {
    Mat p(rule.window, rule.window);
    for (const auto& [label, children] : rule.productions) {
        if (label < 0 || label >= rule.window)
            throw WindowOverflow("rule label outside window", label);
        for (int child : children) {
            if (child < 0 || child >= rule.window)
                throw WindowOverflow("produced label " + std::to_string(child) +
                                         " outside window " + std::to_string(rule.window),
                                     child);
            p.at(label, child) += 1;
        }
    }
    return p;
}

Mat generate_from_production(const Mat& p, int rows) {
    std::vector<Rational> seed(static_cast<std::size_t>(p.rows()));
    seed[0] = 1;
    return generate_from_production(p, rows, seed);
}

Mat generate_from_production(const Mat& p, int rows, const std::vector<Rational>& seed) {
    if (p.rows() != p.cols()) throw ShapeError("production matrix must be square");
    if (static_cast<int>(seed.size()) != p.rows())
        throw ShapeError("seed length must match production matrix size");
    Mat out(rows, p.cols());
    std::vector<Rational> row = seed;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < p.cols(); ++j) out.at(i, j) = row[static_cast<std::size_t>(j)];
        if (i + 1 < rows) row = row_times(row, p);
    }
    return out;
}

RiordanShapeVerdict is_riordan_production(const Mat& p) {
    RiordanShapeVerdict v;
    v.nonneg = true;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j)
            if (p.at(i, j) < 0) v.nonneg = false;
    v.shape = true;
    for (int i = 0; i < p.rows() && v.shape; ++i)
        for (int j = i + 2; j < p.cols(); ++j)
            if (p.at(i, j) != 0) {
                v.shape = false;
                break;
            }
    // columns >= 1 carry the same A sequence shifted down one per column
    for (int i = 1; i < p.rows() && v.shape; ++i)
        for (int j = 2; j < p.cols(); ++j)
            if (p.at(i, j) != p.at(i - 1, j - 1)) {
                v.shape = false;
                break;
            }
    return v;
}

}  // namespace riordan
