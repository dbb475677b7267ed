#include "riordan/io.hpp"

#include <sstream>

#include "riordan/errors.hpp"
#include "riordan/exprlang.hpp"

namespace riordan {

Json series_to_json(const Series& s) {
    Json coeffs = Json::array();
    for (int k = 0; k <= s.trunc(); ++k) coeffs.push_back(rat_str(s[k]));
    return Json{{"trunc", s.trunc()}, {"parity", parity_str(s.parity())}, {"coeffs", coeffs}};
}

Series series_from_json(const Json& j) {
    int trunc = j.at("trunc").get<int>();
    Parity p = parity_from_str(j.value("parity", "none"));
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_parse(c.get<std::string>()));
    if (static_cast<int>(coeffs.size()) != trunc + 1)
        throw TruncError("series JSON: coeffs length does not match trunc+1");
    return Series(std::move(coeffs), p);
}

Json mat_to_json(const Mat& m) {
    if (m.rows() == m.cols() && m.is_lower_triangular()) {
        Json rows = Json::array();
        for (int i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (int j = 0; j <= i; ++j) row.push_back(rat_str(m.at(i, j)));
            rows.push_back(std::move(row));
        }
        return Json{{"n", m.rows()}, {"entries", rows}};
    }
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"dense", rows}};
}

Mat mat_from_json(const Json& j) {
    if (j.contains("entries")) {
        int n = j.at("n").get<int>();
        const Json& rows = j.at("entries");
        if (static_cast<int>(rows.size()) != n)
            throw ShapeError("matrix JSON: row count does not match n");
        Mat m(n, n);
        for (int i = 0; i < n; ++i) {
            const Json& row = rows[static_cast<std::size_t>(i)];
            if (static_cast<int>(row.size()) != i + 1)
                throw ShapeError("matrix JSON: row " + std::to_string(i) +
                                 " must have exactly " + std::to_string(i + 1) + " entries");
            for (int k = 0; k <= i; ++k)
                m.at(i, k) = rat_parse(row[static_cast<std::size_t>(k)].get<std::string>());
        }
        return m;
    }
    int r = j.at("rows").get<int>(), c = j.at("cols").get<int>();
    const Json& rows = j.at("dense");
    if (static_cast<int>(rows.size()) != r) throw ShapeError("matrix JSON: bad dense row count");
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != c)
            throw ShapeError("matrix JSON: bad dense column count in row " + std::to_string(i));
        for (int k = 0; k < c; ++k)
            m.at(i, k) = rat_parse(row[static_cast<std::size_t>(k)].get<std::string>());
    }
    return m;
}

std::string mat_to_csv(const Mat& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            if (j <= i || m.at(i, j) != 0) os << rat_str(m.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

DoubleAlmostSpec dar_spec_from_json(const Json& j, int trunc) {
    return DoubleAlmostSpec(eval_expr_string(j.at("b").get<std::string>(), trunc),
                            eval_expr_string(j.at("g").get<std::string>(), trunc),
                            eval_expr_string(j.at("f1").get<std::string>(), trunc),
                            eval_expr_string(j.at("f2").get<std::string>(), trunc));
}

CompressedSpec compressed_spec_from_json(const Json& j, int trunc) {
    return CompressedSpec(eval_expr_string(j.at("b").get<std::string>(), trunc),
                          eval_expr_string(j.at("g").get<std::string>(), trunc),
                          eval_expr_string(j.at("f1").get<std::string>(), trunc),
                          eval_expr_string(j.at("f2").get<std::string>(), trunc));
}

Json tp_report_to_json(const TPReport& rep) {
    Json j{{"verdict", rep.verdict == TPReport::Verdict::tp       ? "tp"
                       : rep.verdict == TPReport::Verdict::not_tp ? "not_tp"
                                                                  : "inconclusive"},
           {"n", rep.n},
           {"max_order", rep.max_order},
           {"witness", nullptr}};
    if (rep.witness) {
        j["witness"] = Json{{"rows", rep.witness->rows},
                            {"cols", rep.witness->cols},
                            {"det", rat_str(rep.witness->det)}};
    }
    return j;
}

SuccessionRule rule_from_json(const Json& j) {
    SuccessionRule rule;
    rule.axiom = j.at("axiom").get<int>();
    rule.window = j.value("window", 64);
    for (const auto& [key, value] : j.at("productions").items()) {
        int label = std::stoi(key);
        std::vector<int> children;
        for (const auto& c : value) children.push_back(c.get<int>());
        rule.productions[label] = std::move(children);
    }
    return rule;
}

}  // namespace riordan
