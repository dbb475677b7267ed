// Command-line front end: construction, group algebra, sequence
// extraction, compression, generating-tree simulation, total-positivity
// checks, and a selftest that replays the full worked-example suite.
//
// Exit codes: 0 success, 2 usage error, 3 computation error (order,
// parity, shape, truncation), 4 verification failure (a structural
// identity that must hold did not).
#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "riordan/compress.hpp"
#include "riordan/double_riordan.hpp"
#include "riordan/eco.hpp"
#include "riordan/errors.hpp"
#include "riordan/exprlang.hpp"
#include "riordan/io.hpp"
#include "riordan/riordan.hpp"
#include "riordan/selftest.hpp"
#include "riordan/tp.hpp"

using namespace riordan;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// family x flag-set describing one array spec on the command line
struct SpecFlags {
    std::string b, d, g, f, f1, f2;
};

Series eval_flag(const std::string& expr, int trunc, const char* flag) {
    if (expr.empty()) throw UsageError(std::string("missing required flag --") + flag);
    return eval_expr_string(expr, trunc);
}

void print_series(const std::string& label, const Series& s, int upto) {
    std::cout << label;
    for (int k = 0; k <= std::min(upto, s.trunc()); ++k) {
        if (k) std::cout << ", ";
        std::cout << rat_str(s[k]);
    }
    std::cout << "\n";
}

void emit_matrix(const Mat& m, bool json, bool csv) {
    if (json)
        std::cout << mat_to_json(m).dump(2) << "\n";
    else if (csv)
        std::cout << mat_to_csv(m);
    else
        std::cout << m.str();
}

Mat build_family(const std::string& family, const SpecFlags& fl, int rows) {
    int trunc = rows + 1;
    if (family == "riordan")
        return build_riordan(RiordanSpec(eval_flag(fl.g, trunc, "g"), eval_flag(fl.f, trunc, "f")),
                             rows);
    if (family == "quasi")
        return build_quasi(QuasiSpec(eval_flag(fl.g, trunc, "g"), eval_flag(fl.f, trunc, "f")),
                           rows);
    if (family == "almost")
        return build_almost(AlmostSpec(eval_flag(fl.d, trunc, "d"), eval_flag(fl.g, trunc, "g"),
                                       eval_flag(fl.f, trunc, "f")),
                            rows);
    if (family == "double")
        return build_double(DoubleSpec(eval_flag(fl.g, trunc, "g"), eval_flag(fl.f1, trunc, "f1"),
                                       eval_flag(fl.f2, trunc, "f2")),
                            rows);
    if (family == "dar")
        return build_dar(DoubleAlmostSpec(eval_flag(fl.b, trunc, "b"), eval_flag(fl.g, trunc, "g"),
                                          eval_flag(fl.f1, trunc, "f1"),
                                          eval_flag(fl.f2, trunc, "f2")),
                         rows);
    if (family == "compressed")
        return build_compressed(
            CompressedSpec(eval_flag(fl.b, trunc, "b"), eval_flag(fl.g, trunc, "g"),
                           eval_flag(fl.f1, trunc, "f1"), eval_flag(fl.f2, trunc, "f2")),
            rows);
    throw UsageError("unknown family: " + family);
}

// --key value pairs after the bare "--" separator of `mul`
SpecFlags parse_second_group(const std::vector<std::string>& args) {
    SpecFlags fl;
    std::map<std::string, std::string*> slots{{"--b", &fl.b},   {"--d", &fl.d}, {"--g", &fl.g},
                                              {"--f", &fl.f},   {"--f1", &fl.f1},
                                              {"--f2", &fl.f2}};
    for (std::size_t i = 0; i < args.size(); i += 2) {
        auto it = slots.find(args[i]);
        if (it == slots.end()) throw UsageError("unknown flag in second spec group: " + args[i]);
        if (i + 1 >= args.size()) throw UsageError("flag needs a value: " + args[i]);
        *it->second = args[i + 1];
    }
    return fl;
}

void print_dar_spec(const DoubleAlmostSpec& s, int upto, bool json) {
    if (json) {
        Json j{{"b", series_to_json(s.b.restricted(std::min(upto, s.b.trunc())))},
               {"g", series_to_json(s.g.restricted(std::min(upto, s.g.trunc())))},
               {"f1", series_to_json(s.f1.restricted(std::min(upto, s.f1.trunc())))},
               {"f2", series_to_json(s.f2.restricted(std::min(upto, s.f2.trunc())))}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    print_series("b:  ", s.b, upto);
    print_series("g:  ", s.g, upto);
    print_series("f1: ", s.f1, upto);
    print_series("f2: ", s.f2, upto);
}

int run(int argc, char** argv) {
    // `mul` takes two flag groups separated by a bare "--"
    std::vector<std::string> raw(argv + 1, argv + argc);
    std::vector<std::string> second_group;
    if (!raw.empty() && (raw[0] == "mul")) {
        auto sep = std::find(raw.begin(), raw.end(), "--");
        if (sep != raw.end()) {
            second_group.assign(sep + 1, raw.end());
            raw.erase(sep, raw.end());
        }
    }

    CLI::App app{"exact arithmetic for Riordan, quasi-, almost-, double and double"
                 " almost-Riordan arrays"};
    app.require_subcommand(1);

    // ---- expand ----
    auto* cmd_expand = app.add_subcommand("expand", "expand an expression as a series");
    std::string ex_expr;
    int ex_trunc = 10;
    bool ex_json = false;
    cmd_expand->add_option("--expr", ex_expr, "generating-function expression")->required();
    cmd_expand->add_option("--trunc", ex_trunc, "truncation degree")->required();
    cmd_expand->add_flag("--json", ex_json);
    cmd_expand->callback([&] {
        Series s = eval_expr_string(ex_expr, ex_trunc);
        if (ex_json)
            std::cout << series_to_json(s).dump(2) << "\n";
        else
            std::cout << s.str() << "\n";
    });

    // ---- build ----
    auto* cmd_build = app.add_subcommand("build", "build an array truncation");
    std::string bd_family;
    SpecFlags bd_flags;
    int bd_rows = 8;
    bool bd_json = false, bd_csv = false;
    cmd_build->add_option("family", bd_family, "riordan|quasi|almost|double|dar|compressed")
        ->required();
    cmd_build->add_option("--b", bd_flags.b);
    cmd_build->add_option("--d", bd_flags.d);
    cmd_build->add_option("--g", bd_flags.g);
    cmd_build->add_option("--f", bd_flags.f);
    cmd_build->add_option("--f1", bd_flags.f1);
    cmd_build->add_option("--f2", bd_flags.f2);
    cmd_build->add_option("--rows", bd_rows)->required();
    cmd_build->add_flag("--json", bd_json);
    cmd_build->add_flag("--csv", bd_csv);
    cmd_build->callback([&] { emit_matrix(build_family(bd_family, bd_flags, bd_rows), bd_json, bd_csv); });

    // ---- mul ----
    auto* cmd_mul = app.add_subcommand(
        "mul", "multiply two arrays of one family (second spec after a bare --)");
    std::string mu_family;
    SpecFlags mu_flags;
    int mu_trunc = 16;
    bool mu_json = false;
    cmd_mul->add_option("family", mu_family, "dar (spec groups separated by --)")->required();
    cmd_mul->add_option("--b", mu_flags.b);
    cmd_mul->add_option("--d", mu_flags.d);
    cmd_mul->add_option("--g", mu_flags.g);
    cmd_mul->add_option("--f", mu_flags.f);
    cmd_mul->add_option("--f1", mu_flags.f1);
    cmd_mul->add_option("--f2", mu_flags.f2);
    cmd_mul->add_option("--trunc", mu_trunc);
    cmd_mul->add_flag("--json", mu_json);
    cmd_mul->callback([&] {
        int work = 2 * mu_trunc + 8;
        SpecFlags snd = parse_second_group(second_group);
        if (mu_family == "dar") {
            DoubleAlmostSpec a(eval_flag(mu_flags.b, work, "b"), eval_flag(mu_flags.g, work, "g"),
                               eval_flag(mu_flags.f1, work, "f1"),
                               eval_flag(mu_flags.f2, work, "f2"));
            DoubleAlmostSpec b(eval_flag(snd.b, work, "b"), eval_flag(snd.g, work, "g"),
                               eval_flag(snd.f1, work, "f1"), eval_flag(snd.f2, work, "f2"));
            print_dar_spec(dar_mul(a, b), mu_trunc, mu_json);
        } else if (mu_family == "riordan") {
            RiordanSpec a(eval_flag(mu_flags.g, work, "g"), eval_flag(mu_flags.f, work, "f"));
            RiordanSpec b(eval_flag(snd.g, work, "g"), eval_flag(snd.f, work, "f"));
            RiordanSpec p = riordan_mul(a, b);
            print_series("g: ", p.g, mu_trunc);
            print_series("f: ", p.f, mu_trunc);
        } else if (mu_family == "quasi") {
            QuasiSpec a(eval_flag(mu_flags.g, work, "g"), eval_flag(mu_flags.f, work, "f"));
            QuasiSpec b(eval_flag(snd.g, work, "g"), eval_flag(snd.f, work, "f"));
            QuasiSpec p = quasi_mul(a, b);
            print_series("g: ", p.g, mu_trunc);
            print_series("f: ", p.f, mu_trunc);
        } else if (mu_family == "almost") {
            AlmostSpec a(eval_flag(mu_flags.d, work, "d"), eval_flag(mu_flags.g, work, "g"),
                         eval_flag(mu_flags.f, work, "f"));
            AlmostSpec b(eval_flag(snd.d, work, "d"), eval_flag(snd.g, work, "g"),
                         eval_flag(snd.f, work, "f"));
            AlmostSpec p = almost_mul(a, b);
            print_series("d: ", p.d, mu_trunc);
            print_series("g: ", p.g, mu_trunc);
            print_series("f: ", p.f, mu_trunc);
        } else if (mu_family == "double") {
            DoubleSpec a(eval_flag(mu_flags.g, work, "g"), eval_flag(mu_flags.f1, work, "f1"),
                         eval_flag(mu_flags.f2, work, "f2"));
            DoubleSpec b(eval_flag(snd.g, work, "g"), eval_flag(snd.f1, work, "f1"),
                         eval_flag(snd.f2, work, "f2"));
            DoubleSpec p = double_mul(a, b);
            print_series("g:  ", p.g, mu_trunc);
            print_series("f1: ", p.f1, mu_trunc);
            print_series("f2: ", p.f2, mu_trunc);
        } else {
            throw UsageError("mul supports families: riordan, quasi, almost, double, dar");
        }
    });

    // ---- inverse ----
    auto* cmd_inv = app.add_subcommand("inverse", "group inverse of an array");
    std::string in_family;
    SpecFlags in_flags;
    int in_trunc = 16;
    bool in_json = false;
    cmd_inv->add_option("family", in_family, "riordan|quasi|almost|double|dar")->required();
    cmd_inv->add_option("--b", in_flags.b);
    cmd_inv->add_option("--d", in_flags.d);
    cmd_inv->add_option("--g", in_flags.g);
    cmd_inv->add_option("--f", in_flags.f);
    cmd_inv->add_option("--f1", in_flags.f1);
    cmd_inv->add_option("--f2", in_flags.f2);
    cmd_inv->add_option("--trunc", in_trunc);
    cmd_inv->add_flag("--json", in_json);
    cmd_inv->callback([&] {
        int work = 2 * in_trunc + 8;
        if (in_family == "dar") {
            DoubleAlmostSpec a(eval_flag(in_flags.b, work, "b"), eval_flag(in_flags.g, work, "g"),
                               eval_flag(in_flags.f1, work, "f1"),
                               eval_flag(in_flags.f2, work, "f2"));
            print_dar_spec(dar_inverse(a), in_trunc, in_json);
        } else if (in_family == "riordan") {
            RiordanSpec a(eval_flag(in_flags.g, work, "g"), eval_flag(in_flags.f, work, "f"));
            RiordanSpec p = riordan_inverse(a);
            print_series("g: ", p.g, in_trunc);
            print_series("f: ", p.f, in_trunc);
        } else if (in_family == "quasi") {
            QuasiSpec a(eval_flag(in_flags.g, work, "g"), eval_flag(in_flags.f, work, "f"));
            QuasiSpec p = quasi_inverse(a);
            print_series("g: ", p.g, in_trunc);
            print_series("f: ", p.f, in_trunc);
        } else if (in_family == "almost") {
            AlmostSpec a(eval_flag(in_flags.d, work, "d"), eval_flag(in_flags.g, work, "g"),
                         eval_flag(in_flags.f, work, "f"));
            AlmostSpec p = almost_inverse(a);
            print_series("d: ", p.d, in_trunc);
            print_series("g: ", p.g, in_trunc);
            print_series("f: ", p.f, in_trunc);
        } else if (in_family == "double") {
            DoubleSpec a(eval_flag(in_flags.g, work, "g"), eval_flag(in_flags.f1, work, "f1"),
                         eval_flag(in_flags.f2, work, "f2"));
            DoubleSpec p = double_inverse(a);
            print_series("g:  ", p.g, in_trunc);
            print_series("f1: ", p.f1, in_trunc);
            print_series("f2: ", p.f2, in_trunc);
        } else {
            throw UsageError("unknown family: " + in_family);
        }
    });

    // ---- seqchar ----
    auto* cmd_seq = app.add_subcommand("seqchar", "extract the characterizing sequences");
    std::string sq_family;
    SpecFlags sq_flags;
    int sq_trunc = 10;
    bool sq_oracle = false, sq_json = false;
    cmd_seq->add_option("family", sq_family, "dar")->required();
    cmd_seq->add_option("--b", sq_flags.b)->required();
    cmd_seq->add_option("--g", sq_flags.g)->required();
    cmd_seq->add_option("--f1", sq_flags.f1)->required();
    cmd_seq->add_option("--f2", sq_flags.f2)->required();
    cmd_seq->add_option("--trunc", sq_trunc);
    cmd_seq->add_flag("--oracle", sq_oracle, "also solve from the built matrix and diff");
    cmd_seq->add_flag("--json", sq_json);
    cmd_seq->callback([&] {
        if (sq_family != "dar") throw UsageError("seqchar supports family: dar");
        int work = 2 * sq_trunc + 10;
        DoubleAlmostSpec spec(eval_flag(sq_flags.b, work, "b"), eval_flag(sq_flags.g, work, "g"),
                              eval_flag(sq_flags.f1, work, "f1"),
                              eval_flag(sq_flags.f2, work, "f2"));
        DarSeqChar sc = dar_seqchar(spec);
        if (sq_json) {
            Json j{{"A", series_to_json(sc.A.restricted(std::min(sq_trunc, sc.A.trunc())))},
                   {"Z1", series_to_json(sc.Z1.restricted(std::min(sq_trunc, sc.Z1.trunc())))},
                   {"Z2", series_to_json(sc.Z2.restricted(std::min(sq_trunc, sc.Z2.trunc())))},
                   {"W", series_to_json(sc.W.restricted(std::min(sq_trunc, sc.W.trunc())))}};
            std::cout << j.dump(2) << "\n";
        } else {
            print_series("A:  ", sc.A, sq_trunc);
            print_series("Z1: ", sc.Z1, sq_trunc);
            print_series("Z2: ", sc.Z2, sq_trunc);
            print_series("W:  ", sc.W, sq_trunc);
        }
        if (sq_oracle) {
            int n = sq_trunc + 6;
            DoubleAlmostSpec narrow(eval_flag(sq_flags.b, n, "b"), eval_flag(sq_flags.g, n, "g"),
                                    eval_flag(sq_flags.f1, n, "f1"),
                                    eval_flag(sq_flags.f2, n, "f2"));
            DarSeqChar oracle = dar_seqchar_oracle(build_dar(narrow, n + 1));
            const char* names[] = {"A", "Z1", "Z2", "W"};
            const Series* closed[] = {&sc.A, &sc.Z1, &sc.Z2, &sc.W};
            const Series* solved[] = {&oracle.A, &oracle.Z1, &oracle.Z2, &oracle.W};
            for (int i = 0; i < 4; ++i) {
                int upto = std::min(closed[i]->trunc(), solved[i]->trunc());
                if (!prefix_eq(*closed[i], *solved[i], upto))
                    throw VerificationFailure(std::string("closed form and matrix solve differ"
                                                          " for ") +
                                              names[i]);
                print_series(std::string(names[i]) + " (matrix solve): ", *solved[i],
                             std::min(upto, sq_trunc));
            }
            std::cout << "closed form == matrix solve on the certified prefix\n";
        }
    });

    // ---- prodmat ----
    auto* cmd_prod = app.add_subcommand("prodmat", "production matrix plus its defining identity");
    std::string pr_family;
    SpecFlags pr_flags;
    int pr_rows = 10;
    bool pr_json = false;
    cmd_prod->add_option("family", pr_family, "dar|riordan")->required();
    cmd_prod->add_option("--b", pr_flags.b);
    cmd_prod->add_option("--g", pr_flags.g);
    cmd_prod->add_option("--f", pr_flags.f);
    cmd_prod->add_option("--f1", pr_flags.f1);
    cmd_prod->add_option("--f2", pr_flags.f2);
    cmd_prod->add_option("--rows", pr_rows)->required();
    cmd_prod->add_flag("--json", pr_json);
    cmd_prod->callback([&] {
        if (pr_family == "dar") {
            int work = 4 * pr_rows + 12;
            DoubleAlmostSpec spec(eval_flag(pr_flags.b, work, "b"),
                                  eval_flag(pr_flags.g, work, "g"),
                                  eval_flag(pr_flags.f1, work, "f1"),
                                  eval_flag(pr_flags.f2, work, "f2"));
            Mat p = dar_production(spec, pr_rows);
            Mat d = build_dar(
                DoubleAlmostSpec(spec.b.restricted(pr_rows), spec.g.restricted(pr_rows),
                                 spec.f1.restricted(pr_rows), spec.f2.restricted(pr_rows)),
                pr_rows);
            emit_matrix(p, pr_json, false);
            if (!production_shift_holds(d, p, 2))
                throw VerificationFailure("(D*P)[i][j] == D[i+2][j] failed");
            std::cerr << "two-row shift identity verified on " << pr_rows << " rows\n";
        } else if (pr_family == "riordan") {
            int work = 2 * pr_rows + 8;
            RiordanSpec spec(eval_flag(pr_flags.g, work, "g"), eval_flag(pr_flags.f, work, "f"));
            Mat p = riordan_production(spec, pr_rows);
            Mat d = build_riordan(spec, pr_rows);
            emit_matrix(p, pr_json, false);
            if (!production_shift_holds(d, p, 1))
                throw VerificationFailure("(D*P)[i][j] == D[i+1][j] failed");
            Mat regen = generate_from_production(p, pr_rows);
            if (!(regen.topleft(pr_rows, pr_rows) == d))
                throw VerificationFailure("production matrix does not regenerate the array");
            std::cerr << "shift identity and regeneration verified on " << pr_rows << " rows\n";
        } else {
            throw UsageError("prodmat supports families: dar, riordan");
        }
    });

    // ---- compress ----
    auto* cmd_comp = app.add_subcommand("compress", "compression of a double almost-Riordan array");
    SpecFlags cp_flags;
    int cp_rows = 8;
    bool cp_json = false, cp_csv = false, cp_from_dar = false;
    cmd_comp->add_flag("--from-dar", cp_from_dar, "interpret the flags as an uncompressed spec");
    cmd_comp->add_option("--b", cp_flags.b)->required();
    cmd_comp->add_option("--g", cp_flags.g)->required();
    cmd_comp->add_option("--f1", cp_flags.f1)->required();
    cmd_comp->add_option("--f2", cp_flags.f2)->required();
    cmd_comp->add_option("--rows", cp_rows)->required();
    cmd_comp->add_flag("--json", cp_json);
    cmd_comp->add_flag("--csv", cp_csv);
    cmd_comp->callback([&] {
        if (!cp_from_dar) throw UsageError("compress currently requires --from-dar");
        int work = 2 * cp_rows + 2;
        DoubleAlmostSpec spec(eval_flag(cp_flags.b, work, "b"), eval_flag(cp_flags.g, work, "g"),
                              eval_flag(cp_flags.f1, work, "f1"),
                              eval_flag(cp_flags.f2, work, "f2"));
        Mat m = compress_matrix(build_dar(spec, 2 * cp_rows));
        emit_matrix(m.topleft(cp_rows, cp_rows), cp_json, cp_csv);
    });

    // ---- eco ----
    auto* cmd_eco = app.add_subcommand("eco", "succession-rule expansion and ECO matrices");
    std::string eco_rule_path;
    int eco_levels = -1, eco_generate = -1;
    bool eco_production = false, eco_json = false;
    cmd_eco->add_option("--rule", eco_rule_path, "rule JSON file")->required();
    cmd_eco->add_option("--levels", eco_levels, "expand the generating tree to this depth");
    cmd_eco->add_flag("--production", eco_production, "print the rule's production matrix");
    cmd_eco->add_option("--generate", eco_generate, "generate this many ECO matrix rows");
    cmd_eco->add_flag("--json", eco_json);
    cmd_eco->callback([&] {
        std::ifstream in(eco_rule_path);
        if (!in) throw UsageError("cannot open rule file: " + eco_rule_path);
        Json j = Json::parse(in);
        SuccessionRule rule = rule_from_json(j);
        if (eco_levels >= 0) {
            LevelsResult lv = rule_levels(rule, eco_levels);
            if (eco_json) {
                Json out = Json::array();
                for (const auto& c : lv.counts) out.push_back(c.get_str());
                std::cout << Json{{"counts", out}}.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < lv.counts.size(); ++i) {
                    if (i) std::cout << ", ";
                    std::cout << lv.counts[i].get_str();
                }
                std::cout << "\n";
            }
        }
        if (eco_production) emit_matrix(rule_production(rule), eco_json, false);
        if (eco_generate > 0)
            emit_matrix(generate_from_production(rule_production(rule), eco_generate), eco_json,
                        false);
    });

    // ---- tp ----
    auto* cmd_tp = app.add_subcommand("tp", "total positivity checks and constructions");
    cmd_tp->require_subcommand(1);

    auto* tp_check = cmd_tp->add_subcommand("check", "minor enumeration over a matrix file");
    std::string tc_matrix;
    int tc_order = 3;
    bool tc_json = false;
    tp_check->add_option("--matrix", tc_matrix, "matrix JSON file, or - for stdin")->required();
    tp_check->add_option("--max-order", tc_order)->required();
    tp_check->add_flag("--json", tc_json);
    tp_check->callback([&] {
        Json j;
        if (tc_matrix == "-") {
            j = Json::parse(std::cin);
        } else {
            std::ifstream in(tc_matrix);
            if (!in) throw UsageError("cannot open matrix file: " + tc_matrix);
            j = Json::parse(in);
        }
        TPReport rep = is_tp(mat_from_json(j), tc_order);
        if (tc_json)
            std::cout << tp_report_to_json(rep).dump(2) << "\n";
        else {
            std::cout << (rep.verdict == TPReport::Verdict::tp ? "tp" : "not_tp") << " (n="
                      << rep.n << ", max order " << rep.max_order << ")\n";
            if (rep.witness) {
                std::cout << "negative minor: rows {";
                for (std::size_t i = 0; i < rep.witness->rows.size(); ++i)
                    std::cout << (i ? "," : "") << rep.witness->rows[i];
                std::cout << "} cols {";
                for (std::size_t i = 0; i < rep.witness->cols.size(); ++i)
                    std::cout << (i ? "," : "") << rep.witness->cols[i];
                std::cout << "} det " << rat_str(rep.witness->det) << "\n";
            }
        }
    });

    auto* tp_pf = cmd_tp->add_subcommand("pf", "Toeplitz total positivity of a sequence");
    std::string pf_seq;
    int pf_n = 6, pf_order = 3;
    bool pf_json = false;
    tp_pf->add_option("--seq", pf_seq, "comma-separated rationals")->required();
    tp_pf->add_option("--n", pf_n)->required();
    tp_pf->add_option("--max-order", pf_order)->required();
    tp_pf->add_flag("--json", pf_json);
    tp_pf->callback([&] {
        TPReport rep = is_pf(rat_parse_list(pf_seq), pf_n, pf_order);
        if (pf_json)
            std::cout << tp_report_to_json(rep).dump(2) << "\n";
        else
            std::cout << (rep.verdict == TPReport::Verdict::tp ? "pf" : "not_pf") << "\n";
    });

    auto* tp_build = cmd_tp->add_subcommand("build", "TP-preserving bordered constructions");
    std::string tb_kind, tb_b0 = "1", tb_b1 = "0", tb_alpha = "1";
    SpecFlags tb_flags;
    int tb_rows = 8, tb_order = 3;
    bool tb_json = false, tb_csv = false;
    tp_build->add_option("kind", tb_kind, "linear-b|tg-alpha")->required();
    tp_build->add_option("--b0", tb_b0);
    tp_build->add_option("--b1", tb_b1);
    tp_build->add_option("--alpha", tb_alpha);
    tp_build->add_option("--g", tb_flags.g)->required();
    tp_build->add_option("--f1", tb_flags.f1)->required();
    tp_build->add_option("--f2", tb_flags.f2)->required();
    tp_build->add_option("--rows", tb_rows);
    tp_build->add_option("--max-order", tb_order);
    tp_build->add_flag("--json", tb_json);
    tp_build->add_flag("--csv", tb_csv);
    tp_build->callback([&] {
        int work = tb_rows + 2;
        Series g = eval_flag(tb_flags.g, work, "g");
        Series f1 = eval_flag(tb_flags.f1, work, "f1");
        Series f2 = eval_flag(tb_flags.f2, work, "f2");
        CompressedSpec spec =
            tb_kind == "linear-b"
                ? tp_build_linear_b(rat_parse(tb_b0), rat_parse(tb_b1), g, f1, f2, tb_rows,
                                    tb_order)
                : tp_build_tg_alpha(rat_parse(tb_alpha), g, f1, f2, tb_rows, tb_order);
        Mat m = build_compressed(spec, tb_rows);
        emit_matrix(m, tb_json, tb_csv);
        TPReport rep = is_tp(m, tb_order);
        if (rep.verdict != TPReport::Verdict::tp)
            throw VerificationFailure("constructed array failed the TP check");
        std::cerr << "TP certified at n=" << tb_rows << ", max order " << tb_order << "\n";
    });

    // ---- selftest ----
    auto* cmd_self = app.add_subcommand("selftest", "replay the full verification suite");
    std::string st_filter;
    cmd_self->add_option("--filter", st_filter, "substring filter on criterion names");
    cmd_self->callback([&] {
        std::vector<CriterionResult> results = run_selftest(st_filter);
        bool all = true;
        for (const auto& r : results) {
            std::printf("%-34s %s  (%.2fs)  %s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                        r.seconds, r.detail.c_str());
            all = all && r.pass;
        }
        if (results.empty()) throw UsageError("filter matched no criteria");
        if (!all) throw VerificationFailure("selftest criteria failed");
    });

    std::reverse(raw.begin(), raw.end());  // CLI11 consumes from the back
    try {
        app.parse(raw);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
