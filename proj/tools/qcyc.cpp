// Command line front end: factor x^n-1, construct and analyze a single code,
// inspect duals, search a full length for CSS-usable codes, and re-verify the
// reference examples against the built-in brute-force oracles.
//
// Exit codes: 0 success, 1 verification or containment failure, 2 bad usage.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcyc/oracle.hpp"
#include "qcyc/result_line.hpp"

using namespace qcyc;

namespace {

struct SpecArgs {
    int n = 0;
    std::string g1, a1, g2;

    CodeSpec parse() const {
        return validate_spec({n, BinPoly::parse(g1), BinPoly::parse(a1), BinPoly::parse(g2)});
    }
};

void add_spec_options(CLI::App* cmd, SpecArgs& args) {
    cmd->add_option("--n", args.n, "code length (odd)")->required();
    cmd->add_option("--g1", args.g1, "generator g1, e.g. x+1 or 11")->required();
    cmd->add_option("--a1", args.a1, "generator a1 (must divide g1)")->required();
    cmd->add_option("--g2", args.g2, "generator g2")->required();
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::trunc);
    if (!file) throw std::invalid_argument("cannot open output file " + path);
    return file;
}

void emit_lines(std::ostream& os, const std::vector<ResultLine>& lines, const std::string& fmt) {
    if (fmt == "csv") {
        os << ResultLine::csv_header() << '\n';
        for (const auto& l : lines) os << l.to_csv_row() << '\n';
    } else {
        for (const auto& l : lines) os << l.to_jsonl() << '\n';
    }
}

int run_factor(int n) {
    auto factors = factor_xn_minus_1(n);
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += ", ";
        out += f.str();
    }
    std::cout << out << '\n';
    return 0;
}

int run_construct(const SpecArgs& args, int budget, const std::string& out_path,
                  const std::string& fmt) {
    ResultLine line = ResultLine::evaluate(args.parse(), budget);
    std::ofstream file;
    emit_lines(open_out(file, out_path), {line}, fmt);
    return 0;
}

int run_dual(const SpecArgs& args) {
    CodeSpec spec = args.parse();
    DualBasis dual = dual_code(span_basis(spec));
    DualFormulaResult formula = dual_generator_formula(spec);

    nlohmann::ordered_json j;
    j["n"] = spec.n;
    j["g1"] = spec.g1.str();
    j["a1"] = spec.a1.str();
    j["g2"] = spec.g2.str();
    j["dual_size_log2"] = dual.dim();
    j["formula_generator"] = rpoly_str(formula.generator);
    j["formula_matches"] = formula.matches;
    std::cout << j.dump() << '\n';
    return 0;
}

int run_search(int n, int budget, int max_n, const std::string& out_path,
               const std::string& fmt) {
    auto records = search_quantum(n, budget, max_n);
    std::vector<ResultLine> lines;
    lines.reserve(records.size());
    for (const auto& r : records) lines.push_back(ResultLine::from_record(r));

    std::ofstream file;
    emit_lines(open_out(file, out_path), lines, fmt);

    // Summary: the best dimension achieved at each distance.
    std::map<int, const SearchRecord*> best; // distance -> record
    for (const auto& r : records) {
        auto [it, inserted] = best.try_emplace(r.params.distance.value, &r);
        if (!inserted && r.params.dimension > it->second->params.dimension) it->second = &r;
    }
    std::ostream& os = out_path.empty() ? std::cerr : std::cout;
    os << records.size() << " dual-containing codes at n=" << n << '\n';
    for (const auto& [d, r] : best)
        os << "  [[" << r->params.length << "," << r->params.dimension << "," << d
           << (r->params.distance.exact ? "" : "?") << "]]  from " << r->spec.text() << '\n';
    return 0;
}

// One reference example: the generator triple with its published claims.
struct PaperClaim {
    SpecArgs args;
    int claimed_distance;
    bool claimed_containing;
    int claimed_q_dimension; // of the claimed [[3n, k, d]] code
};

int run_verify_paper(int budget, bool fault_inject_lee) {
    const std::vector<PaperClaim> claims = {
        {{3, "x+1", "1", "x+1"}, 2, true, 5},
        {{3, "x+1", "1", "x^2+x+1"}, 2, true, 3},
        {{5, "x+1", "1", "x+1"}, 2, true, 11},
    };

    int checks = 0, failures = 0, findings = 0;
    auto ok = [&checks](const std::string& what) {
        ++checks;
        std::cout << "OK       " << what << '\n';
    };
    auto fail = [&checks, &failures](const std::string& what) {
        ++checks;
        ++failures;
        std::cout << "FAIL     " << what << '\n';
    };
    auto finding = [&findings](const std::string& what) {
        ++findings;
        std::cout << "FINDING  " << what << '\n';
    };

    for (const PaperClaim& claim : claims) {
        CodeSpec spec = claim.args.parse();
        const std::string where = spec.text();

        CodeBasis basis = span_basis(spec);
        int m = basis.dim();
        if (m == code_size_log2(spec))
            ok(where + " code size 8^a 4^b 2^c consistent, log2|C|=" + std::to_string(m));
        else
            fail(where + " span dimension disagrees with the degree formula");

        LeeDistance d = min_lee_distance(basis, budget);
        int oracle_d = exhaustive_min_lee_weight(basis);
        if (fault_inject_lee) ++oracle_d; // negative control: must be caught below
        if (d.exact && d.value == oracle_d)
            ok(where + " Lee distance " + std::to_string(d.value) + " confirmed exhaustively");
        else
            fail(where + " Lee distance mismatch: walk says " + std::to_string(d.value) +
                 ", exhaustive oracle says " + std::to_string(oracle_d));
        if (d.value != claim.claimed_distance)
            finding(where + " computed Lee distance " + std::to_string(d.value) +
                    " differs from the claimed " + std::to_string(claim.claimed_distance));

        // dual containment, three ways plus the exhaustive oracle
        ContainmentEvidence ev = is_dual_containing(spec);
        DualBasis dual = dual_code(basis);
        bool oracle_containing = basis.contains_span(exhaustive_dual(basis));
        if (ev.agree() && ev.verdict() == oracle_containing)
            ok(where + " containment verdict " + (ev.verdict() ? "true" : "false") +
               " agreed by all three methods and the exhaustive oracle");
        else
            fail(where + " containment methods disagree");
        if (ev.verdict() != claim.claimed_containing) {
            int missing = 0;
            for (const RWord& row : dual.rows())
                if (!basis.contains(row)) ++missing;
            finding(where + " is claimed dual-containing, but " + std::to_string(missing) +
                    " of " + std::to_string(dual.dim()) +
                    " dual basis vectors lie outside C; the claimed [[" +
                    std::to_string(3 * spec.n) + "," + std::to_string(claim.claimed_q_dimension) +
                    "," + std::to_string(claim.claimed_distance) +
                    "]] CSS code does not arise from this triple");
        }

        // structural identities behind the construction
        if (check_quasi_cyclic(basis))
            ok(where + " Gray image is quasi-cyclic of index 3");
        else
            fail(where + " Gray image is not quasi-cyclic of index 3");
        if (dual_code(dual) == basis && basis.dim() + dual.dim() == 3 * spec.n)
            ok(where + " |C| |C_perp| = 8^n and (C_perp)_perp = C");
        else
            fail(where + " size duality violated");
    }

    // the Gray/shift intertwining, exhaustively at n = 3
    {
        bool all_ok = true;
        for (unsigned bits = 0; bits < 512 && all_ok; ++bits) {
            RVec v(3);
            for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(i)] = RElem::from_bits((bits >> (3 * i)) & 7);
            all_ok = check_shift_commutation(v);
        }
        if (all_ok)
            ok("gray(shift(v)) = tau(gray(v)) for all 512 vectors at n=3");
        else
            fail("gray/shift intertwining violated");
    }

    std::cout << checks << " checks, " << failures << " failures, " << findings
              << " findings\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic codes over F2+uF2+u^2F2 (u^3=u) and their CSS quantum codes"};
    app.require_subcommand(1);

    int factor_n = 0;
    CLI::App* factor = app.add_subcommand("factor", "factor x^n-1 over F2");
    factor->add_option("--n", factor_n, "length (odd)")->required();

    SpecArgs construct_args;
    int construct_budget = 24;
    std::string construct_out, construct_fmt = "json";
    CLI::App* construct = app.add_subcommand("construct", "analyze one generator triple");
    add_spec_options(construct, construct_args);
    construct->add_option("--budget", construct_budget, "exact-distance budget in log2 codewords");
    construct->add_option("--out", construct_out, "output file (default stdout)");
    construct->add_option("--emit", construct_fmt, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    SpecArgs dual_args;
    CLI::App* dual = app.add_subcommand("dual", "dual code of one generator triple");
    add_spec_options(dual, dual_args);

    int search_n = 0, search_budget = 24, search_max_n = 63;
    std::string search_out, search_fmt = "json";
    CLI::App* search = app.add_subcommand("search", "all dual-containing codes at length n");
    search->add_option("--n", search_n, "length (odd)")->required();
    search->add_option("--budget", search_budget, "exact-distance budget in log2 codewords");
    search->add_option("--out", search_out, "output file (default stdout)");
    search->add_option("--emit", search_fmt, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    search->add_option("--max-n", search_max_n, "refuse lengths above this");

    int verify_budget = 24;
    bool fault_inject_lee = false;
    CLI::App* verify = app.add_subcommand("verify-paper", "re-verify the reference examples");
    verify->add_option("--budget", verify_budget, "exact-distance budget in log2 codewords");
    verify
        ->add_flag("--fault-inject-lee", fault_inject_lee,
                   "negative control: corrupt one oracle value, must exit 1")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
        if (*factor) return run_factor(factor_n);
        if (*construct) return run_construct(construct_args, construct_budget, construct_out, construct_fmt);
        if (*dual) return run_dual(dual_args);
        if (*search) return run_search(search_n, search_budget, search_max_n, search_out, search_fmt);
        if (*verify) return run_verify_paper(verify_budget, fault_inject_lee);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
