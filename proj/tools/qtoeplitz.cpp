// qtoeplitz — exact quaternion Toeplitz structure checker.
//
// Subcommands: verify-all, check-prop31, check-prop33, check-prop34,
// commutant, gpq, bench. Exit codes: 0 success, 1 check failure, 2 usage
// error. All randomized sweeps are reproducible from --seed; JSON reports
// follow report.schema.json.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtoeplitz/bench.hpp"
#include "qtoeplitz/gpq.hpp"
#include "qtoeplitz/report.hpp"
#include "qtoeplitz/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qtz;

int emit_report(const Report& rep, bool json) {
    if (json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.human_text();
    return rep.exit_code();
}

int cmd_verify_all(size_t n_max, size_t trials, uint64_t seed, bool json) {
    VerifyOptions opt;
    opt.n_max = n_max;
    opt.trials = trials;
    opt.seed = seed;
    return emit_report(run_verify_all(opt), json);
}

int cmd_check_prop31(size_t n, size_t trials, uint64_t seed, bool json) {
    Report rep;
    rep.command = "check-prop31";
    rep.seed = seed;
    rep.parameters = {{"n", n}, {"trials", trials}};
    rep.checks.push_back(check_displacement_forward(n, n, trials, seed));
    rep.checks.push_back(check_displacement_equivalence(n, n, trials, seed));
    return emit_report(rep, json);
}

int cmd_check_prop33(size_t n, size_t trials, uint64_t seed, bool json) {
    Report rep;
    rep.command = "check-prop33";
    rep.seed = seed;
    rep.parameters = {{"n", n}, {"trials", trials}};
    if (n == 2) rep.checks.push_back(check_product_criterion_exhaustive_n2());
    rep.checks.push_back(check_product_criterion_random(n, n, trials, seed));
    return emit_report(rep, json);
}

int cmd_check_prop34(size_t n, size_t trials, uint64_t seed, bool json) {
    Report rep;
    rep.command = "check-prop34";
    rep.seed = seed;
    rep.parameters = {{"n", n}, {"trials", trials}};
    rep.checks.push_back(check_commuting_entries_literal(n));
    rep.checks.push_back(check_commuting_entries_corrected(n, n, trials, seed));
    return emit_report(rep, json);
}

int cmd_commutant(const std::string& gens_text, bool json) {
    std::vector<Quat<Rational>> gens;
    std::string cur;
    std::stringstream ss(gens_text);
    while (std::getline(ss, cur, ';'))
        if (!detail::blank(cur)) gens.push_back(parse_quat(cur));
    Subalg c = commutant_of_set(gens);
    ordered_json out;
    out["command"] = "commutant";
    out["generators"] = ordered_json::array();
    for (const auto& g : gens) out["generators"].push_back(to_string(g));
    out["commutant"] = c.to_string();
    out["dimension"] = c.dim();
    out["commutant_basis"] = ordered_json::array();
    for (const auto& b : c.real_basis()) out["commutant_basis"].push_back(to_string(b));
    if (json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "commutant: " << c.to_string() << "  (dimension " << c.dim() << ")\n";
        std::cout << "basis:";
        for (const auto& b : c.real_basis()) std::cout << " " << to_string(b);
        std::cout << "\n";
    }
    return 0;
}

struct GpqArgs {
    size_t n = 2;
    std::string algebra = "H";
    std::string p, q;
    std::string member_file;
    bool closure = false;
    size_t trials = 200;
    uint64_t seed = 42;
    bool equal = false;
    std::string p2, q2;
    bool maximal = false;
    std::string ambient = "H";
    bool json = false;
};

int cmd_gpq(const GpqArgs& args) {
    GpqSpec spec(args.n, parse_subalg(args.algebra), parse_quat(args.p), parse_quat(args.q));
    ordered_json out;
    out["command"] = "gpq";
    out["spec"] = spec.key();
    auto bas = basis(spec);
    out["dimension"] = bas.size();
    int rc = 0;

    if (!args.member_file.empty()) {
        std::ifstream in(args.member_file);
        if (!in) throw std::invalid_argument("cannot read " + args.member_file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string content = buffer.str();
        size_t first = content.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) throw std::invalid_argument(args.member_file + " is empty");
        // three accepted shapes: JSON array-of-arrays, Toeplitz parameter
        // text (leading size), or dense matrix text (rows of ';'-separated
        // literals); dense inputs go through the Toeplitz extractor
        ToeplitzMat<Rational> t(1);
        if (content[first] == '[')
            t = ToeplitzMat<Rational>::from_dense(matrix_from_json(nlohmann::json::parse(content)));
        else if (std::isdigit(static_cast<unsigned char>(content[first])))
            t = parse_toeplitz(content);
        else
            t = ToeplitzMat<Rational>::from_dense(parse_matrix(content));
        out["member"] = {{"file", args.member_file},
                         {"matrix", matrix_to_json(t.to_dense())},
                         {"is_member", is_member(t, spec)}};
    }
    if (args.closure) {
        auto rep = closure_check(spec, args.trials, args.seed);
        bool rank = closure_rank_test(spec);
        out["closure"] = {{"trials", rep.trials},
                          {"sampled_ok", rep.ok},
                          {"rank_test_ok", rank}};
        if (!rep.ok) out["closure"]["failure"] = rep.failure;
        if (!rep.ok || !rank) rc = 1;
    }
    if (args.equal) {
        GpqSpec other(args.n, parse_subalg(args.algebra), parse_quat(args.p2), parse_quat(args.q2));
        out["equal"] = {{"other", other.key()},
                        {"criterion", equality_criterion(spec, other)},
                        {"sets_equal", sets_equal(spec, other)}};
    }
    if (args.maximal) {
        Ambient amb = args.ambient == "A" || args.ambient == "a" ? Ambient::EntriesInA
                                                                 : Ambient::FullH;
        bool crit = maximality_criterion(spec);
        auto cx = maximality_falsify(spec, amb, args.trials, args.seed);
        out["maximal"] = {{"ambient", amb == Ambient::FullH ? "H" : "A"},
                          {"criterion", crit},
                          {"counterexample_found", cx.has_value()},
                          {"trials", args.trials}};
        if (cx) {
            out["maximal"]["extension"] = to_text(cx->extension);
            out["maximal"]["family_dim"] = cx->family_dim;
            out["maximal"]["closure_dim"] = cx->closure_dim;
        }
    }

    if (args.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "family " << spec.key() << "  dimension " << bas.size() << "\n";
        if (out.contains("member"))
            std::cout << "member(" << args.member_file
                      << "): " << (out["member"]["is_member"].get<bool>() ? "yes" : "no") << "\n";
        if (out.contains("closure"))
            std::cout << "closure: sampled "
                      << (out["closure"]["sampled_ok"].get<bool>() ? "ok" : "FAILED") << ", rank test "
                      << (out["closure"]["rank_test_ok"].get<bool>() ? "ok" : "FAILED") << "\n";
        if (out.contains("equal"))
            std::cout << "equal vs (" << args.p2 << ", " << args.q2
                      << "): criterion=" << (out["equal"]["criterion"].get<bool>() ? "yes" : "no")
                      << " sets_equal=" << (out["equal"]["sets_equal"].get<bool>() ? "yes" : "no")
                      << "\n";
        if (out.contains("maximal")) {
            std::cout << "maximal: criterion="
                      << (out["maximal"]["criterion"].get<bool>() ? "yes" : "no")
                      << " counterexample="
                      << (out["maximal"]["counterexample_found"].get<bool>() ? "found" : "none")
                      << "\n";
        }
    }
    return rc;
}

int cmd_bench(const std::vector<size_t>& sizes, size_t reps, uint64_t seed, bool json) {
    ordered_json out = bench_report(sizes, reps, seed);
    if (json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "structured (2n-1 params) vs dense (n^2 entries) quaternion matvec, " << reps
              << " reps\n";
    for (const auto& row : out["rows"]) {
        std::cout << "n=" << row["n"].get<size_t>() << "  structured " << row["structured_ms"].get<double>()
                  << " ms  dense " << row["dense_ms"].get<double>() << " ms  dense/structured "
                  << row["dense_over_structured"].get<double>() << "  storage " << row["structured_params"].get<size_t>()
                  << "/" << row["dense_entries"].get<size_t>() << " = " << row["storage_ratio"].get<double>()
                  << "\n";
    }
    std::cout << "float vs exact matvec, n=8, max |error| = "
              << out["float_vs_exact_abs_error_n8"].get<double>() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quaternion Toeplitz structure checker"};
    app.require_subcommand(1);

    size_t n_max = 3, trials = 500;
    uint64_t seed = 42;
    bool json = false;

    auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
    verify->add_option("--n", n_max, "largest matrix size (>= 2)")->default_val(3);
    verify->add_option("--trials", trials, "trial count for randomized sweeps")->default_val(500);
    verify->add_option("--seed", seed, "root seed")->default_val(42);
    verify->add_flag("--json", json, "emit the JSON report");

    size_t p31n = 4, p31trials = 2000;
    uint64_t p31seed = 42;
    bool p31json = false;
    auto* p31 = app.add_subcommand("check-prop31", "displacement characterization checks");
    p31->add_option("--n", p31n, "matrix size")->default_val(4);
    p31->add_option("--trials", p31trials, "trial count")->default_val(2000);
    p31->add_option("--seed", p31seed, "root seed")->default_val(42);
    p31->add_flag("--json", p31json, "emit the JSON report");

    size_t p33n = 3, p33trials = 2000;
    uint64_t p33seed = 42;
    bool p33json = false;
    auto* p33 = app.add_subcommand("check-prop33", "product criterion checks");
    p33->add_option("--n", p33n, "matrix size (n = 2 adds the exhaustive alphabet sweep)")
        ->default_val(3);
    p33->add_option("--trials", p33trials, "trial count")->default_val(2000);
    p33->add_option("--seed", p33seed, "root seed")->default_val(42);
    p33->add_flag("--json", p33json, "emit the JSON report");

    size_t p34n = 3, p34trials = 2000;
    uint64_t p34seed = 42;
    bool p34json = false;
    auto* p34 = app.add_subcommand("check-prop34", "commuting-entries checks (literal + corrected)");
    p34->add_option("--n", p34n, "matrix size")->default_val(3);
    p34->add_option("--trials", p34trials, "trial count")->default_val(2000);
    p34->add_option("--seed", p34seed, "root seed")->default_val(42);
    p34->add_flag("--json", p34json, "emit the JSON report");

    std::string gens;
    bool cjson = false;
    auto* comm = app.add_subcommand("commutant", "classify the commutant of scalar generators");
    comm->add_option("--gens", gens, "semicolon-separated quaternion literals")->required();
    comm->add_flag("--json", cjson, "emit JSON");

    GpqArgs gargs;
    auto* gpq = app.add_subcommand("gpq", "inspect one family G_{p,q}[A]");
    gpq->add_option("--n", gargs.n, "matrix size")->required();
    gpq->add_option("--algebra", gargs.algebra, "entry algebra: R | plane:<pure> | H")->required();
    gpq->add_option("--p", gargs.p, "p (quaternion literal)")->required();
    gpq->add_option("--q", gargs.q, "q (quaternion literal)")->required();
    gpq->add_option("--member", gargs.member_file, "Toeplitz file to test for membership");
    gpq->add_flag("--closure", gargs.closure, "run the sampled closure check and the rank test");
    gpq->add_option("--trials", gargs.trials, "trials for --closure / --maximal")->default_val(200);
    gpq->add_option("--seed", gargs.seed, "root seed")->default_val(42);
    gpq->add_flag("--equal", gargs.equal, "compare against a second family (--p2, --q2)");
    gpq->add_option("--p2", gargs.p2, "second family p");
    gpq->add_option("--q2", gargs.q2, "second family q");
    gpq->add_flag("--maximal", gargs.maximal, "run the maximality criterion and search");
    gpq->add_option("--ambient", gargs.ambient, "ambient for --maximal: A or H")->default_val("H");
    gpq->add_flag("--json", gargs.json, "emit JSON");

    std::vector<size_t> bench_sizes{64, 256, 1024};
    size_t reps = 50;
    uint64_t bseed = 42;
    bool bjson = false;
    auto* bench = app.add_subcommand("bench", "structured vs dense matvec timings (float path)");
    bench->add_option("--n", bench_sizes, "sizes to benchmark")->delimiter(',');
    bench->add_option("--reps", reps, "repetitions per size")->default_val(50);
    bench->add_option("--seed", bseed, "input seed")->default_val(42);
    bench->add_flag("--json", bjson, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify_all(n_max, trials, seed, json);
        if (p31->parsed()) return cmd_check_prop31(p31n, p31trials, p31seed, p31json);
        if (p33->parsed()) return cmd_check_prop33(p33n, p33trials, p33seed, p33json);
        if (p34->parsed()) return cmd_check_prop34(p34n, p34trials, p34seed, p34json);
        if (comm->parsed()) return cmd_commutant(gens, cjson);
        if (gpq->parsed()) {
            if (gargs.equal && (gargs.p2.empty() || gargs.q2.empty()))
                throw std::invalid_argument("--equal needs --p2 and --q2");
            return cmd_gpq(gargs);
        }
        if (bench->parsed()) return cmd_bench(bench_sizes, reps, bseed, bjson);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
