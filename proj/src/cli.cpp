#include "duals/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "duals/json_io.hpp"
#include "duals/parser.hpp"

namespace duals::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string input = "-";
    std::string mode;
    int k = 1;
    int d = 0;
    int kmax = 4;
    std::string a_vars;
    double tol = 1e-8;
    double point_tol = 1e-8;
    std::optional<int> window;
    std::optional<int> kcap;
    std::optional<int> assume_rho;
    std::optional<int> assume_mu;
    std::optional<int> max_degree;
    std::uint64_t seed = 0;
    int retries = 3;
    bool verbose = false;
    bool m2 = false;
    std::string method = "direct";
    std::string member_poly;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::optional<ScalarMode> forced_mode(const Options& opt) {
    if (opt.mode.empty()) return std::nullopt;
    if (opt.mode == "exact") return ScalarMode::exact;
    if (opt.mode == "complex") return ScalarMode::cplx;
    throw UsageError("unknown --mode '" + opt.mode + "' (exact or complex)");
}

std::vector<int> parse_a_vars(const Options& opt, const SystemFile& system) {
    if (opt.a_vars.empty()) throw UsageError("this subcommand needs --A");
    std::vector<int> vars;
    std::stringstream ss(opt.a_vars);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto it = std::find(system.var_names.begin(), system.var_names.end(), name);
        if (it == system.var_names.end())
            throw UsageError("unknown variable in --A: '" + name + "'");
        vars.push_back(static_cast<int>(it - system.var_names.begin()));
    }
    return vars;
}

json config_json(const std::string& command, const Options& opt,
                 const SystemFile& system) {
    json j{{"subcommand", command},
           {"input", opt.input},
           {"mode", to_string(system.mode)},
           {"k", opt.k},
           {"d", opt.d},
           {"kmax", opt.kmax},
           {"A", opt.a_vars},
           {"tol", opt.tol},
           {"point_tol", opt.point_tol},
           {"seed", opt.seed},
           {"retries", opt.retries},
           {"verbose", opt.verbose},
           {"m2", opt.m2},
           {"method", opt.method}};
    j["window"] = opt.window ? json(*opt.window) : json(nullptr);
    j["kcap"] = opt.kcap ? json(*opt.kcap) : json(nullptr);
    j["assume_rho"] = opt.assume_rho ? json(*opt.assume_rho) : json(nullptr);
    j["assume_mu"] = opt.assume_mu ? json(*opt.assume_mu) : json(nullptr);
    j["max_degree"] = opt.max_degree ? json(*opt.max_degree) : json(nullptr);
    j["f"] = opt.member_poly.empty() ? json(nullptr) : json(opt.member_poly);
    return j;
}

/// Ideal moved to the origin: translate when the file carries a point.
Ideal working_ideal(const SystemFile& system, const Options& opt) {
    Ideal ideal = system.ideal();
    if (system.point) return translate_to_point(ideal, *system.point, opt.point_tol);
    return ideal;
}

struct Report {
    json body;
    std::string m2_text;
};

Report run_dual(const Options& opt, const SystemFile& system) {
    Ideal ideal = working_ideal(system, opt);
    RankPolicy policy = RankPolicy::for_mode(ideal.mode(), opt.tol);
    TruncatedDualSpace space;
    if (opt.method == "direct")
        space = truncated_dual_direct(ideal, opt.k, policy);
    else if (opt.method == "completion")
        space = truncated_dual_completion(ideal, opt.k, policy);
    else
        throw UsageError("unknown --method '" + opt.method +
                         "' (direct or completion)");
    return {to_json(space), m2_snippet(space.basis, system.var_names)};
}

Report run_fulldual(const Options& opt, const SystemFile& system) {
    Ideal ideal = working_ideal(system, opt);
    RankPolicy policy = RankPolicy::for_mode(ideal.mode(), opt.tol);
    int cap = opt.max_degree.value_or(2 * ideal.sum_generator_degrees() + 2);
    TruncatedDualSpace space = full_dual_zero_dim(ideal, policy, cap);
    json j = to_json(space);
    j["complete"] = space.complete;
    j["cap_used"] = cap;
    return {std::move(j), m2_snippet(space.basis, system.var_names)};
}

Report run_elimdual(const Options& opt, const SystemFile& system) {
    Ideal ideal = working_ideal(system, opt);
    RankPolicy policy = RankPolicy::for_mode(ideal.mode(), opt.tol);
    auto vars = parse_a_vars(opt, system);
    EliminatingDualSpace space =
        eliminating_dual(ideal, vars, opt.d, policy, opt.max_degree);
    return {to_json(space, system.var_names),
            m2_snippet(space.basis, system.var_names)};
}

Report run_colon_elim(const Options& opt, const SystemFile& system) {
    Ideal ideal = working_ideal(system, opt);
    RankPolicy policy = RankPolicy::for_mode(ideal.mode(), opt.tol);
    auto vars = parse_a_vars(opt, system);
    if (vars.size() == 1) {
        EliminatingDualSpace upper =
            eliminating_dual(ideal, vars, opt.d + 1, policy, opt.max_degree);
        if (!upper.complete) {
            json j = to_json(upper, system.var_names);
            j["colon"] = true;
            return {std::move(j), ""};
        }
        EliminatingDualSpace colon = quotient_eliminating_dual(upper, vars[0], policy);
        json j = to_json(colon, system.var_names);
        j["colon"] = true;
        return {std::move(j), m2_snippet(colon.basis, system.var_names)};
    }
    bool holds = colon_inclusion_check(ideal, vars, opt.d, policy, std::nullopt,
                                       opt.max_degree);
    return {json{{"d", opt.d}, {"colon", true}, {"inclusion_holds", holds}}, ""};
}

Report run_hilbert(const Options& opt, const SystemFile& system) {
    Ideal ideal = working_ideal(system, opt);
    RankPolicy policy = RankPolicy::for_mode(ideal.mode(), opt.tol);
    HilbertData data = hilbert_function(ideal, opt.kmax, policy);
    RegularityOptions reg{opt.window, opt.kcap, opt.assume_rho, opt.assume_mu};
    HilbertData detected = regularity_and_multiplicity(ideal, reg, policy);
    data.rho = detected.rho;
    data.mu = detected.mu;
    data.hp_value = detected.hp_value;
    data.certified = detected.certified;
    data.window = detected.window;
    return {to_json(data), ""};
}

Report run_staircase(const Options& opt, const SystemFile& system) {
    Ideal ideal = working_ideal(system, opt);
    RankPolicy policy = RankPolicy::for_mode(ideal.mode(), opt.tol);
    StaircaseReport report = standard_monomials(
        ideal, opt.k, OrderSpec::graded(ideal.num_vars()), policy);
    return {to_json(report), ""};
}

Report run_member(const Options& opt, const SystemFile& system) {
    if (opt.member_poly.empty())
        throw UsageError("member needs --f <polynomial>");
    Ideal ideal = working_ideal(system, opt);
    RankPolicy policy = RankPolicy::for_mode(ideal.mode(), opt.tol);
    Polynomial f = parse_polynomial(opt.member_poly, system.var_names, ideal.mode());
    bool member = homogeneous_membership(f, ideal, policy);
    return {json{{"member", member}, {"degree", f.degree()}}, ""};
}

Report run_embedded(const Options& opt, const SystemFile& system) {
    Ideal ideal = system.ideal();
    RankPolicy policy = RankPolicy::for_mode(ideal.mode(), opt.tol);
    EmbeddedOptions eopt;
    eopt.regularity = RegularityOptions{opt.window, opt.kcap, opt.assume_rho,
                                        opt.assume_mu};
    eopt.max_degree = opt.max_degree;
    eopt.seed = opt.seed;
    eopt.retry_limit = opt.retries;
    eopt.point_tol = opt.point_tol;
    eopt.verbose = opt.verbose;
    std::vector<Scalar> point =
        system.point ? *system.point
                     : std::vector<Scalar>(static_cast<size_t>(ideal.num_vars()),
                                           Scalar::zero(ideal.mode()));
    EmbeddedVerdict verdict = embedded_point_test(ideal, point, eopt, policy);
    std::string m2;
    if (opt.verbose) m2 = m2_snippet(verdict.basis_E_k, system.var_names);
    return {to_json(verdict, opt.verbose), std::move(m2)};
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Macaulay dual spaces, eliminating duals, local Hilbert data, and "
                 "the embedded-point test"};
    app.require_subcommand(1);

    Options opt;
    std::string command;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "system file path, or - for stdin");
        sub->add_option("--mode", opt.mode, "force scalar mode: exact or complex");
        sub->add_option("--tol", opt.tol, "SVD rank tolerance");
        sub->add_option("--point-tol", opt.point_tol, "point residual tolerance");
        sub->add_flag("--m2", opt.m2, "append a Macaulay2-pasteable dual basis");
        sub->add_flag("--verbose", opt.verbose, "include bases in the report");
    };

    CLI::App* dual = app.add_subcommand("dual", "truncated dual space D^k");
    add_common(dual);
    dual->add_option("--k", opt.k, "truncation degree");
    dual->add_option("--method", opt.method, "direct or completion");

    CLI::App* fulldual =
        app.add_subcommand("fulldual", "full dual space of a 0-dimensional ideal");
    add_common(fulldual);
    fulldual->add_option("--max-degree", opt.max_degree, "stabilization cap");

    CLI::App* elimdual = app.add_subcommand("elimdual", "eliminating dual space E^d");
    add_common(elimdual);
    elimdual->add_option("--A", opt.a_vars, "eliminated variables, comma separated");
    elimdual->add_option("--d", opt.d, "A-order bound");
    elimdual->add_option("--max-degree", opt.max_degree, "stabilization cap");

    CLI::App* colon = app.add_subcommand(
        "colon-elim", "eliminating dual of the colon ideal I:<x1> (single --A "
                      "variable) or the m>1 inclusion check");
    add_common(colon);
    colon->add_option("--A", opt.a_vars, "eliminated variables, comma separated");
    colon->add_option("--d", opt.d, "A-order bound of the colon dual");
    colon->add_option("--max-degree", opt.max_degree, "stabilization cap");

    CLI::App* hilbert = app.add_subcommand("hilbert", "local Hilbert function");
    add_common(hilbert);
    hilbert->add_option("--kmax,--k", opt.kmax, "last degree to report");
    hilbert->add_option("--window", opt.window, "stable-run length");
    hilbert->add_option("--kcap", opt.kcap, "sweep cap");
    hilbert->add_option("--assume-rho", opt.assume_rho, "externally certified rho");
    hilbert->add_option("--assume-mu", opt.assume_mu, "externally certified mu");

    CLI::App* staircase =
        app.add_subcommand("staircase", "standard monomials and initial ideal");
    add_common(staircase);
    staircase->add_option("--k", opt.k, "degree bound");

    CLI::App* member =
        app.add_subcommand("member", "membership in a homogeneous ideal");
    add_common(member);
    member->add_option("--f", opt.member_poly, "polynomial to test");

    CLI::App* embedded = app.add_subcommand(
        "embedded", "is the point (or origin) an embedded component of the curve");
    add_common(embedded);
    embedded->add_option("--seed", opt.seed, "coordinate-change seed");
    embedded->add_option("--retries", opt.retries, "regular-position retries");
    embedded->add_option("--window", opt.window, "Hilbert stable-run length");
    embedded->add_option("--kcap", opt.kcap, "Hilbert sweep cap");
    embedded->add_option("--assume-rho", opt.assume_rho, "externally certified rho");
    embedded->add_option("--assume-mu", opt.assume_mu, "externally certified mu");
    embedded->add_option("--max-degree", opt.max_degree, "stabilization cap");

    std::vector<std::string> argv_strings = args;
    argv_strings.insert(argv_strings.begin(), "dualspace");
    std::vector<char*> argv;
    argv.reserve(argv_strings.size());
    for (auto& s : argv_strings) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << std::flush;
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump(2)
            << "\n";
        return exit_usage;
    }

    for (CLI::App* sub : {dual, fulldual, elimdual, colon, hilbert, staircase, member,
                          embedded})
        if (app.got_subcommand(sub)) command = sub->get_name();

    try {
        if (!(opt.tol > 0.0 && opt.tol < 1.0))
            throw UsageError("--tol must lie in (0,1)");
        if (!(opt.point_tol > 0.0 && opt.point_tol < 1.0))
            throw UsageError("--point-tol must lie in (0,1)");

        SystemFile system = parse_system(read_input(opt.input, in), forced_mode(opt));

        Report report;
        if (command == "dual")
            report = run_dual(opt, system);
        else if (command == "fulldual")
            report = run_fulldual(opt, system);
        else if (command == "elimdual")
            report = run_elimdual(opt, system);
        else if (command == "colon-elim")
            report = run_colon_elim(opt, system);
        else if (command == "hilbert")
            report = run_hilbert(opt, system);
        else if (command == "staircase")
            report = run_staircase(opt, system);
        else if (command == "member")
            report = run_member(opt, system);
        else
            report = run_embedded(opt, system);

        json envelope{{"command", command},
                      {"config", config_json(command, opt, system)},
                      {"result", std::move(report.body)}};
        out << envelope.dump(2) << "\n";
        if (opt.m2 && !report.m2_text.empty()) out << report.m2_text;
        return exit_ok;
    } catch (const UsageError& e) {
        err << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump(2)
            << "\n";
        return exit_usage;
    } catch (const MathError& e) {
        err << json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}}.dump(2)
            << "\n";
        return exit_math;
    } catch (const std::exception& e) {
        err << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2)
            << "\n";
        return exit_math;
    }
}

} // namespace duals::cli
