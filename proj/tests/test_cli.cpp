#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "duals/cli.hpp"

using nlohmann::json;

namespace {

const char* cusp_file = "vars x y z\nx^2 - z^3\ny - z^2\n";
const char* pinch_file = "vars x1 x2\nx1^2 - x1*x2^2\n";

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = duals::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

json parse_report(const RunResult& r) {
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

// ---- minimal JSON Schema checker (the subset the shipped schema uses) ----

json load_schema() {
    std::ifstream f(std::string(DUALS_SOURCE_DIR) + "/schema/report.schema.json");
    REQUIRE(f.good());
    return json::parse(f);
}

bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

void validate(const json& schema, const json& value, const json& root,
              const std::string& where) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"];
        REQUIRE(ref.rfind("#/definitions/", 0) == 0);
        validate(root["definitions"][ref.substr(14)], value, root, where);
        return;
    }
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& option : schema["enum"]) hit = hit || option == value;
        INFO(where << ": enum mismatch, value = " << value.dump());
        CHECK(hit);
    }
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string())
            ok = type_matches(t.get<std::string>(), value);
        else
            for (const auto& option : t)
                ok = ok || type_matches(option.get<std::string>(), value);
        INFO(where << ": type mismatch, value = " << value.dump());
        CHECK(ok);
        if (!ok) return;
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"]) {
            INFO(where << ": missing required key " << key.get<std::string>());
            CHECK(value.contains(key.get<std::string>()));
        }
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key)) validate(sub, value[key], root, where + "." + key);
    if (schema.contains("items") && value.is_array())
        for (size_t i = 0; i < value.size(); ++i)
            validate(schema["items"], value[i], root,
                     where + "[" + std::to_string(i) + "]");
}

void validate_report(const json& report, const std::string& result_def) {
    json schema = load_schema();
    validate(schema, report, schema, "$");
    validate(schema["definitions"][result_def], report["result"], schema, "$.result");
}

} // namespace

TEST_CASE("dual --k 1 on the strict-inclusion curve") {
    auto r = run_cli({"dual", "--k", "1", "-"}, pinch_file);
    json report = parse_report(r);
    CHECK(report["command"] == "dual");
    CHECK(report["result"]["dim"] == 3);
    CHECK(report["config"]["mode"] == "exact");
    validate_report(report, "dual_result");
}

TEST_CASE("hilbert --kmax 4 on the cusp") {
    auto r = run_cli({"hilbert", "--kmax", "4", "-"}, cusp_file);
    json report = parse_report(r);
    CHECK(report["result"]["H"] == json::array({1, 2, 2, 2, 2}));
    CHECK(report["result"]["rho"] == 1);
    CHECK(report["result"]["mu"] == 2);
    CHECK(report["result"]["certified"] == false);
    validate_report(report, "hilbert_result");
}

TEST_CASE("elimdual --A x --d 1 on the cusp") {
    auto r = run_cli({"elimdual", "--A", "x", "--d", "1", "-"}, cusp_file);
    json report = parse_report(r);
    CHECK(report["result"]["dim"] == 6);
    CHECK(report["result"]["complete"] == true);
    CHECK(report["result"]["A"] == json::array({"x"}));
    validate_report(report, "elim_result");
}

TEST_CASE("colon-elim --A x --d 0 on the cusp") {
    auto r = run_cli({"colon-elim", "--A", "x", "--d", "0", "-"}, cusp_file);
    json report = parse_report(r);
    CHECK(report["result"]["dim"] == 3);
    CHECK(report["result"]["colon"] == true);
    validate_report(report, "elim_result");
}

TEST_CASE("embedded --seed 7 on the cusp") {
    auto r = run_cli({"embedded", "--seed", "7", "-"}, cusp_file);
    json report = parse_report(r);
    CHECK(report["result"]["embedded"] == false);
    // Not embedded means x1 . E^k fills E^{k-1} (the dims under the random
    // change differ from the identity-coordinates run, but stay equal to
    // each other).
    CHECK(report["result"]["dims"]["xE_k"] == report["result"]["dims"]["E_km1"]);
    CHECK(report["config"]["seed"] == 7);
    validate_report(report, "embedded_result");
}

TEST_CASE("staircase and member") {
    auto r = run_cli({"staircase", "--k", "3", "-"}, "vars x y\nx^2\nx*y\ny^3\n");
    json report = parse_report(r);
    CHECK(report["result"]["standard"].size() == 4);
    validate_report(report, "staircase_result");

    auto m = run_cli({"member", "--f", "x^2*y", "-"}, "vars x y\nx^2\nx*y\n");
    json mr = parse_report(m);
    CHECK(mr["result"]["member"] == true);
    validate_report(mr, "member_result");

    auto m2 = run_cli({"member", "--f", "y^2", "-"}, "vars x y\nx^2\nx*y\n");
    CHECK(parse_report(m2)["result"]["member"] == false);
}

TEST_CASE("dual --method completion agrees with direct") {
    auto direct = parse_report(run_cli({"dual", "--k", "2", "-"}, cusp_file));
    auto completed = parse_report(
        run_cli({"dual", "--k", "2", "--method", "completion", "-"}, cusp_file));
    CHECK(direct["result"]["dim"] == completed["result"]["dim"]);
}

TEST_CASE("colon-elim with several variables runs the inclusion check") {
    auto r = run_cli({"colon-elim", "--A", "x,y", "--d", "1", "-"},
                     "vars x y\nx^2*y^2\nx^3\ny^3\n");
    json report = parse_report(r);
    CHECK(report["result"]["inclusion_holds"] == true);
    validate_report(report, "colon_check_result");
}

TEST_CASE("fulldual reports non-stabilization in-band") {
    auto r = run_cli({"fulldual", "--max-degree", "4", "-"}, cusp_file);
    json report = parse_report(r);
    CHECK(report["result"]["complete"] == false);
    CHECK(report["result"]["k"] == 4);
}

TEST_CASE("fulldual on a fat point") {
    auto r = run_cli({"fulldual", "-"}, "vars x y\nx^2\ny^2\n");
    json report = parse_report(r);
    CHECK(report["result"]["dim"] == 4);
    CHECK(report["result"]["complete"] == true);
    validate_report(report, "dual_result");
}

TEST_CASE("exit code 1 on parse and usage errors") {
    auto r = run_cli({"dual", "--k", "1", "-"}, "vars x y\nx + w\n");
    CHECK(r.code == 1);
    json err = json::parse(r.err);
    CHECK(err["error"]["kind"] == "parse");
    json schema = load_schema();
    validate(schema["definitions"]["error"], err, schema, "$err");

    auto zero = run_cli({"dual", "-"}, "vars x\n0\n");
    CHECK(zero.code == 1);

    auto badflag = run_cli({"dual", "--nonsense", "-"}, cusp_file);
    CHECK(badflag.code == 1);

    auto badtol = run_cli({"dual", "--tol", "7", "-"}, cusp_file);
    CHECK(badtol.code == 1);
}

TEST_CASE("exit code 2 on mathematical failures") {
    // Window too wide for the cap: the sweep cannot certify a run.
    auto r = run_cli({"hilbert", "--window", "9", "--kcap", "3", "-"}, cusp_file);
    CHECK(r.code == 2);
    json err = json::parse(r.err);
    CHECK(err["error"]["kind"] == "non-stabilization");

    // Point off the variety.
    auto p = run_cli({"embedded", "-"}, "vars x y\nx\npoint 1 1\n");
    CHECK(p.code == 2);
    CHECK(json::parse(p.err)["error"]["kind"] == "point-rejected");
}

TEST_CASE("--m2 appends a Macaulay2 snippet") {
    auto r = run_cli({"dual", "--k", "1", "--m2", "-"}, pinch_file);
    CHECK(r.code == 0);
    CHECK(r.out.find("dualBasis = {") != std::string::npos);
    CHECK(r.out.find("R = CC[") != std::string::npos);
}

TEST_CASE("files with a point are translated before dual computations") {
    // The cusp at its smooth point (1,1,1).
    auto r = run_cli({"dual", "--k", "2", "-"},
                     "vars x y z\nx^2 - z^3\ny - z^2\npoint 1 1 1\n");
    json report = parse_report(r);
    CHECK(report["result"]["dim"] == 3); // smooth point: H = 1,1,1
}

TEST_CASE("help exits zero") {
    auto r = run_cli({"--help"}, "");
    CHECK(r.code == 0);
    CHECK(r.out.find("dual") != std::string::npos);
}
