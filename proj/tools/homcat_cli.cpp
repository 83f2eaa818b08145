#include <iostream>

#include "CLI11.hpp"
#include "homcat/center.hpp"
#include "homcat/io.hpp"
#include "homcat/pseudoid.hpp"

namespace {

using namespace homcat;

Field parse_field_tag(const std::string& tag) {
    if (tag == "q" || tag == "Q") return Field::rationals();
    if (tag.rfind("fp:", 0) == 0) return Field::prime(std::stoul(tag.substr(3)));
    throw MalformedInput("unknown field tag '" + tag + "' (expected q or fp:P)");
}

int emit(Report& rep, Json extra = Json::object()) {
    Json j = rep.to_json();
    for (auto& [k, v] : extra.items()) j[k] = v;
    std::cout << j.dump(2) << "\n";
    return rep.all_passed() ? 0 : 1;
}

int run_validate(const std::string& path) {
    PresPtr p = load_presentation_file(path);
    ValidationReport vr = validate_presentation(p);
    Report rep;
    rep.command = "validate";
    rep.inputs = {{"presentation", path}};
    for (const auto& [name, pass] : vr.checks) rep.add(name, pass);
    for (const auto& issue : vr.issues) rep.add("issue[" + issue.check + "]", false, "", issue.detail);
    return emit(rep);
}

int run_hom(const std::string& xpath, const std::string& ypath) {
    Complex x = load_complex_file(xpath);
    Complex y = load_complex_file(ypath);
    Report rep;
    rep.command = "hom";
    rep.inputs = {{"X", xpath}, {"Y", ypath}};
    ValidationReport vx = validate_complex(x), vy = validate_complex(y);
    rep.add("X-valid-complex", vx.ok());
    rep.add("Y-valid-complex", vy.ok());
    if (vx.ok() && vy.ok()) {
        if (!(x.pres()->field == y.pres()->field))
            throw MalformedInput("complexes live over different fields");
        rep.add("hom-kb-dim", true, "", std::to_string(hom_kb_dim(x, y)));
    }
    return emit(rep);
}

int run_verify(const std::string& example, int W, const Field& field, int d) {
    Report rep;
    rep.command = "verify";
    rep.inputs = {{"example", example}, {"window", W}, {"field", field.describe()}};
    if (example == "dual-numbers") {
        PresPtr p = dual_numbers(field);
        rep.merge(verify_fact_lemma_dn(p, W), "lemma/");
        rep.merge(verify_triangles_dn(p, W), "triangles/");
        int ok = 0, total = 0;
        for (int n = -W + 1; n <= W; ++n)
            for (int m = n; m <= W; ++m) {
                ++total;
                if (verify_shift_delta(p, {n, m})) ++ok;
            }
        rep.add("shift-delta-conjugation", ok == total, std::to_string(total) + " instances",
                std::to_string(ok) + " ok");
    } else if (example == "cyclic") {
        rep.inputs["d"] = d;
        PresPtr p = cyclic(field, d);
        rep.merge(verify_fact_lemma_cyc(p, W), "lemma/");
        rep.merge(verify_triangles_cyc(p, W), "triangles/");
    } else {
        throw MalformedInput("unknown example '" + example + "'");
    }
    return emit(rep);
}

int run_center(const std::string& example, int W, const Field& field, int d, bool triangle,
               int nilpotency) {
    Report rep;
    rep.command = "center";
    rep.inputs = {{"example", example}, {"window", W}, {"field", field.describe()},
                  {"triangle", triangle}};
    PresPtr p;
    Window w;
    if (example == "dual-numbers") {
        p = dual_numbers(field);
        w = dn_window(p, W);
    } else if (example == "cyclic") {
        rep.inputs["d"] = d;
        p = cyclic(field, d);
        w = cyc_window(p, W);
    } else {
        throw MalformedInput("unknown example '" + example + "'");
    }
    WindowContext ctx(w);
    BlockConnectivity bc = block_connectivity(ctx);
    rep.add("window-objects", true, "", std::to_string(w.objects.size()));
    rep.add("hom-connected-components", true, "", std::to_string(bc.num_components));
    rep.add("non-degenerate-block", true, "", bc.non_degenerate ? "yes" : "no");
    if (!triangle) {
        rep.add("center-dim", true, "", std::to_string(solve_center(ctx).size()));
        return emit(rep);
    }
    ResIndReport rr = res_ind_check(ctx, p);
    rep.merge(rr.report, "res-ind/");
    rep.add("center-dim", true, "", std::to_string(rr.center_dim));
    rep.add("triangle-center-dim", true, "", std::to_string(rr.triangle_center_dim));
    rep.add("stalk-center-dim", true, "", std::to_string(rr.stalk_center_dim));
    rep.add("res-kernel-dim", true, "", std::to_string(rr.kernel.size()));
    if (nilpotency > 0)
        rep.merge(kernel_nilpotency_check(ctx, rr.kernel, nilpotency), "nilpotency/");
    return emit(rep);
}

int run_pseudoid_check(const std::string& path) {
    Json j = load_json_file(path);
    std::string example;
    try {
        example = j.at("example").get<std::string>();
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("malformed system: ") + e.what());
    }
    Report rep;
    rep.command = "pseudoid check";
    rep.inputs = {{"system", path}, {"example", example}};
    Json extra = Json::object();
    auto certify = [&](auto sys) {
        Report con = constraint_check(sys);
        rep.merge(con, "constraints/");
        if (!con.all_passed()) return;
        Certificate cert = trivialization_certificate(sys);
        rep.merge(cert.checks, "certificate/");
        extra["certificate"] = certificate_to_json(cert);
    };
    try {
        if (example == "dual_numbers")
            certify(dn_system_from_json(j));
        else if (example == "cyclic")
            certify(cyc_system_from_json(j));
        else
            throw MalformedInput("unknown example '" + example + "'");
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("malformed system: ") + e.what());
    }
    return emit(rep, extra);
}

int run_pseudoid_random(const std::string& example, int W, const Field& field, int d,
                        std::uint64_t seed) {
    Report rep;
    rep.command = "pseudoid random";
    rep.inputs = {{"example", example}, {"window", W}, {"field", field.describe()},
                  {"seed", seed}};
    Json extra = Json::object();
    auto certify = [&](auto sys) {
        extra["system"] = to_json(sys);
        rep.merge(constraint_check(sys), "constraints/");
        Certificate cert = trivialization_certificate(sys);
        rep.merge(cert.checks, "certificate/");
        extra["certificate"] = certificate_to_json(cert);
    };
    if (example == "dual-numbers") {
        certify(random_dn_system(field, W, seed));
    } else if (example == "cyclic") {
        rep.inputs["d"] = d;
        certify(random_cyc_system(field, d, W, seed));
    } else {
        throw MalformedInput("unknown example '" + example + "'");
    }
    return emit(rep, extra);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for bounded homotopy categories"};
    app.require_subcommand(1);

    std::string pres_path, xpath, ypath, system_path;
    std::string example = "dual-numbers", field_tag = "q";
    int W = 3, d = 3, nilpotency = 0;
    std::uint64_t seed = 0;
    bool triangle = false;

    auto* validate = app.add_subcommand("validate", "Validate a presentation file");
    validate->add_option("presentation", pres_path)->required();

    auto* hom = app.add_subcommand("hom", "Dimension of Hom in K^b between two complexes");
    hom->add_option("X", xpath)->required();
    hom->add_option("Y", ypath)->required();

    auto* verify = app.add_subcommand("verify", "Run the verification suite for an example");
    verify->require_subcommand(1);
    auto* vdn = verify->add_subcommand("dual-numbers");
    vdn->add_option("--window", W)->required();
    vdn->add_option("--field", field_tag);
    auto* vcy = verify->add_subcommand("cyclic");
    vcy->add_option("--d", d)->required();
    vcy->add_option("--window", W)->required();
    vcy->add_option("--field", field_tag);

    auto* center = app.add_subcommand("center", "Window center computations");
    center->add_option("--example", example)->required();
    center->add_option("--window", W)->required();
    center->add_option("--d", d);
    center->add_option("--field", field_tag);
    center->add_flag("--triangle", triangle);
    center->add_option("--nilpotency", nilpotency);

    auto* pseudoid = app.add_subcommand("pseudoid", "Scalar pseudo-identity pipeline");
    pseudoid->require_subcommand(1);
    auto* pcheck = pseudoid->add_subcommand("check");
    pcheck->add_option("--system", system_path)->required();
    auto* prandom = pseudoid->add_subcommand("random");
    prandom->add_option("--example", example)->required();
    prandom->add_option("--window", W)->required();
    prandom->add_option("--seed", seed)->required();
    prandom->add_option("--d", d);
    prandom->add_option("--field", field_tag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate) return run_validate(pres_path);
        if (*hom) return run_hom(xpath, ypath);
        if (*vdn) return run_verify("dual-numbers", W, parse_field_tag(field_tag), d);
        if (*vcy) return run_verify("cyclic", W, parse_field_tag(field_tag), d);
        if (*center) return run_center(example, W, parse_field_tag(field_tag), d, triangle, nilpotency);
        if (*pcheck) return run_pseudoid_check(system_path);
        if (*prandom) return run_pseudoid_random(example, W, parse_field_tag(field_tag), d, seed);
    } catch (const homcat::ConstraintViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
