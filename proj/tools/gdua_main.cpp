// Command-line front end: normal forms, invariants, and automorphism-group
// classification for generalized down-up algebras L(f, r, s, gamma).

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gdua/autgroup.hpp"
#include "gdua/invariants.hpp"
#include "gdua/jsonio.hpp"
#include "gdua/text.hpp"

using namespace gdua;

namespace {

struct Session {
    std::optional<Presentation> pres;
    long long bound = 64;
    long long oracle_degree = 4;
    bool json = false;
};

int exit_code_for(Errc kind) {
    switch (kind) {
    case Errc::syntax_error:
    case Errc::config_error:
        return 2;
    case Errc::undecided:
        return 3;
    default:
        return 1;
    }
}

const Presentation& need_pres(const Session& s) {
    if (!s.pres)
        throw Error(Errc::config_error, "this command needs a presentation (--preset '{...}')");
    return *s.pres;
}

std::string read_expr_arg(const std::string& arg) {
    if (arg != "-") return arg;
    std::string all, line;
    while (std::getline(std::cin, line)) all += line + "\n";
    return all;
}

void emit(const Session& s, const Json& j, const std::string& human) {
    if (s.json)
        std::cout << j.dump() << "\n";
    else
        std::cout << human << "\n";
}

std::string poly_or_dash(const std::optional<Poly>& p) {
    return p ? to_string(*p) : std::string("-");
}

// --- commands -----------------------------------------------------------------

void cmd_nf(const Session& s, const std::string& expr) {
    Element e = parse_element(need_pres(s), read_expr_arg(expr));
    Json j = element_to_json(e);
    j["text"] = to_string(e);
    emit(s, j, to_string(e));
}

void cmd_mul(const Session& s, const std::string& a, const std::string& b) {
    const Presentation& pres = need_pres(s);
    Element e =
        mul(pres, parse_element(pres, read_expr_arg(a)), parse_element(pres, read_expr_arg(b)));
    Json j = element_to_json(e);
    j["text"] = to_string(e);
    emit(s, j, to_string(e));
}

void cmd_conformal(const Session& s) {
    ConformalData cd = conformal(need_pres(s));
    Json data{{"normalized_f", poly_to_json(cd.normalized_f)},
              {"gamma_reduced", cd.gamma_reduced}};
    Json witness = Json::object();
    if (cd.conformal) {
        data["g"] = poly_to_json(*cd.g);
        witness["k"] = element_to_json(*cd.k_def);
    }
    Json j{{"case", cd.conformal ? "conformal" : "not_conformal"},
           {"data", data},
           {"witness", witness}};
    std::string human = std::string("conformal: ") + (cd.conformal ? "yes" : "no") +
                        "\nnormalized_f: " + to_string(cd.normalized_f) +
                        "\ngamma_reduced: " + (cd.gamma_reduced ? "yes" : "no");
    if (cd.conformal)
        human += "\ng: " + poly_or_dash(cd.g) + "\nk: " + to_string(*cd.k_def);
    emit(s, j, human);
}

void cmd_invariants(const Session& s) {
    const Presentation& pres = need_pres(s);
    auto te = tau_epsilon(pres, s.bound);
    if (!te) throw Error(Errc::undecided, "tau/epsilon undecided within the search bound");
    Poly f0 = gamma_reduce(pres).reduced.f;
    std::optional<long long> rho0;
    if (!f0.is_zero()) rho0 = rho(f0);
    Json j{{"tau", te->tau}, {"epsilon", te->epsilon}};
    j["rho"] = rho0 ? Json(*rho0) : Json(nullptr);
    std::string human = "tau = " + std::to_string(te->tau) +
                        ", epsilon = " + std::to_string(te->epsilon) +
                        ", rho = " + (rho0 ? std::to_string(*rho0) : std::string("-"));
    emit(s, j, human);
}

void cmd_center(const Session& s) {
    CenterDescription cd = center(need_pres(s), s.bound);
    bool scan_ok = center_scan_consistent(need_pres(s), s.oracle_degree, s.bound);
    if (!scan_ok)
        throw Error(Errc::internal, "center disagrees with the exhaustive monomial scan");
    bool poly_case = cd.tag == CenterTag::polynomial_in_generator;
    Json witness = Json{{"scan_degree", s.oracle_degree}};
    if (poly_case) witness["generator"] = element_to_json(*cd.generator);
    Json j{{"case", poly_case ? "polynomial_in_generator" : "scalars_only"},
           {"data", Json{{"tau", cd.te.tau}, {"epsilon", cd.te.epsilon}}},
           {"witness", witness}};
    std::string human = poly_case
                            ? "center: K[z] with z = " + to_string(*cd.generator)
                            : std::string("center: K (scalars only)");
    human += "\nscan: consistent up to degree " + std::to_string(s.oracle_degree);
    emit(s, j, human);
}

void cmd_is_normal(const Session& s, const std::string& expr) {
    const Presentation& pres = need_pres(s);
    Element t = parse_element(pres, read_expr_arg(expr));
    NormalityResult nr = is_normal(pres, t, s.bound);
    Json j;
    std::string human;
    if (nr.normal) {
        j = Json{{"case", "normal"},
                 {"data", Json{{"lambda", scalar_to_json(*nr.lambda)},
                               {"mu", scalar_to_json(*nr.mu)}}},
                 {"witness", Json::object()}};
        human = "normal: yes, lambda = " + to_string(*nr.lambda) + ", mu = " + to_string(*nr.mu);
    } else {
        j = Json{{"case", "not_normal"},
                 {"data", Json::object()},
                 {"witness", Json{{"kind", nr.witness_kind}, {"detail", nr.witness_detail}}}};
        human = "normal: no (" + nr.witness_kind + ": " + nr.witness_detail + ")";
    }
    emit(s, j, human);
}

std::string group_human(const GroupDescription& desc) {
    std::string human = "case (" + desc.clause + "): " + desc.symbolic_group +
                        "; tau = " + std::to_string(desc.te.tau) +
                        ", epsilon = " + std::to_string(desc.te.epsilon) +
                        ", rho = " + (desc.rho ? std::to_string(*desc.rho) : std::string("-"));
    for (const auto& g : desc.generators) {
        human += "\ngenerator " + g.kind;
        if (!g.params.empty()) {
            human += "(";
            for (size_t i = 0; i < g.params.size(); ++i) human += (i ? "," : "") + g.params[i];
            human += ")";
        }
        if (!g.constraint.empty()) human += ": " + g.constraint;
    }
    if (desc.externally_justified)
        human += "\nnote: case rests on externally cited prime-ideal results";
    return human;
}

void cmd_aut_classify(const Session& s) {
    GroupDescription desc = classify_aut_group(need_pres(s), s.bound);
    emit(s, group_description_to_json(desc), group_human(desc));
}

Automorphism make_from_schema(const Session& s, const std::string& schema,
                              const std::vector<Scalar>& params) {
    const Presentation& pres = need_pres(s);
    if (schema == "torus") return make_torus(pres, params, s.bound);
    if (schema == "psi-plus") {
        if (params.size() != 4)
            throw Error(Errc::config_error, "psi-plus takes (mu, mu', nu, eta)");
        return make_psi_plus(pres, params[0], params[1], params[2], params[3], s.bound);
    }
    if (schema == "psi-minus") {
        if (params.size() != 2) throw Error(Errc::config_error, "psi-minus takes (mu, nu)");
        return make_psi_minus(pres, params[0], params[1], s.bound);
    }
    if (schema == "cyclic") {
        if (!params.empty()) throw Error(Errc::config_error, "cyclic takes no parameters");
        return make_cyclic_phi(pres, s.bound);
    }
    throw Error(Errc::config_error,
                "unknown schema '" + schema + "' (torus|psi-plus|psi-minus|cyclic)");
}

std::string automorphism_human(const Automorphism& a) {
    return a.label + "\nd -> " + to_string(a.images.d_img) + "\nu -> " + to_string(a.images.u_img) +
           "\nh -> " + to_string(a.images.h_img);
}

void cmd_aut_make(const Session& s, const std::string& schema, const std::vector<std::string>& raw) {
    std::vector<Scalar> params;
    for (const auto& p : raw) params.push_back(parse_scalar(p));
    Automorphism a = make_from_schema(s, schema, params);
    emit(s, automorphism_to_json(a), automorphism_human(a));
}

void cmd_aut_apply(const Session& s, const std::string& schema, std::vector<std::string> raw) {
    if (raw.empty()) throw Error(Errc::config_error, "aut-apply needs an expression argument");
    std::string expr = raw.back();
    raw.pop_back();
    std::vector<Scalar> params;
    for (const auto& p : raw) params.push_back(parse_scalar(p));
    Automorphism a = make_from_schema(s, schema, params);
    Element x = parse_element(need_pres(s), read_expr_arg(expr));
    Element y = apply(a, x);
    Json j = element_to_json(y);
    j["text"] = to_string(y);
    emit(s, j, to_string(y));
}

int cmd_aut_check(const Session& s, const std::string& de, const std::string& ue,
                  const std::string& he) {
    const Presentation& pres = need_pres(s);
    MorphismImages images{parse_element(pres, read_expr_arg(de)),
                          parse_element(pres, read_expr_arg(ue)),
                          parse_element(pres, read_expr_arg(he))};
    MorphismCheck chk = check_morphism(pres, pres, images);
    if (chk.ok) {
        emit(s, Json{{"case", "morphism"}, {"data", Json::object()}, {"witness", Json::object()}},
             "morphism: yes");
        return 0;
    }
    int which = 0;
    for (int i = 0; i < 3; ++i)
        if (!chk.residuals[i].is_zero()) {
            which = i + 1;
            break;
        }
    const Element& res = *chk.witness();
    emit(s,
         Json{{"case", "not_morphism"},
              {"data", Json{{"relation", which}}},
              {"witness", Json{{"residual", element_to_json(res)}, {"text", to_string(res)}}}},
         "morphism: no\nresidual (relation " + std::to_string(which) + "): " + to_string(res));
    return 1;
}

void cmd_downup(const Session& s, const std::string& a, const std::string& b,
                const std::string& g) {
    GroupDescription desc = classify_downup(parse_scalar(a), parse_scalar(b), parse_scalar(g),
                                            s.bound);
    Json j = group_description_to_json(desc);
    j["r"] = to_string(desc.pres.r);
    j["s"] = to_string(desc.pres.s);
    std::string human = group_human(desc) + "\nroots: r = " + to_string(desc.pres.r) +
                        ", s = " + to_string(desc.pres.s);
    emit(s, j, human);
}

} // namespace

int main(int argc, char** argv) {
    bool json_mode = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--json") json_mode = true;

    CLI::App app{"exact computation in generalized down-up algebras L(f, r, s, gamma)"};
    app.require_subcommand(1);
    app.fallthrough(true);

    Session session;
    std::string preset;
    app.add_option("--preset", preset,
                   "presentation as JSON: {\"f\":[...],\"r\":\"...\",\"s\":\"...\",\"gamma\":\"...\"}");
    app.add_option("--bound", session.bound, "search bound for multiplicative dependence");
    app.add_option("--oracle-degree", session.oracle_degree, "degree bound for brute-force scans");
    app.add_flag("--json", session.json, "emit JSON on stdout");

    std::string expr1, expr2, expr3, schema;
    std::vector<std::string> rest;

    auto* c_nf = app.add_subcommand("nf", "normal form of an expression");
    c_nf->add_option("expr", expr1)->required();
    auto* c_mul = app.add_subcommand("mul", "product of two expressions");
    c_mul->add_option("lhs", expr1)->required();
    c_mul->add_option("rhs", expr2)->required();
    auto* c_conf = app.add_subcommand("conformal", "conformality report");
    auto* c_inv = app.add_subcommand("invariants", "tau, epsilon, rho report");
    auto* c_center = app.add_subcommand("center", "center of L");
    auto* c_isn = app.add_subcommand("is-normal", "normality test with eigenvalue witnesses");
    c_isn->add_option("expr", expr1)->required();
    auto* c_cls = app.add_subcommand("aut-classify", "automorphism group classification");
    auto* c_make = app.add_subcommand("aut-make", "construct a verified automorphism");
    c_make->add_option("schema", schema)->required();
    c_make->add_option("params", rest);
    auto* c_apply = app.add_subcommand("aut-apply", "apply an automorphism to an expression");
    c_apply->add_option("schema", schema)->required();
    c_apply->add_option("args", rest, "parameters followed by the expression");
    auto* c_check = app.add_subcommand("aut-check", "verify generator images define a morphism");
    c_check->add_option("d_img", expr1)->required();
    c_check->add_option("u_img", expr2)->required();
    c_check->add_option("h_img", expr3)->required();
    auto* c_du = app.add_subcommand("downup", "down-up algebra A(alpha, beta, gamma) classification");
    c_du->add_option("alpha", expr1)->required();
    c_du->add_option("beta", expr2)->required();
    c_du->add_option("gamma", expr3)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        if (json_mode)
            std::cout << Json{{"error", Json{{"kind", "ConfigError"}, {"message", e.what()}}}}.dump()
                      << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (session.bound <= 0 || session.oracle_degree <= 0)
            throw Error(Errc::config_error, "--bound and --oracle-degree must be positive");
        if (!preset.empty()) {
            Json j = Json::parse(preset, nullptr, false);
            if (j.is_discarded())
                throw Error(Errc::config_error, "--preset is not valid JSON");
            session.pres = presentation_from_json(j);
        }
        if (c_nf->parsed()) cmd_nf(session, expr1);
        else if (c_mul->parsed()) cmd_mul(session, expr1, expr2);
        else if (c_conf->parsed()) cmd_conformal(session);
        else if (c_inv->parsed()) cmd_invariants(session);
        else if (c_center->parsed()) cmd_center(session);
        else if (c_isn->parsed()) cmd_is_normal(session, expr1);
        else if (c_cls->parsed()) cmd_aut_classify(session);
        else if (c_make->parsed()) cmd_aut_make(session, schema, rest);
        else if (c_apply->parsed()) cmd_aut_apply(session, schema, rest);
        else if (c_check->parsed()) return cmd_aut_check(session, expr1, expr2, expr3);
        else if (c_du->parsed()) cmd_downup(session, expr1, expr2, expr3);
        return 0;
    } catch (const Error& e) {
        if (session.json || json_mode)
            std::cout << Json{{"error", Json{{"kind", e.kind_name()}, {"message", e.what()}}}}.dump()
                      << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
