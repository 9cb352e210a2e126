// hermsq: command-line front end.
// Exit codes: 0 confirmed / true / verified, 1 refuted / false / falsified, 2 input or resource error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hermsq/scenarios.hpp"

using namespace hermsq;

namespace {

const char* kFooter = R"(Scalars: integers, p/q, X, Y, z<i>_<j>_<l>, operators + - * / ^ with explicit '*',
parentheses. Example: "3*X^2-X*Y+1/2".

NC polynomials: letters x1, x2, ...; a '*' touching a letter or ')' is the star; juxtaposition
multiplies ("x1* x2 x1", "3 x1 + x1*", "(x1 x2)*"); a spaced '*' also multiplies.

Inputs that take JSON accept inline JSON or a file name. Put "--" before form entries that
start with "-" (hermsq qf weak-rep-one -- X Y -X).
  form         ["X", "Y", "X*Y"]
  gram         [["0", "1"], ["1", "0"]]
  algebra      {"base": "F" | {"quaternion": {"a": "-1", "b": "-1"}}, "n": 3,
                "involution": {"kind": "adjoint_diag", "q": ["X", "Y", "X*Y"]}}
               kinds: transpose, adjoint_diag (q), symplectic_standard, adjoint_skew (S),
                      quat_conjugation, int_u_conj (u), adjoint_hermitian (h)
  element      scalar (c*I) or n x n matrix; quaternion entries are ["x0","x1","x2","x3"]
  certificate  {"algebra": ..., "target": ..., "witnesses": [...]}
  weighted     {"algebra": ..., "target": ..., "weights": [...], "terms": {"01": [...]}}
  tensor       {"factors": [algebra, ...], "target": scalar, "witnesses": [[elem, ...], ...]}
  nc cert      {"g": "x1* x1", "h": "1", "n": 2, "type": "orthogonal", "weights": [],
                "terms": {"": ["x1"]}}
  matrices     [[["1","2"],["0","1"]], ...]

Scenarios: thm3.2 thm3.3 prop4.1 cor4.3 thm4.7 lemma3.1 ex-psd hall-identity

Exit codes: 0 confirmed/true/verified, 1 refuted/false/falsified, 2 input or resource error.
HERMSQ_MAX_DEGREE overrides the degree cap (default 6) of symbolic expansion.)";

struct Outcome {
    Json json;
    std::string text;
    int code = 0;
};

std::string read_text_or_file(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

Json read_json_arg(const std::string& arg) {
    std::error_code ec;
    bool file = std::filesystem::is_regular_file(arg, ec);
    return parse_json_text(read_text_or_file(arg), file ? arg : "argument");
}

/// Entries given as separate arguments, or one JSON array (inline or file).
Json form_arg(const std::vector<std::string>& args) {
    if (args.size() == 1) {
        std::string t = read_text_or_file(args[0]);
        auto first = t.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && t[first] == '[') return parse_json_text(t, "form");
    }
    Json a = Json::array();
    for (const auto& s : args) a.push_back(s);
    return a;
}

std::string entries_text(const Form& q) {
    std::string s = "<";
    for (std::size_t i = 0; i < q.dim(); ++i) s += (i ? ", " : "") + to_string(q[i]);
    return s + ">";
}

std::string matrix_text(const Json& m) {
    if (!m.is_array()) return m.is_string() ? m.get<std::string>() : m.dump();
    std::string s;
    for (const auto& row : m) {
        s += "  [";
        for (std::size_t c = 0; c < row.size(); ++c) s += (c ? ", " : "") + (row[c].is_string() ? row[c].get<std::string>() : row[c].dump());
        s += "]\n";
    }
    return s;
}

Outcome verdict(Json j, const std::string& label, bool value) {
    j["result"] = value;
    return {std::move(j), label + ": " + (value ? "true" : "false") + "\n", value ? 0 : 1};
}

// ---------------------------------------------------------------------------------------------

Outcome qf_diag(const std::string& input) {
    auto g = scalar_matrix_from_json(read_json_arg(input));
    if (!g.is_symmetric()) throw DomainError("Gram matrix is not symmetric");
    auto d = diagonalize(g);
    Json j;
    j["form"] = to_json(d.form);
    j["transform"] = to_json(d.transform);
    return {j, "form: " + entries_text(d.form) + "\ntransform:\n" + matrix_text(j["transform"]), 0};
}

Outcome qf_isotropy(const std::vector<std::string>& args) {
    auto q = rational_form_from_json(form_arg(args));
    bool iso = is_isotropic_Q(q);
    Json j;
    j["form"] = to_json(q);
    j["weakly_isotropic"] = is_weakly_isotropic_Q(q);
    auto o = verdict(j, "isotropic over Q", iso);
    o.text += std::string("weakly isotropic: ") + (j["weakly_isotropic"].get<bool>() ? "true" : "false") + "\n";
    return o;
}

Outcome qf_weak_rep_one(const std::vector<std::string>& args) {
    Form q = form_from_json(form_arg(args));
    auto w = weakly_represents_one(q);
    Json j;
    j["form"] = to_json(q);
    j["weak_representation"] = detail::to_json(w);
    if (w.represents) j["verified"] = verify_weak_representation(q, w);
    auto o = verdict(j, "weakly represents 1", w.represents);
    if (w.represents) {
        o.text += "multiplicity " + std::to_string(w.multiplicity) + ", vector";
        for (const auto& x : w.vector) o.text += " " + to_string(x);
        o.text += std::string("\nverified: ") + (j["verified"].get<bool>() ? "true" : "false") + "\n";
    }
    return o;
}

Outcome qf_signature(const std::vector<std::string>& args, const std::string& ordering) {
    Form q = form_from_json(form_arg(args));
    std::vector<MonomialOrdering> orders;
    if (ordering.empty()) {
        auto all = MonomialOrdering::all();
        orders.assign(all.begin(), all.end());
    } else {
        orders = {MonomialOrdering::parse(ordering)};
    }
    Json j;
    j["form"] = to_json(q);
    Json s = Json::object();
    std::string text;
    for (const auto& P : orders) {
        int v = signature(q, P);
        s[P.str()] = v;
        text += "signature at " + P.str() + ": " + std::to_string(v) + "\n";
    }
    j["signatures"] = std::move(s);
    return {j, text, 0};
}

// ---------------------------------------------------------------------------------------------

Outcome nc_eval_cmd(const std::string& poly, const std::string& matrices) {
    auto f = parse_nc(poly);
    auto s = matrices.empty() ? std::vector<Matrix<Rational>>{} : matrix_tuple_from_json(read_json_arg(matrices));
    auto v = nc_eval(f, s);
    Json j;
    j["polynomial"] = to_json(f);
    j["value"] = to_json(v);
    return {j, matrix_text(j["value"]), 0};
}

Outcome nc_identity_cmd(const std::string& poly, std::size_t n, const std::string& type) {
    auto f = parse_nc(poly);
    bool id = is_identity_mod_a(f, n, parse_involution_type(type), ExpansionCaps::from_environment());
    Json j;
    j["polynomial"] = to_json(f);
    j["n"] = n;
    j["type"] = type;
    return verdict(j, "identity for " + std::to_string(n) + "x" + std::to_string(n) + " (" + type + ")", id);
}

Outcome nc_central_cmd(const std::string& poly, std::size_t n, const std::string& type) {
    auto f = parse_nc(poly);
    GenericMatrixContext ctx(n, f.variable_count(), parse_involution_type(type), ExpansionCaps::from_environment());
    auto c = scalar_value(ctx.eval(f));
    bool ok = c && !c->is_zero();
    Json j;
    j["polynomial"] = to_json(f);
    j["n"] = n;
    j["type"] = type;
    if (c) j["scalar"] = to_string(*c);
    auto o = verdict(j, "central nonvanishing", ok);
    if (c) o.text += "scalar: " + to_string(*c) + "\n";
    return o;
}

Outcome nc_falsify_cmd(const std::string& poly, const FalsifyOptions& opt) {
    auto g = parse_nc(poly);
    auto r = psd_falsify(g, opt);
    Json j;
    j["polynomial"] = to_json(g);
    j["n"] = opt.n;
    j["trials"] = opt.trials;
    j["seed"] = opt.seed;
    j["bound"] = opt.bound;
    if (!r) {
        j["counterexample"] = nullptr;
        return {j, "no counterexample found in " + std::to_string(opt.trials) + " trials\n", 0};
    }
    j["counterexample"] = {{"trial", r->trial}, {"matrices", to_json(r->tuple)}, {"value", to_json(r->value)}};
    std::string text = "not positive semidefinite at trial " + std::to_string(r->trial) + "\n";
    for (std::size_t i = 0; i < r->tuple.size(); ++i)
        text += "x" + std::to_string(i + 1) + " =\n" + matrix_text(to_json(r->tuple[i]));
    text += "value =\n" + matrix_text(to_json(r->value));
    return {j, text, 1};
}

Outcome nc_verify_cert_cmd(const std::string& file) {
    auto c = positivstellensatz_from_json(read_json_arg(file));
    auto r = check_positivstellensatz(c, ExpansionCaps::from_environment());
    Json j;
    j["certificate"] = to_json(c);
    j["g_symmetric"] = r.g_symmetric;
    j["h_central_nonvanishing"] = r.h_central_nonvanishing;
    j["weights_symmetric"] = r.weight_symmetric;
    j["weights_central"] = r.weight_central;
    j["keys_valid"] = r.keys_valid;
    j["identity"] = r.identity;
    j["failures"] = r.failures;
    auto o = verdict(j, "certificate valid", r.valid());
    for (const auto& f : r.failures) o.text += "  " + f + "\n";
    return o;
}

// ---------------------------------------------------------------------------------------------

Outcome cert_verify_cmd(const std::string& file) {
    Json in = read_json_arg(file);
    Json j;
    bool ok = false;
    if (in.contains("factors")) {
        auto c = tensor_certificate_from_json(in);
        ok = verify_tensor(c);
        j["kind"] = "tensor";
    } else if (in.contains("weights")) {
        auto c = weighted_certificate_from_json(in);
        ok = verify_weighted(c);
        j["kind"] = "weighted";
    } else {
        auto c = hermsq_certificate_from_json(in);
        ok = verify_hermsq(c);
        j["kind"] = "hermitian_squares";
    }
    return verdict(j, j["kind"].get<std::string>() + " certificate verified", ok);
}

/// Reprints a document in canonical form after validating it against its schema.
Outcome format_cmd(const std::string& file) {
    Json in = read_json_arg(file);
    Json out;
    if (in.is_array()) {
        out = to_json(form_from_json(in));
    } else if (in.contains("g")) {
        out = to_json(positivstellensatz_from_json(in));
    } else if (in.contains("factors")) {
        out = to_json(tensor_certificate_from_json(in));
    } else if (in.contains("weights")) {
        out = to_json(weighted_certificate_from_json(in));
    } else if (in.contains("witnesses")) {
        out = to_json(hermsq_certificate_from_json(in));
    } else if (in.contains("scenario")) {
        out = to_json(scenario_result_from_json(in));
    } else {
        out = to_json(algebra_from_json(in));
    }
    return {out, dump_canonical(out), 0};
}

Outcome scenario_cmd(const std::string& name, const ScenarioOptions& opt) {
    auto r = run_scenario(name, opt);
    std::string text = r.scenario + ": " + (r.confirmed ? "CONFIRMED" : "REFUTED") + "\n  " + r.claim + "\n";
    for (const auto& c : r.checks)
        text += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
    return {to_json(r), text, r.confirmed ? 0 : 1};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quadratic forms, algebras with involution, and hermitian-square certificates"};
    app.footer(kFooter);
    app.require_subcommand(1);
    std::string output = "text";
    app.add_option("--output", output, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    std::function<Outcome()> action;
    bool document_output = false;  // format prints the document itself in both modes

    auto* qf = app.add_subcommand("qf", "Quadratic forms")->require_subcommand(1);
    std::string gram;
    auto* diag = qf->add_subcommand("diag", "Diagonalize a symmetric Gram matrix");
    diag->add_option("gram", gram, "Gram matrix (JSON or file)")->required();
    diag->callback([&] { action = [&] { return qf_diag(gram); }; });

    std::vector<std::string> entries;
    auto* iso = qf->add_subcommand("isotropy", "Isotropy of a diagonal form over Q (Hasse-Minkowski)");
    iso->add_option("entries", entries, "Entries, or one JSON array")->required();
    iso->callback([&] { action = [&] { return qf_isotropy(entries); }; });

    auto* wr = qf->add_subcommand("weak-rep-one", "Does some multiple of the form represent 1 over Q(X,Y)?");
    wr->add_option("entries", entries, "Monomial entries, or one JSON array")->required();
    wr->callback([&] { action = [&] { return qf_weak_rep_one(entries); }; });

    std::string ordering;
    auto* sig = qf->add_subcommand("signature", "Signature at monomial orderings of Q(X,Y)");
    sig->add_option("entries", entries, "Entries, or one JSON array")->required();
    sig->add_option("--ordering", ordering, "One of ++, +-, -+, -- (default: all four)");
    sig->callback([&] { action = [&] { return qf_signature(entries, ordering); }; });

    auto* nc = app.add_subcommand("nc", "Noncommutative polynomials")->require_subcommand(1);
    std::string poly, matrices, type = "orthogonal";
    std::size_t n = 2;
    auto* ev = nc->add_subcommand("eval", "Evaluate at rational matrices (x* -> transpose)");
    ev->add_option("polynomial", poly)->required();
    ev->add_option("--matrices", matrices, "Matrix tuple (JSON or file)")->required();
    ev->callback([&] { action = [&] { return nc_eval_cmd(poly, matrices); }; });

    auto* ident = nc->add_subcommand("identity", "Is the polynomial a *-identity of n x n matrices?");
    ident->add_option("polynomial", poly)->required();
    ident->add_option("--n", n)->capture_default_str();
    ident->add_option("--type", type)->check(CLI::IsMember({"orthogonal", "symplectic"}))->capture_default_str();
    ident->callback([&] { action = [&] { return nc_identity_cmd(poly, n, type); }; });

    auto* cen = nc->add_subcommand("central", "Is the polynomial central and nonvanishing on n x n matrices?");
    cen->add_option("polynomial", poly)->required();
    cen->add_option("--n", n)->capture_default_str();
    cen->add_option("--type", type)->check(CLI::IsMember({"orthogonal", "symplectic"}))->capture_default_str();
    cen->callback([&] { action = [&] { return nc_central_cmd(poly, n, type); }; });

    FalsifyOptions fopt;
    auto* fal = nc->add_subcommand("falsify", "Search random integer matrices for a non-PSD value");
    fal->add_option("polynomial", poly)->required();
    fal->add_option("--n", fopt.n)->capture_default_str();
    fal->add_option("--trials", fopt.trials)->capture_default_str();
    fal->add_option("--seed", fopt.seed)->capture_default_str();
    fal->add_option("--bound", fopt.bound, "Entries are integers in [-bound, bound]")->capture_default_str();
    fal->add_option("--threads", fopt.threads)->capture_default_str();
    fal->callback([&] { action = [&] { return nc_falsify_cmd(poly, fopt); }; });

    std::string file;
    auto* vc = nc->add_subcommand("verify-cert", "Verify a Positivstellensatz certificate");
    vc->add_option("file", file)->required();
    vc->callback([&] { action = [&] { return nc_verify_cert_cmd(file); }; });

    auto* cert = app.add_subcommand("cert", "Hermitian-square certificates")->require_subcommand(1);
    auto* cv = cert->add_subcommand("verify", "Verify a plain, weighted, or tensor certificate");
    cv->add_option("file", file)->required();
    cv->callback([&] { action = [&] { return cert_verify_cmd(file); }; });

    auto* fmt = app.add_subcommand("format", "Validate a JSON document and print it canonically");
    fmt->add_option("file", file)->required();
    fmt->callback([&] {
        document_output = true;
        action = [&] { return format_cmd(file); };
    });

    std::string scenario;
    ScenarioOptions sopt;
    auto* sc = app.add_subcommand("scenario", "Reproduce a named result");
    sc->add_option("name", scenario)->required();
    sc->add_option("--n", sopt.n, "Matrix size for thm4.7")->capture_default_str();
    sc->add_option("--seed", sopt.seed, "Seed for thm4.7")->capture_default_str();
    sc->callback([&] { action = [&] { return scenario_cmd(scenario, sopt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Outcome o = action();
        if (output == "json") {
            if (!document_output && o.json.is_object() && !o.json.contains("exit_code")) o.json["exit_code"] = o.code;
            std::cout << dump_canonical(o.json);
        } else {
            std::cout << o.text;
        }
        return o.code;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
}
