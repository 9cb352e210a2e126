#pragma once

// Named reproductions. Each scenario recomputes a claim from hard-coded data and reports every
// sub-check; `confirmed` is the conjunction of the checks.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hermsq/json_io.hpp"

namespace hermsq {

struct ScenarioCheck {
    std::string name;
    bool pass = false;
    std::string detail;

    friend bool operator==(const ScenarioCheck&, const ScenarioCheck&) = default;
};

struct ScenarioResult {
    std::string scenario;
    std::string claim;
    bool confirmed = false;
    std::vector<ScenarioCheck> checks;
    Json data = Json::object();
    std::map<std::string, double> timings_ms;

    friend bool operator==(const ScenarioResult&, const ScenarioResult&) = default;
};

struct ScenarioOptions {
    std::size_t n = 6;
    std::uint64_t seed = 1;
};

inline Json to_json(const ScenarioResult& r) {
    Json j;
    j["scenario"] = r.scenario;
    j["claim"] = r.claim;
    j["confirmed"] = r.confirmed;
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    j["data"] = r.data;
    Json t = Json::object();
    for (const auto& [k, v] : r.timings_ms) t[k] = v;
    j["timings_ms"] = std::move(t);
    return j;
}

inline ScenarioResult scenario_result_from_json(const Json& j, const std::string& path = "") {
    using detail::child;
    using detail::field;
    ScenarioResult r;
    r.scenario = detail::string_value(field(j, "scenario", path), child(path, "scenario"));
    r.claim = detail::string_value(field(j, "claim", path), child(path, "claim"));
    const Json& conf = field(j, "confirmed", path);
    if (!conf.is_boolean()) throw SchemaError(child(path, "confirmed"), "expected a boolean");
    r.confirmed = conf.get<bool>();
    const Json& checks = detail::array(field(j, "checks", path), child(path, "checks"));
    for (std::size_t i = 0; i < checks.size(); ++i) {
        std::string cp = child(child(path, "checks"), i);
        const Json& pass = field(checks[i], "pass", cp);
        if (!pass.is_boolean()) throw SchemaError(child(cp, "pass"), "expected a boolean");
        r.checks.push_back({detail::string_value(field(checks[i], "name", cp), child(cp, "name")), pass.get<bool>(),
                            detail::string_value(field(checks[i], "detail", cp), child(cp, "detail"))});
    }
    r.data = field(j, "data", path);
    const Json& t = field(j, "timings_ms", path);
    if (!t.is_object()) throw SchemaError(child(path, "timings_ms"), "expected an object");
    for (const auto& [k, v] : t.items()) {
        if (!v.is_number()) throw SchemaError(child(child(path, "timings_ms"), k), "expected a number");
        r.timings_ms[k] = v.get<double>();
    }
    return r;
}

namespace detail {

class ScenarioBuilder {
  public:
    ScenarioBuilder(std::string name, std::string claim) {
        r_.scenario = std::move(name);
        r_.claim = std::move(claim);
    }

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        r_.checks.push_back({name, pass, detail});
    }

    Json& data() { return r_.data; }

    template <class F>
    auto timed(const std::string& label, F&& f) {
        auto t0 = std::chrono::steady_clock::now();
        auto out = f();
        r_.timings_ms[label] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return out;
    }

    ScenarioResult finish() {
        r_.confirmed = !r_.checks.empty();
        for (const auto& c : r_.checks) r_.confirmed = r_.confirmed && c.pass;
        return std::move(r_);
    }

  private:
    ScenarioResult r_;
};

inline std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

inline std::string ints(const std::vector<int>& v) {
    std::vector<std::string> s;
    for (int x : v) s.push_back(std::to_string(x));
    return "(" + join(s) + ")";
}

inline std::string class_name(const SquareClass& c) {
    RationalFunction f = c.to_function();
    return to_string(f);
}

inline std::vector<std::string> class_names(const Form& q) {
    std::vector<std::string> out;
    for (const auto& c : square_classes(q)) out.push_back(class_name(c));
    return out;
}

inline Json to_json(const WeakRepresentation& w) {
    Json j;
    j["represents"] = w.represents;
    if (w.represents) {
        j["multiplicity"] = w.multiplicity;
        Json v = Json::array();
        for (const auto& x : w.vector) v.push_back(hermsq::to_json(x));
        j["vector"] = std::move(v);
    }
    return j;
}

inline Json report_json(const CounterexampleReport& r) {
    Json j;
    j["algebra"] = hermsq::to_json(*r.algebra);
    j["element"] = hermsq::to_json(r.element);
    j["positivity_witnesses"] = elems_to_json(r.positivity_witnesses);
    j["positivity_value"] = hermsq::to_json(r.positivity_value);
    j["trace_form"] = hermsq::to_json(r.trace_form);
    j["trace_form_square_classes"] = class_names(r.trace_form);
    Json sig = Json::object();
    auto all = MonomialOrdering::all();
    for (std::size_t i = 0; i < all.size(); ++i) sig[all[i].str()] = r.signatures[i];
    j["signatures"] = std::move(sig);
    j["entry33_form"] = hermsq::to_json(r.entry33_form);
    j["reduced_form"] = hermsq::to_json(r.reduced_form);
    j["weak_representation"] = to_json(r.weak_rep);
    j["verdict"] = r.verdict;
    return j;
}

inline Polynomial zeta(unsigned i, unsigned j, unsigned l) { return Polynomial(Var::zeta(i, j, l)); }

// Sum of squares of the four coordinates of a symbolic quaternion entry (norm form of (-1,-1)).
inline Polynomial norm_expression(unsigned i, unsigned j) {
    Polynomial s;
    for (unsigned c = 1; c <= 4; ++c) s += zeta(i, j, c) * zeta(i, j, c);
    return s;
}

inline void counterexample_checks(ScenarioBuilder& b, const CounterexampleReport& r, const std::vector<int>& sig) {
    b.check("element is symmetric", r.element_symmetric);
    b.check("signatures at (++,+-,-+,--)", r.signatures == sig, ints(r.signatures) + " expected " + ints(sig));
    b.check("definite signature attained", r.definite_attained);
    b.check("positivity witness: sum Trd(sigma(b)b) = alpha*beta", r.positivity_verified,
            to_string(r.positivity_value));
    b.check("obstruction form does not weakly represent 1", !r.weak_rep.represents,
            "form " + join([&] {
                std::vector<std::string> v;
                for (const auto& e : r.reduced_form.entries()) v.push_back(to_string(e));
                return v;
            }()));
    b.check("verdict: totally positive, not a sum of hermitian squares", r.verdict);
}

inline Matrix<RationalFunction> random_skew(std::size_t n, std::uint64_t seed, int bound = 5) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> dist(-bound, bound);
    for (;;) {
        Matrix<RationalFunction> S(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                RationalFunction v(dist(rng));
                S(i, j) = v;
                S(j, i) = -v;
            }
        if (!determinant(S).is_zero()) return S;
    }
}

}  // namespace detail

using detail::random_skew;

inline ScenarioResult scenario_split_counterexample(const ScenarioOptions&) {
    detail::ScenarioBuilder b("thm3.2", "XY is totally positive in (M_3(F), ad_<X,Y,XY>) but not a sum of hermitian squares");
    RationalFunction X = RationalFunction::x(), Y = RationalFunction::y();
    auto r = b.timed("pipeline", [&] { return counterexample_pipeline(X, Y); });
    const Algebra& A = *r.algebra;
    auto classes = detail::class_names(r.trace_form);
    std::vector<std::string> expected{"1", "1", "1", "X", "X", "Y", "Y", "X*Y", "X*Y"};
    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    b.check("trace form square classes {1,1,1,X,X,Y,Y,XY,XY}", sorted(classes) == sorted(expected),
            detail::join(classes));
    AlgElem bw = A.unit(0, 1, Quat(X));
    RationalFunction t = A.reduced_trace(A.hermitian_square(bw));
    b.check("Trd(sigma(b)b) = XY for b = X*E12", t == X * Y, to_string(t));
    AlgElem a = symbolic_element(A, 1);
    RationalFunction e33 = entry_33_constraint(A, {a});
    Polynomial expect = Polynomial::y() * detail::zeta(1, 3, 1).pow(2) + Polynomial::x() * detail::zeta(2, 3, 1).pow(2) +
                        detail::zeta(3, 3, 1).pow(2);
    b.check("(3,3) entry = Y*a13^2 + X*a23^2 + a33^2", e33 == RationalFunction(expect), to_string(e33));
    detail::counterexample_checks(b, r, {9, 1, 1, 1});
    b.data() = detail::report_json(r);
    return b.finish();
}

inline ScenarioResult scenario_quaternion_counterexample(const ScenarioOptions&) {
    detail::ScenarioBuilder b("thm3.3",
                              "XY is totally positive in (M_3(H), ad_h), H = (-1,-1), h = <X,Y,XY>, but not a sum of "
                              "hermitian squares");
    RationalFunction X = RationalFunction::x(), Y = RationalFunction::y();
    auto H = make_quaternion_algebra(-1, -1);
    auto r = b.timed("pipeline", [&] { return counterexample_pipeline(X, Y, H); });
    const Algebra& A = *r.algebra;
    AlgElem a = symbolic_element(A, 1);
    RationalFunction e33 = entry_33_constraint(A, {a});
    Polynomial expect = Polynomial::y() * detail::norm_expression(1, 3) +
                        Polynomial::x() * detail::norm_expression(2, 3) + detail::norm_expression(3, 3);
    b.check("(3,3) entry = Y*N(a13) + X*N(a23) + N(a33)", e33 == RationalFunction(expect), to_string(e33));
    Algebra Hg(H, 1, InvolutionSpec::quat_conjugation());
    Form tg = diagonalize(Hg.trace_form()).form;
    RationalForm expected = tensor(RationalForm({2}), RationalForm({1, 1, 1, 1}));
    b.check("trace form of (H, conjugation) = <2> x N_H = <2,2,2,2>",
            isometric_Q(to_rational_form(tg), expected) && to_rational_form(tg).entries() == expected.entries(),
            detail::join([&] {
                std::vector<std::string> v;
                for (const auto& e : tg.entries()) v.push_back(to_string(e));
                return v;
            }()));
    detail::counterexample_checks(b, r, {36, 4, 4, 4});
    b.data() = detail::report_json(r);
    b.data()["quaternion_trace_form"] = to_json(tg);
    return b.finish();
}

inline ScenarioResult scenario_entry_certificates(const ScenarioOptions&) {
    detail::ScenarioBuilder b("prop4.1", "each entry of a diagonalised trace form of a quaternion algebra with "
                                         "orthogonal or symplectic involution is a sum of hermitian squares");
    struct Case {
        std::string name;
        QuaternionAlgebraPtr H;
        InvolutionSpec sigma;
    };
    auto H11 = make_quaternion_algebra(-1, -1), H13 = make_quaternion_algebra(-1, -3);
    std::vector<Case> cases{{"(-1,-1) conjugation", H11, InvolutionSpec::quat_conjugation()},
                            {"(-1,-3) conjugation", H13, InvolutionSpec::quat_conjugation()},
                            {"(-1,-1) Int(i) conjugation", H11, InvolutionSpec::int_u_conj(Quat::i(H11))}};
    Json cj = Json::array();
    for (const auto& c : cases) {
        auto certs = prop41_certificates(c.H, c.sigma);
        bool all = true;
        std::vector<Rational> entries;
        Json ej = Json::array();
        for (const auto& e : certs) {
            bool ok = verify_hermsq(e.certificate);
            all = all && ok;
            entries.push_back(e.entry.constant_value());
            ej.push_back({{"entry", to_json(e.entry)}, {"verified", ok}, {"certificate", to_json(e.certificate)}});
        }
        Algebra A(c.H, 1, c.sigma);
        RationalForm tf = to_rational_form(diagonalize(A.trace_form()).form);
        RationalForm ef(entries);
        b.check(c.name + ": every entry certificate verifies", all);
        b.check(c.name + ": entries match the trace form", isometric_Q(ef, tf),
                detail::join([&] {
                    std::vector<std::string> v;
                    for (const auto& e : entries) v.push_back(e.get_str());
                    return v;
                }()));
        cj.push_back({{"case", c.name}, {"algebra", to_json(A)}, {"trace_form", to_json(tf)}, {"entries", ej}});
    }
    {
        // symplectic entries are exactly <2> x <1,-a,-b,ab>
        auto certs = prop41_certificates(H13, InvolutionSpec::quat_conjugation());
        std::vector<RationalFunction> got, want{2, 2, 6, 6};
        for (const auto& e : certs) got.push_back(e.entry);
        b.check("(-1,-3) conjugation: entries = <2> x <1,-a,-b,ab>", got == want);
    }
    b.data()["cases"] = std::move(cj);
    return b.finish();
}

inline ScenarioResult scenario_weighted_rewrite(const ScenarioOptions&) {
    detail::ScenarioBuilder b("cor4.3", "tensor products of hermitian-square certificates of quaternion algebras "
                                        "are hermitian-square certificates; weighted certificates rewrite to pure ones");
    auto H11 = make_quaternion_algebra(-1, -1), H13 = make_quaternion_algebra(-1, -3);
    auto c1 = prop41_certificates(H11, InvolutionSpec::quat_conjugation())[1].certificate;
    auto c2 = prop41_certificates(H13, InvolutionSpec::quat_conjugation())[2].certificate;
    auto c3 = prop41_certificates(H11, InvolutionSpec::int_u_conj(Quat::i(H11)))[1].certificate;
    auto two = tensor_chain({c1, c2});
    auto three = tensor_chain({c1, c2, c3});
    b.check("two-factor tensor certificate verifies", verify_tensor(two),
            "target " + to_string(two.target) + ", " + std::to_string(two.witnesses.size()) + " witnesses");
    b.check("three-factor tensor certificate verifies", verify_tensor(three),
            "target " + to_string(three.target) + ", " + std::to_string(three.witnesses.size()) + " witnesses");
    PureTensor bad = three.witnesses.front();
    bad[0](0, 0) = bad[0](0, 0) + Quat(1);
    TensorCertificate corrupted = three;
    corrupted.witnesses.front() = bad;
    b.check("corrupted tensor certificate is rejected", !verify_tensor(corrupted));

    // weights <2,2,2,2> of the trace form of (H, conjugation), each 2 = gamma(1)1 + gamma(1)1
    Algebra A(H11, 1, InvolutionSpec::quat_conjugation());
    Form tf = diagonalize(A.trace_form()).form;
    WeightedCertificate wc{A, A.scalar(8), {}, {}};
    for (const auto& e : tf.entries()) wc.weights.push_back(A.scalar(e));
    wc.terms["1000"] = {A.one()};
    wc.terms["0100"] = {AlgElem::scalar(1, Quat::i(H11))};
    wc.terms["0011"] = {AlgElem::scalar(1, Quat::j(H11))};
    std::map<std::size_t, HermSqCertificate> wcerts;
    for (std::size_t i = 0; i < wc.weights.size(); ++i)
        wcerts.emplace(i, HermSqCertificate{A, wc.weights[i], {A.one(), A.one()}});
    b.check("weighted certificate verifies", verify_weighted(wc));
    auto pure = rewrite_weighted_to_pure(wc, wcerts);
    b.check("rewritten pure certificate verifies", verify_hermsq(pure),
            std::to_string(pure.witnesses.size()) + " witnesses");
    b.data()["two_factor"] = to_json(two);
    b.data()["three_factor"] = to_json(three);
    b.data()["weighted"] = to_json(wc);
    b.data()["rewritten"] = to_json(pure);
    return b.finish();
}

inline ScenarioResult scenario_symplectic_minus_one(const ScenarioOptions& opt) {
    detail::ScenarioBuilder b("thm4.7", "-1 is a hermitian square for the adjoint involution of a nonsingular "
                                        "skew-symmetric matrix");
    if (opt.n == 0 || opt.n % 2 != 0) throw DomainError("--n must be a positive even integer");
    auto S = random_skew(opt.n, opt.seed);
    auto r = b.timed("construction", [&] { return symplectic_minus_one(S); });
    b.check("P^t S P = B", r.P.transpose() * S * r.P == r.B);
    b.check("X^t B X = B^-1", r.X.transpose() * r.B * r.X == inverse(r.B));
    b.check("Y^t S Y = S^-1", r.Y.transpose() * S * r.Y == inverse(S));
    b.check("sigma(SY) SY = -I", verify_hermsq(r.certificate));
    b.data()["n"] = opt.n;
    b.data()["seed"] = opt.seed;
    b.data()["S"] = to_json(S);
    b.data()["P"] = to_json(r.P);
    b.data()["Y"] = to_json(r.Y);
    b.data()["certificate"] = to_json(r.certificate);
    return b.finish();
}

inline ScenarioResult scenario_weak_isotropy(const ScenarioOptions&) {
    detail::ScenarioBuilder b("lemma3.1", "<X,Y,XY> does not weakly represent 1 over Q(X,Y)");
    RationalFunction X = RationalFunction::x(), Y = RationalFunction::y();
    Form q({X, Y, X * Y});
    auto w = b.timed("weak_representation", [&] { return weakly_represents_one(q); });
    b.check("weakly_represents_one(<X,Y,XY>) = false", !w.represents);
    Form phi = perp(Form({RationalFunction(1)}), negate(q));
    auto [even, odd] = springer_residues(phi, Var::y());
    Json res = Json::object();
    bool all_definite = true;
    for (auto [name, f] : {std::pair<const char*, Form>{"Y-even", even}, {"Y-odd", odd}}) {
        auto [e2, o2] = springer_residues(f, Var::x());
        for (auto [sub, g] : {std::pair<const char*, Form>{"X-even", e2}, {"X-odd", o2}}) {
            res[std::string(name) + "," + sub] = to_json(g);
            auto rq = to_rational_form(g);
            if (rq.dim() > 0) all_definite = all_definite && std::abs(signature(rq)) == static_cast<int>(rq.dim());
        }
    }
    b.check("residue forms of <1> + <-X,-Y,-XY> are definite", all_definite);
    b.data()["form"] = to_json(q);
    b.data()["weak_representation"] = detail::to_json(w);
    b.data()["residues"] = std::move(res);
    return b.finish();
}

inline ScenarioResult scenario_psd(const ScenarioOptions&) {
    detail::ScenarioBuilder b("ex-psd", "for (M_n(F), transpose) every ordering is a sigma-ordering and positive "
                                        "semidefinite matrices are totally positive");
    Algebra A(2, InvolutionSpec::transpose());
    GramForm g = A.trace_form();
    b.check("trace form is the identity of size 4", g == GramForm::identity(4));
    b.check("all four monomial orderings are sigma-orderings", sigma_orderings(A).size() == 4);
    Matrix<Rational> pos{{2, 1}, {1, 2}}, neg{{1, 2}, {2, 1}};
    b.check("[[2,1],[1,2]] is positive semidefinite", psd_symmetric_rational(pos));
    auto cert = psd_certificate(pos);
    b.check("[[2,1],[1,2]] is a sum of hermitian squares", verify_hermsq(cert),
            std::to_string(cert.witnesses.size()) + " witnesses");
    b.check("[[1,2],[2,1]] is not positive semidefinite", !psd_symmetric_rational(neg));
    AlgElem x = A.zero();
    x(0, 0) = Quat(1);
    x(1, 0) = Quat(-1);
    AlgElem negl = lift(neg.map([](const Rational& v) { return RationalFunction(v); }));
    RationalFunction val = A.reduced_trace(A.apply_involution(x) * negl * x);
    b.check("Trd(x^t a x) < 0 for a = [[1,2],[2,1]]", val.is_constant() && val.constant_value() < 0, to_string(val));
    b.data()["certificate"] = to_json(cert);
    b.data()["negative_direction"] = to_json(x);
    return b.finish();
}

inline ScenarioResult scenario_hall_identity(const ScenarioOptions&) {
    detail::ScenarioBuilder b("hall-identity", "[[x1,x2]^2, x3] is a *-identity of 2x2 but not 3x3 matrices; "
                                               "[x1,x2]^2 is central for 2x2 matrices");
    auto x1 = NCPolynomial::var(1), x2 = NCPolynomial::var(2), x3 = NCPolynomial::var(3);
    auto c = commutator(x1, x2).pow(2);
    auto hall = commutator(c, x3);
    b.check("identity at n=2", b.timed("n2", [&] { return is_identity_mod_a(hall, 2, InvolutionType::orthogonal); }));
    b.check("not an identity at n=3",
            !b.timed("n3", [&] { return is_identity_mod_a(hall, 3, InvolutionType::orthogonal); }));
    b.check("[x1,x2]^2 central nonvanishing at n=2", is_central_nonvanishing(c, 2, InvolutionType::orthogonal));
    b.check("[x1,x2]^2 not central at n=3", !is_central_nonvanishing(c, 3, InvolutionType::orthogonal));
    b.data()["polynomial"] = to_json(hall);
    b.data()["central"] = to_json(c);
    return b.finish();
}

inline const std::map<std::string, std::function<ScenarioResult(const ScenarioOptions&)>>& scenario_registry() {
    static const std::map<std::string, std::function<ScenarioResult(const ScenarioOptions&)>> r{
        {"thm3.2", scenario_split_counterexample},
        {"thm3.3", scenario_quaternion_counterexample},
        {"prop4.1", scenario_entry_certificates},
        {"cor4.3", scenario_weighted_rewrite},
        {"thm4.7", scenario_symplectic_minus_one},
        {"lemma3.1", scenario_weak_isotropy},
        {"ex-psd", scenario_psd},
        {"hall-identity", scenario_hall_identity}};
    return r;
}

inline ScenarioResult run_scenario(const std::string& name, const ScenarioOptions& opt = {}) {
    const auto& reg = scenario_registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw DomainError("unknown scenario '" + name + "'");
    return it->second(opt);
}

}  // namespace hermsq
