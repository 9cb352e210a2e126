#pragma once

// JSON schemas. Scalars are strings in the scalar grammar (integers may also be JSON numbers).
//   form:        ["X", "Y", "X*Y"]
//   matrix:      [["1", "0"], ["0", "X"]]            row-major; a scalar stands for c * I
//   quaternion:  ["x0", "x1", "x2", "x3"]            coordinates in 1, i, j, k
//   algebra:     {"base": "F" | {"quaternion": {"a": "-1", "b": "-1"}}, "n": 3,
//                 "involution": {"kind": "adjoint_diag", "q": [...]}}
//                kinds: transpose, adjoint_diag (q), symplectic_standard, adjoint_skew (S),
//                quat_conjugation, int_u_conj (u), adjoint_hermitian (h)
//   certificate: {"algebra": ..., "target": ..., "witnesses": [...]}
//                weighted: adds "weights": [...], "terms": {"01": [...], ...}
//                tensor:   {"factors": [algebra, ...], "target": scalar, "witnesses": [[elem, ...], ...]}
//   nc certificate: {"g": "...", "h": "1", "n": 2, "type": "orthogonal", "weights": [...], "terms": {"": [...]}}
// Writers emit a canonical layout, so printing a parsed canonical document reproduces it byte for byte.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "hermsq/certificates.hpp"
#include "hermsq/positivstellensatz.hpp"
#include "hermsq/scalar_io.hpp"

namespace hermsq {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path, "missing field '" + key + "'");
    return *it;
}

inline const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    return j;
}

inline std::size_t size_value(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(path, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

inline std::string string_value(const Json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path, "expected a string");
    return j.get<std::string>();
}

}  // namespace detail

inline Json to_json(const RationalFunction& f) { return to_string(f); }

inline RationalFunction scalar_from_json(const Json& j, const std::string& path = "") {
    if (j.is_number_integer()) return RationalFunction(Rational(std::to_string(j.get<long long>())));
    if (!j.is_string()) throw SchemaError(path, "expected a scalar string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

inline Rational rational_from_json(const Json& j, const std::string& path = "") {
    RationalFunction f = scalar_from_json(j, path);
    if (!f.is_constant()) throw SchemaError(path, "expected a rational constant");
    return f.constant_value();
}

inline Json to_json(const Form& q) {
    Json a = Json::array();
    for (const auto& e : q.entries()) a.push_back(to_json(e));
    return a;
}

inline Form form_from_json(const Json& j, const std::string& path = "") {
    std::vector<RationalFunction> e;
    for (std::size_t i = 0; i < detail::array(j, path).size(); ++i) {
        e.push_back(scalar_from_json(j[i], detail::child(path, i)));
        if (e.back().is_zero()) throw SchemaError(detail::child(path, i), "form entries must be nonzero");
    }
    return Form(std::move(e));
}

inline Json to_json(const RationalForm& q) { return to_json(to_form(q)); }

inline RationalForm rational_form_from_json(const Json& j, const std::string& path = "") {
    std::vector<Rational> e;
    for (std::size_t i = 0; i < detail::array(j, path).size(); ++i) {
        e.push_back(rational_from_json(j[i], detail::child(path, i)));
        if (e.back() == 0) throw SchemaError(detail::child(path, i), "form entries must be nonzero");
    }
    return RationalForm(std::move(e));
}

template <class T, class F>
Matrix<T> matrix_from_json(const Json& j, const std::string& path, F&& entry) {
    const std::size_t rows = detail::array(j, path).size();
    if (rows == 0) throw SchemaError(path, "empty matrix");
    std::size_t cols = detail::array(j[0], detail::child(path, 0)).size();
    Matrix<T> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = detail::array(j[r], detail::child(path, r));
        if (row.size() != cols) throw SchemaError(detail::child(path, r), "ragged matrix row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(row[c], detail::child(detail::child(path, r), c));
    }
    return m;
}

inline Matrix<RationalFunction> scalar_matrix_from_json(const Json& j, const std::string& path = "") {
    return matrix_from_json<RationalFunction>(j, path, [](const Json& e, const std::string& p) {
        return scalar_from_json(e, p);
    });
}

inline Matrix<Rational> rational_matrix_from_json(const Json& j, const std::string& path = "") {
    return matrix_from_json<Rational>(j, path, [](const Json& e, const std::string& p) {
        return rational_from_json(e, p);
    });
}

template <class T, class F>
Json matrix_to_json(const Matrix<T>& m, F&& entry) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const Matrix<RationalFunction>& m) {
    return matrix_to_json(m, [](const RationalFunction& x) { return to_json(x); });
}
inline Json to_json(const Matrix<Rational>& m) {
    return matrix_to_json(m, [](const Rational& x) { return Json(x.get_str()); });
}
inline Json to_json(const Matrix<Polynomial>& m) {
    return matrix_to_json(m, [](const Polynomial& x) { return Json(to_string(x)); });
}

inline Json to_json(const Quat& q) {
    if (q.is_scalar()) return to_json(q.scalar_part());
    Json a = Json::array();
    for (int c = 0; c < 4; ++c) a.push_back(to_json(q[c]));
    return a;
}

inline Quat quat_from_json(const Json& j, const QuaternionAlgebraPtr& H, const std::string& path = "") {
    if (!j.is_array()) return Quat(scalar_from_json(j, path));
    if (j.size() != 4) throw SchemaError(path, "quaternion needs 4 coordinates");
    if (!H) throw SchemaError(path, "quaternion entry in an algebra over F");
    std::array<RationalFunction, 4> x;
    for (std::size_t c = 0; c < 4; ++c) x[c] = scalar_from_json(j[c], detail::child(path, c));
    return Quat(H, x[0], x[1], x[2], x[3]);
}

inline Json to_json(const Algebra& A) {
    Json j;
    if (A.is_split()) {
        j["base"] = "F";
    } else {
        j["base"] = {{"quaternion", {{"a", to_json(A.quaternion()->a)}, {"b", to_json(A.quaternion()->b)}}}};
    }
    j["n"] = A.n();
    const auto& s = A.involution();
    Json inv;
    inv["kind"] = to_string(s.kind);
    switch (s.kind) {
        case InvolutionKind::adjoint_diag: inv["q"] = to_json(s.form); break;
        case InvolutionKind::adjoint_hermitian: inv["h"] = to_json(s.form); break;
        case InvolutionKind::int_u_conj: inv["u"] = to_json(*s.u); break;
        case InvolutionKind::adjoint_skew: inv["S"] = to_json(*s.S); break;
        case InvolutionKind::symplectic_standard: inv["m"] = A.n() / 2; break;
        default: break;
    }
    j["involution"] = std::move(inv);
    return j;
}

inline Algebra algebra_from_json(const Json& j, const std::string& path = "") {
    using detail::child;
    using detail::field;
    const Json& base = field(j, "base", path);
    QuaternionAlgebraPtr H;
    if (base.is_string()) {
        if (base.get<std::string>() != "F") throw SchemaError(child(path, "base"), "expected \"F\" or a quaternion");
    } else {
        std::string bp = child(path, "base");
        const Json& qj = field(base, "quaternion", bp);
        std::string qp = child(bp, "quaternion");
        try {
            H = make_quaternion_algebra(scalar_from_json(field(qj, "a", qp), child(qp, "a")),
                                        scalar_from_json(field(qj, "b", qp), child(qp, "b")));
        } catch (const SchemaError&) {
            throw;
        } catch (const Error& e) {
            throw SchemaError(qp, e.what());
        }
    }
    std::size_t n = detail::size_value(field(j, "n", path), child(path, "n"));
    std::string ip = child(path, "involution");
    const Json& inv = field(j, "involution", path);
    InvolutionSpec spec;
    try {
        spec.kind = parse_involution_kind(detail::string_value(field(inv, "kind", ip), child(ip, "kind")));
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(child(ip, "kind"), e.what());
    }
    switch (spec.kind) {
        case InvolutionKind::adjoint_diag:
        case InvolutionKind::adjoint_hermitian: {
            const char* key = inv.contains("q") ? "q" : "h";
            spec.form = form_from_json(field(inv, key, ip), child(ip, key));
            break;
        }
        case InvolutionKind::int_u_conj:
            spec.u = quat_from_json(field(inv, "u", ip), H, child(ip, "u"));
            break;
        case InvolutionKind::adjoint_skew:
            spec.S = scalar_matrix_from_json(field(inv, "S", ip), child(ip, "S"));
            break;
        case InvolutionKind::symplectic_standard:
            if (inv.contains("m") && detail::size_value(inv["m"], child(ip, "m")) * 2 != n)
                throw SchemaError(child(ip, "m"), "n must equal 2m");
            break;
        default: break;
    }
    try {
        return Algebra(H, n, spec);
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

inline Json to_json(const AlgElem& x) {
    if (Algebra::is_central(x)) return to_json(x(0, 0).scalar_part());
    return matrix_to_json(x, [](const Quat& q) { return to_json(q); });
}

inline AlgElem elem_from_json(const Json& j, const Algebra& A, const std::string& path = "") {
    if (!j.is_array()) return A.scalar(scalar_from_json(j, path));
    AlgElem x = matrix_from_json<Quat>(j, path, [&](const Json& e, const std::string& p) {
        return quat_from_json(e, A.quaternion(), p);
    });
    if (x.rows() != A.n() || x.cols() != A.n())
        throw SchemaError(path, "expected a " + std::to_string(A.n()) + "x" + std::to_string(A.n()) + " matrix");
    return x;
}

inline Json elems_to_json(const std::vector<AlgElem>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
}

inline std::vector<AlgElem> elems_from_json(const Json& j, const Algebra& A, const std::string& path) {
    std::vector<AlgElem> out;
    for (std::size_t i = 0; i < detail::array(j, path).size(); ++i)
        out.push_back(elem_from_json(j[i], A, detail::child(path, i)));
    return out;
}

inline Json to_json(const HermSqCertificate& c) {
    Json j;
    j["algebra"] = to_json(c.algebra);
    j["target"] = to_json(c.target);
    j["witnesses"] = elems_to_json(c.witnesses);
    return j;
}

inline HermSqCertificate hermsq_certificate_from_json(const Json& j, const std::string& path = "") {
    Algebra A = algebra_from_json(detail::field(j, "algebra", path), detail::child(path, "algebra"));
    AlgElem target = elem_from_json(detail::field(j, "target", path), A, detail::child(path, "target"));
    auto w = elems_from_json(detail::field(j, "witnesses", path), A, detail::child(path, "witnesses"));
    return {A, target, w};
}

inline Json to_json(const WeightedCertificate& c) {
    Json j;
    j["algebra"] = to_json(c.algebra);
    j["target"] = to_json(c.target);
    j["weights"] = elems_to_json(c.weights);
    Json terms = Json::object();
    for (const auto& [k, xs] : c.terms) terms[k] = elems_to_json(xs);
    j["terms"] = std::move(terms);
    return j;
}

inline WeightedCertificate weighted_certificate_from_json(const Json& j, const std::string& path = "") {
    Algebra A = algebra_from_json(detail::field(j, "algebra", path), detail::child(path, "algebra"));
    WeightedCertificate c{A, elem_from_json(detail::field(j, "target", path), A, detail::child(path, "target")),
                          elems_from_json(detail::field(j, "weights", path), A, detail::child(path, "weights")),
                          {}};
    const Json& terms = detail::field(j, "terms", path);
    if (!terms.is_object()) throw SchemaError(detail::child(path, "terms"), "expected an object");
    for (const auto& [k, v] : terms.items()) {
        std::string tp = detail::child(detail::child(path, "terms"), k);
        try {
            parse_bitstring(k, c.weights.size());
        } catch (const Error& e) {
            throw SchemaError(tp, e.what());
        }
        c.terms[k] = elems_from_json(v, A, tp);
    }
    return c;
}

inline Json to_json(const TensorCertificate& c) {
    Json j;
    Json f = Json::array();
    for (const auto& A : c.factors) f.push_back(to_json(A));
    j["factors"] = std::move(f);
    j["target"] = to_json(c.target);
    Json w = Json::array();
    for (const auto& t : c.witnesses) w.push_back(elems_to_json(t));
    j["witnesses"] = std::move(w);
    return j;
}

inline TensorCertificate tensor_certificate_from_json(const Json& j, const std::string& path = "") {
    TensorCertificate c;
    const Json& f = detail::array(detail::field(j, "factors", path), detail::child(path, "factors"));
    for (std::size_t i = 0; i < f.size(); ++i)
        c.factors.push_back(algebra_from_json(f[i], detail::child(detail::child(path, "factors"), i)));
    c.target = scalar_from_json(detail::field(j, "target", path), detail::child(path, "target"));
    std::string wp = detail::child(path, "witnesses");
    const Json& w = detail::array(detail::field(j, "witnesses", path), wp);
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::string kp = detail::child(wp, k);
        if (!w[k].is_array() || w[k].size() != c.factors.size())
            throw SchemaError(kp, "expected one element per factor");
        PureTensor t;
        for (std::size_t i = 0; i < c.factors.size(); ++i)
            t.push_back(elem_from_json(w[k][i], c.factors[i], detail::child(kp, i)));
        c.witnesses.push_back(std::move(t));
    }
    return c;
}

// NC polynomials

inline NCPolynomial nc_from_json(const Json& j, const std::string& path = "") {
    if (j.is_number_integer()) return NCPolynomial(Rational(std::to_string(j.get<long long>())));
    if (!j.is_string()) throw SchemaError(path, "expected a polynomial string");
    try {
        return parse_nc(j.get<std::string>());
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

inline Json to_json(const NCPolynomial& f) { return to_string(f); }

inline Json nc_list_to_json(const std::vector<NCPolynomial>& v) {
    Json a = Json::array();
    for (const auto& f : v) a.push_back(to_json(f));
    return a;
}

inline std::vector<NCPolynomial> nc_list_from_json(const Json& j, const std::string& path) {
    std::vector<NCPolynomial> out;
    for (std::size_t i = 0; i < detail::array(j, path).size(); ++i)
        out.push_back(nc_from_json(j[i], detail::child(path, i)));
    return out;
}

inline Json to_json(const PositivstellensatzCertificate& c) {
    Json j;
    j["g"] = to_json(c.g);
    j["h"] = to_json(c.h);
    j["n"] = c.n;
    j["type"] = to_string(c.type);
    j["weights"] = nc_list_to_json(c.weights);
    Json terms = Json::object();
    for (const auto& [k, ps] : c.terms) terms[k] = nc_list_to_json(ps);
    j["terms"] = std::move(terms);
    return j;
}

inline PositivstellensatzCertificate positivstellensatz_from_json(const Json& j, const std::string& path = "") {
    using detail::child;
    using detail::field;
    PositivstellensatzCertificate c;
    c.g = nc_from_json(field(j, "g", path), child(path, "g"));
    c.h = j.contains("h") ? nc_from_json(j["h"], child(path, "h")) : NCPolynomial(1);
    c.n = detail::size_value(field(j, "n", path), child(path, "n"));
    if (j.contains("type")) {
        try {
            c.type = parse_involution_type(detail::string_value(j["type"], child(path, "type")));
        } catch (const SchemaError&) {
            throw;
        } catch (const Error& e) {
            throw SchemaError(child(path, "type"), e.what());
        }
    }
    if (j.contains("weights")) c.weights = nc_list_from_json(j["weights"], child(path, "weights"));
    const Json& terms = field(j, "terms", path);
    if (!terms.is_object()) throw SchemaError(child(path, "terms"), "expected an object");
    for (const auto& [k, v] : terms.items()) c.terms[k] = nc_list_from_json(v, child(child(path, "terms"), k));
    return c;
}

inline std::vector<Matrix<Rational>> matrix_tuple_from_json(const Json& j, const std::string& path = "") {
    std::vector<Matrix<Rational>> out;
    for (std::size_t i = 0; i < detail::array(j, path).size(); ++i) {
        out.push_back(rational_matrix_from_json(j[i], detail::child(path, i)));
        if (!out.back().is_square() || out.back().rows() != out.front().rows())
            throw SchemaError(detail::child(path, i), "matrices must be square of one size");
    }
    return out;
}

inline Json to_json(const std::vector<Matrix<Rational>>& tuple) {
    Json a = Json::array();
    for (const auto& m : tuple) a.push_back(to_json(m));
    return a;
}

/// Parses text as JSON, reporting the byte offset of a syntax error.
inline Json parse_json_text(const std::string& text, const std::string& origin = "input") {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": malformed JSON (" + std::string(e.what()) + ")", e.byte);
    }
}

inline Json read_json_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw DomainError("cannot open '" + filename + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), filename);
}

inline std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hermsq
