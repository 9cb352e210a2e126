#pragma once

// Certificates h* g h = sum_eps alpha^eps sum_i p*_{i,eps} p_{i,eps} modulo the *-identities of
// degree-n algebras, and randomized falsification of positive semidefiniteness.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "hermsq/certificates.hpp"
#include "hermsq/generic_matrices.hpp"

namespace hermsq {

struct PositivstellensatzCertificate {
    NCPolynomial g, h;
    std::size_t n = 2;
    InvolutionType type = InvolutionType::orthogonal;
    std::vector<NCPolynomial> weights;
    std::map<std::string, std::vector<NCPolynomial>> terms;
};

struct PositivstellensatzReport {
    bool keys_valid = true;
    bool g_symmetric = false;
    bool h_central_nonvanishing = false;
    std::vector<bool> weight_symmetric;
    std::vector<bool> weight_central;
    bool identity = false;
    std::vector<std::string> failures;

    bool valid() const { return failures.empty(); }
};

inline PositivstellensatzReport check_positivstellensatz(const PositivstellensatzCertificate& c,
                                                         ExpansionCaps caps = {}) {
    PositivstellensatzReport r;
    unsigned vars = std::max(c.g.variable_count(), c.h.variable_count());
    for (const auto& w : c.weights) vars = std::max(vars, w.variable_count());
    for (const auto& [k, ps] : c.terms)
        for (const auto& p : ps) vars = std::max(vars, p.variable_count());
    GenericMatrixContext ctx(c.n, vars, c.type, caps);

    std::vector<std::vector<bool>> keys;
    for (const auto& [k, ps] : c.terms) {
        try {
            keys.push_back(parse_bitstring(k, c.weights.size()));
        } catch (const DomainError& e) {
            r.keys_valid = false;
            r.failures.push_back(e.what());
        }
    }

    PolyMatrix G = ctx.eval(c.g);
    r.g_symmetric = ctx.involution(G) == G;
    if (!r.g_symmetric) r.failures.push_back("g is not symmetric modulo the identities");

    PolyMatrix H = ctx.eval(c.h);
    auto hc = scalar_value(H);
    r.h_central_nonvanishing = hc && !hc->is_zero();
    if (!r.h_central_nonvanishing) r.failures.push_back("h is not a nonvanishing central polynomial");

    std::vector<PolyMatrix> A;
    for (std::size_t i = 0; i < c.weights.size(); ++i) {
        PolyMatrix a = ctx.eval(c.weights[i]);
        r.weight_symmetric.push_back(ctx.involution(a) == a);
        r.weight_central.push_back(scalar_value(a).has_value());
        if (!r.weight_symmetric.back()) r.failures.push_back("weight " + std::to_string(i) + " is not symmetric");
        if (!r.weight_central.back()) r.failures.push_back("weight " + std::to_string(i) + " is not central");
        A.push_back(std::move(a));
    }

    if (r.keys_valid) {
        ctx.check_degree(2 * c.h.degree() + c.g.degree());
        PolyMatrix diff = ctx.involution(H) * G * H;
        std::size_t t = 0;
        for (const auto& [k, ps] : c.terms) {
            const auto& bits = keys[t++];
            std::size_t deg = 0;
            for (std::size_t i = 0; i < bits.size(); ++i)
                if (bits[i]) deg += c.weights[i].degree();
            PolyMatrix sum(c.n, c.n);
            for (const auto& p : ps) {
                ctx.check_degree(deg + 2 * p.degree());
                PolyMatrix P = ctx.eval(p);
                sum += ctx.involution(P) * P;
            }
            for (std::size_t i = 0; i < bits.size(); ++i)
                if (bits[i]) sum = A[i] * sum;
            diff -= sum;
        }
        r.identity = diff.is_zero();
        if (!r.identity) r.failures.push_back("h* g h differs from the weighted sum of hermitian squares");
    }
    return r;
}

inline bool verify_positivstellensatz(const PositivstellensatzCertificate& c, ExpansionCaps caps = {}) {
    return check_positivstellensatz(c, caps).valid();
}

struct FalsifyCounterexample {
    std::uint64_t trial = 0;
    std::vector<Matrix<Rational>> tuple;
    Matrix<Rational> value;  // symmetrized g(s, s^t)
};

struct FalsifyOptions {
    std::size_t n = 2;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    int bound = 5;
    unsigned threads = 1;
};

/// The tuple drawn for a trial depends only on (seed, trial).
inline std::vector<Matrix<Rational>> random_tuple(std::uint64_t seed, std::uint64_t trial, std::size_t count,
                                                  std::size_t n, int bound) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Matrix<Rational>> s;
    for (std::size_t l = 0; l < count; ++l) {
        Matrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
        s.push_back(std::move(m));
    }
    return s;
}

inline Matrix<Rational> symmetrized(const Matrix<Rational>& m) { return scale(Rational(1, 2), m + m.transpose()); }

/// First trial (lowest index) whose value is not PSD, or nothing ("no counterexample found").
inline std::optional<FalsifyCounterexample> psd_falsify(const NCPolynomial& g, const FalsifyOptions& opt) {
    if (!g.is_symmetric()) throw DomainError("g is not symmetric (g != g*)");
    if (opt.n == 0) throw DomainError("matrix size must be positive");
    if (opt.bound < 0) throw DomainError("entry bound must be nonnegative");
    const std::size_t count = g.variable_count();
    auto fails = [&](std::uint64_t t) {
        auto s = random_tuple(opt.seed, t, count, opt.n, opt.bound);
        return !psd_symmetric_rational(symmetrized(nc_eval(g, s, opt.n)));
    };
    std::atomic<std::uint64_t> best{opt.trials};
    unsigned threads = std::max(1u, opt.threads);
    auto worker = [&](unsigned id) {
        for (std::uint64_t t = id; t < opt.trials && t < best.load(); t += threads) {
            if (!fails(t)) continue;
            std::uint64_t cur = best.load();
            while (t < cur && !best.compare_exchange_weak(cur, t)) {
            }
            return;
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
        for (auto& th : pool) th.join();
    }
    if (best.load() >= opt.trials) return std::nullopt;
    FalsifyCounterexample c;
    c.trial = best.load();
    c.tuple = random_tuple(opt.seed, c.trial, count, opt.n, opt.bound);
    c.value = symmetrized(nc_eval(g, c.tuple, opt.n));
    return c;
}

}  // namespace hermsq
