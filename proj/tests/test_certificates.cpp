#include <gtest/gtest.h>

#include <algorithm>

#include "hermsq/certificates.hpp"
#include "hermsq/scalar_io.hpp"
#include "support.hpp"

using namespace hermsq;

namespace {

RationalFunction S(const char* text) { return parse_scalar(text); }

Form q_xy() { return Form({S("X"), S("Y"), S("X*Y")}); }

Algebra adjoint_xy_algebra() { return Algebra(3, InvolutionSpec::adjoint_diag(q_xy())); }

AlgElem one_by_one(const Quat& q) { return AlgElem::scalar(1, q); }

std::vector<SquareClass> sorted_classes(const std::vector<RationalFunction>& v) {
    std::vector<SquareClass> c;
    for (const auto& e : v) c.push_back(monomial_square_class(e));
    std::sort(c.begin(), c.end());
    return c;
}

std::vector<RationalFunction> entries(const std::vector<EntryCertificate>& certs) {
    std::vector<RationalFunction> v;
    for (const auto& c : certs) v.push_back(c.entry);
    return v;
}

Matrix<RationalFunction> skew(std::initializer_list<std::initializer_list<int>> upper, std::size_t n) {
    Matrix<RationalFunction> s(n, n);
    std::size_t i = 0;
    for (const auto& row : upper) {
        std::size_t j = i + 1;
        for (int v : row) {
            s(i, j) = RationalFunction(v);
            s(j, i) = RationalFunction(-v);
            ++j;
        }
        ++i;
    }
    return s;
}

}  // namespace

TEST(VerifyHermsq, SpecExamples) {
    auto H = make_quaternion_algebra(S("X"), -1);
    Algebra A(H, 1, InvolutionSpec::quat_conjugation());
    EXPECT_TRUE(verify_hermsq({A, A.scalar(-S("X")), {one_by_one(Quat::i(H))}}));

    Algebra B = adjoint_xy_algebra();
    AlgElem b = B.unit(0, 1, Quat(S("X")));
    EXPECT_FALSE(verify_hermsq({B, B.scalar(S("X*Y")), {b}}));
    EXPECT_TRUE(verify_hermsq({B, B.unit(1, 1, Quat(S("X*Y"))), {b}}));
    EXPECT_TRUE(verify_hermsq({B, B.zero(), {}}));
}

TEST(VerifyHermsq, RejectsForeignShapes) {
    Algebra B = adjoint_xy_algebra();
    EXPECT_THROW(verify_hermsq({B, Algebra(2, InvolutionSpec::transpose()).zero(), {}}), Error);
}

TEST(VerifyWeighted, SelectsTheXYWeight) {
    Algebra A = adjoint_xy_algebra();
    Form t = diagonalize(A.trace_form()).form;
    std::vector<AlgElem> weights;
    std::size_t xy_index = t.dim();
    for (std::size_t k = 0; k < t.dim(); ++k) {
        weights.push_back(A.scalar(t[k]));
        if (monomial_square_class(t[k]) == SquareClass{1, 1, 1} && xy_index == t.dim()) xy_index = k;
    }
    ASSERT_LT(xy_index, t.dim());
    // the weight is XY times a square of F, so divide the witness by its root
    LaurentMonomial w = as_laurent_monomial(t[xy_index] / S("X*Y"));
    ASSERT_TRUE(is_square(w.coeff) && w.ex % 2 == 0 && w.ey % 2 == 0);
    RationalFunction r =
        LaurentMonomial{Rational(isqrt(w.coeff.get_den()), isqrt(w.coeff.get_num())), -w.ex / 2, -w.ey / 2}.to_function();
    std::string key(t.dim(), '0');
    key[xy_index] = '1';
    WeightedCertificate c{A, A.scalar(S("X*Y")), weights, {{key, {A.scalar(r)}}}};
    EXPECT_TRUE(verify_weighted(c));

    WeightedCertificate bad = c;
    bad.terms.begin()->second[0](2, 2) = bad.terms.begin()->second[0](2, 2) + Quat(1);
    EXPECT_FALSE(verify_weighted(bad));
}

TEST(VerifyWeighted, NoWeightsMatchesPlainVerification) {
    Algebra A = adjoint_xy_algebra();
    AlgElem b = A.unit(0, 1, Quat(S("X")));
    for (const AlgElem& target : {A.unit(1, 1, Quat(S("X*Y"))), A.scalar(S("X*Y"))}) {
        WeightedCertificate w{A, target, {}, {{"", {b}}}};
        EXPECT_EQ(verify_weighted(w), verify_hermsq({A, target, {b}}));
    }
}

TEST(VerifyWeighted, WeightsMustBeCentralSymmetricNonzero) {
    Algebra A = adjoint_xy_algebra();
    WeightedCertificate c{A, A.zero(), {A.unit(0, 0)}, {}};
    EXPECT_THROW(verify_weighted(c), DomainError);
    c.weights = {A.zero()};
    EXPECT_THROW(verify_weighted(c), DomainError);
    auto H = make_quaternion_algebra(-1, -1);
    Algebra B(H, 1, InvolutionSpec::quat_conjugation());
    WeightedCertificate d{B, B.zero(), {one_by_one(Quat::i(H))}, {}};
    EXPECT_THROW(verify_weighted(d), DomainError);
    WeightedCertificate e{A, A.zero(), {A.one()}, {{"10", {}}}};
    EXPECT_THROW(verify_weighted(e), DomainError);
}

TEST(Rewrite, QuaternionWeightsBecomePure) {
    auto H = make_quaternion_algebra(-1, -1);
    Algebra A(H, 1, InvolutionSpec::quat_conjugation());
    AlgElem one = A.one();
    HermSqCertificate two{A, A.scalar(2), {one, one}};
    ASSERT_TRUE(verify_hermsq(two));
    WeightedCertificate wc{A, A.scalar(8), {A.scalar(2), A.scalar(2), A.scalar(2), A.scalar(2)},
                           {{"1000", {one}},
                            {"0100", {one_by_one(Quat::i(H))}},
                            {"0010", {one_by_one(Quat::j(H))}},
                            {"0001", {one_by_one(Quat::k(H))}}}};
    ASSERT_TRUE(verify_weighted(wc));
    HermSqCertificate pure = rewrite_weighted_to_pure(wc, {{0, two}, {1, two}, {2, two}, {3, two}});
    EXPECT_EQ(pure.witnesses.size(), 8u);
    EXPECT_TRUE(verify_hermsq(pure));
    EXPECT_THROW(rewrite_weighted_to_pure(wc, {{0, two}, {1, two}, {2, two}}), DomainError);
}

TEST(Rewrite, NoWeightsIsPassthrough) {
    Algebra A = adjoint_xy_algebra();
    AlgElem b = A.unit(0, 1, Quat(S("X")));
    WeightedCertificate wc{A, A.unit(1, 1, Quat(S("X*Y"))), {}, {{"", {b}}}};
    HermSqCertificate pure = rewrite_weighted_to_pure(wc, {});
    EXPECT_EQ(pure.target, wc.target);
    ASSERT_EQ(pure.witnesses.size(), 1u);
    EXPECT_EQ(pure.witnesses[0], b);
}

TEST(QuaternionEntries, ConjugationOnMinusOneMinusOne) {
    auto certs = prop41_certificates(make_quaternion_algebra(-1, -1), InvolutionSpec::quat_conjugation());
    ASSERT_EQ(certs.size(), 4u);
    for (const auto& c : certs) {
        EXPECT_EQ(c.entry, RationalFunction(2));
        EXPECT_TRUE(verify_hermsq(c.certificate));
    }
}

TEST(QuaternionEntries, ConjugationOnMinusOneMinusThree) {
    auto certs = prop41_certificates(make_quaternion_algebra(-1, -3), InvolutionSpec::quat_conjugation());
    std::vector<RationalFunction> expected{2, 2, 6, 6};
    auto got = entries(certs);
    std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) { return a.constant_value() < b.constant_value(); });
    EXPECT_EQ(got, expected);
    for (const auto& c : certs) EXPECT_TRUE(verify_hermsq(c.certificate));
}

TEST(QuaternionEntries, InnerTwistByI) {
    auto H = make_quaternion_algebra(-1, -1);
    Quat u = Quat::i(H);
    Quat s = anticommuting_pure(H, u);
    EXPECT_EQ(u * s, -(s * u));
    EXPECT_TRUE(s.is_pure());
    EXPECT_FALSE(s.is_zero());
    auto certs = prop41_certificates(H, InvolutionSpec::int_u_conj(u));
    ASSERT_EQ(certs.size(), 4u);
    for (const auto& c : certs) EXPECT_TRUE(verify_hermsq(c.certificate));
    // <2> (x) <1, Nrd(u), -Nrd(s), -Nrd(su)>
    std::vector<RationalFunction> expected{2, RationalFunction(2) * u.nrd(), RationalFunction(-2) * s.nrd(),
                                           RationalFunction(-2) * (s * u).nrd()};
    EXPECT_EQ(sorted_classes(entries(certs)), sorted_classes(expected));
}

TEST(QuaternionEntries, RequiresPureU) {
    auto H = make_quaternion_algebra(-1, -1);
    EXPECT_THROW(anticommuting_pure(H, Quat(H, 1, 1, 0, 0)), DomainError);
    EXPECT_THROW(prop41_certificates(H, InvolutionSpec::transpose()), Error);
}

TEST(Tensor, TwoTimesTwo) {
    auto H = make_quaternion_algebra(-1, -1);
    Algebra A(H, 1, InvolutionSpec::quat_conjugation());
    HermSqCertificate two{A, A.scalar(2), {A.one(), A.one()}};
    TensorCertificate t = tensor_certificates(two, two);
    EXPECT_EQ(t.target, RationalFunction(4));
    EXPECT_EQ(t.witnesses.size(), 4u);
    EXPECT_TRUE(verify_tensor(t));
}

TEST(Tensor, UnitLaw) {
    auto H = make_quaternion_algebra(-1, -3);
    Algebra A(H, 1, InvolutionSpec::quat_conjugation());
    HermSqCertificate c{A, A.scalar(3), {one_by_one(Quat::j(H))}};
    ASSERT_TRUE(verify_hermsq(c));
    Algebra B(make_quaternion_algebra(-1, -1), 1, InvolutionSpec::quat_conjugation());
    TensorCertificate t = tensor_certificates(c, HermSqCertificate{B, B.one(), {B.one()}});
    EXPECT_EQ(t.target, RationalFunction(3));
    ASSERT_EQ(t.witnesses.size(), 1u);
    EXPECT_EQ(t.witnesses[0][0], c.witnesses[0]);
    EXPECT_EQ(t.witnesses[0][1], B.one());
    EXPECT_TRUE(verify_tensor(t));
}

TEST(Tensor, ChainOfThreeAndCorruption) {
    std::vector<HermSqCertificate> certs;
    for (auto [a, b] : {std::pair{-1, -1}, {-1, -3}, {-2, -5}}) {
        auto H = make_quaternion_algebra(a, b);
        certs.push_back(prop41_certificates(H, InvolutionSpec::quat_conjugation())[1].certificate);
    }
    TensorCertificate t = tensor_chain(certs);
    EXPECT_EQ(t.factors.size(), 3u);
    EXPECT_EQ(t.witnesses.size(), 8u);
    EXPECT_EQ(t.target, RationalFunction(2 * 2 * 4));
    EXPECT_TRUE(verify_tensor(t));
    t.witnesses[3][1] = t.witnesses[3][1] + t.factors[1].one();
    EXPECT_FALSE(verify_tensor(t));
}

TEST(Tensor, RejectsNonScalarTarget) {
    Algebra A = adjoint_xy_algebra();
    HermSqCertificate c{A, A.unit(1, 1, Quat(S("X*Y"))), {A.unit(0, 1, Quat(S("X")))}};
    EXPECT_THROW(tensor_certificates(c, c), DomainError);
}

TEST(Symplectic, TwoByTwo) {
    auto r = symplectic_minus_one(skew({{1}}, 2));
    EXPECT_EQ(r.P, Matrix<RationalFunction>::identity(2));
    Matrix<RationalFunction> y(2, 2);
    y(0, 1) = 1; y(1, 0) = 1;
    EXPECT_EQ(r.Y, y);
    EXPECT_EQ(r.W, Matrix<RationalFunction>::diagonal({1, -1}));
    EXPECT_TRUE(verify_hermsq(r.certificate));
}

TEST(Symplectic, StandardBlockTakesIdentityPath) {
    auto r = symplectic_minus_one(standard_skew_block(4));
    EXPECT_EQ(r.P, Matrix<RationalFunction>::identity(4));
    EXPECT_TRUE(verify_hermsq(r.certificate));
}

TEST(Symplectic, DenseSixBySixAndIdentities) {
    auto S6 = skew({{1, -2, 0, 3, 1}, {4, 1, -1, 0}, {2, 5, -3}, {1, 1}, {-2}}, 6);
    ASSERT_FALSE(determinant(S6).is_zero());
    auto r = symplectic_minus_one(S6);
    EXPECT_EQ(r.P.transpose() * r.S * r.P, r.B);
    EXPECT_EQ(r.X.transpose() * r.B * r.X, inverse(r.B));
    EXPECT_EQ(r.Y.transpose() * r.S * r.Y, inverse(r.S));
    EXPECT_EQ(r.certificate.target, r.certificate.algebra.scalar(-1));
    EXPECT_TRUE(verify_hermsq(r.certificate));
    // sigma(W) W = S W^t S^-1 W computed directly
    auto direct = r.S * r.W.transpose() * inverse(r.S) * r.W;
    EXPECT_EQ(direct, Matrix<RationalFunction>::diagonal({-1, -1, -1, -1, -1, -1}));
}

TEST(Symplectic, PivotingNeedsColumnSwaps) {
    // leading block has zero (1,2) entry
    auto r = symplectic_minus_one(skew({{0, 1, 0}, {0, 1}, {0}}, 4));
    EXPECT_EQ(r.P.transpose() * r.S * r.P, r.B);
    EXPECT_TRUE(verify_hermsq(r.certificate));
}

TEST(Symplectic, RejectsBadInput) {
    EXPECT_THROW(symplectic_minus_one(Matrix<RationalFunction>::identity(2)), DomainError);
    EXPECT_THROW(symplectic_minus_one(skew({{1, 0}, {0}}, 3)), DomainError);
    EXPECT_THROW(symplectic_minus_one(skew({{1, 1, 0}, {0, 1}, {1}}, 4)), SingularMatrix);
}

TEST(Pipeline, Theorem32) {
    auto r = counterexample_pipeline(S("X"), S("Y"));
    EXPECT_TRUE(r.verdict);
    EXPECT_TRUE(r.element_symmetric);
    EXPECT_TRUE(r.positivity_verified);
    EXPECT_TRUE(r.entry33_symbolic_verified);
    EXPECT_EQ(r.signatures, (std::vector<int>{9, 1, 1, 1}));
    EXPECT_FALSE(r.weak_rep.represents);
    EXPECT_EQ(r.entry33_form, Form({S("Y"), S("X"), S("1")}));
}

TEST(Pipeline, Theorem33) {
    auto r = counterexample_pipeline(S("X"), S("Y"), make_quaternion_algebra(-1, -1));
    EXPECT_TRUE(r.verdict);
    EXPECT_TRUE(r.positivity_verified);
    EXPECT_EQ(r.positivity_witnesses.size(), 2u);
    EXPECT_EQ(r.signatures, (std::vector<int>{36, 4, 4, 4}));
    EXPECT_EQ(r.entry33_form.dim(), 12u);
    EXPECT_FALSE(r.weak_rep.represents);
}

TEST(Pipeline, SignFlippedYIsStillACounterexample) {
    // Y -> -Y is a field automorphism carrying <X,Y,XY> to <X,-Y,-XY>.
    auto r = counterexample_pipeline(S("X"), S("-Y"));
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(r.signatures, (std::vector<int>{1, 9, 1, 1}));
    EXPECT_FALSE(r.weak_rep.represents);
}

TEST(Pipeline, NonMonomialInputRejected) {
    EXPECT_THROW(counterexample_pipeline(S("X + 1"), S("Y")), NotMonomial);
}

TEST(Psd, SpecExamples) {
    auto m2 = [](int a, int b, int c, int d) {
        Matrix<Rational> m(2, 2);
        m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
        return m;
    };
    EXPECT_TRUE(psd_symmetric_rational(m2(2, 1, 1, 2)));
    EXPECT_FALSE(psd_symmetric_rational(m2(1, 2, 2, 1)));
    EXPECT_TRUE(psd_symmetric_rational(m2(0, 0, 0, 0)));
    EXPECT_FALSE(psd_symmetric_rational(m2(0, 1, 1, 0)));
    EXPECT_FALSE(psd_symmetric_rational(m2(0, 0, 0, -1)));
    EXPECT_THROW(psd_symmetric_rational(m2(1, 2, 3, 4)), DomainError);
}

TEST(Psd, AgreesWithCharacteristicPolynomialOracle) {
    hermsq::testing::Rng rng(7);
    for (int t = 0; t < 150; ++t) {
        auto m = hermsq::testing::random_symmetric(rng, static_cast<std::size_t>(2 + t % 5));
        EXPECT_EQ(psd_symmetric_rational(m), hermsq::testing::psd_by_charpoly(m));
    }
}

TEST(Psd, CertificateForPsdMatrices) {
    hermsq::testing::Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = static_cast<std::size_t>(2 + t % 4);
        auto b = hermsq::testing::random_rational_matrix(rng, static_cast<std::size_t>(1 + t % 3), n, 3);
        auto c = psd_certificate(b.transpose() * b);
        EXPECT_TRUE(verify_hermsq(c));
    }
    Matrix<Rational> neg(1, 1);
    neg(0, 0) = -1;
    EXPECT_THROW(psd_certificate(neg), DomainError);
}
