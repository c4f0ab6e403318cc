#include <gtest/gtest.h>

#include "liekn/liekn.hpp"
#include "oracle.hpp"

using namespace liekn;

namespace {

const LieAlgebra& aff1() { return get_entry("aff1").algebra; }

std::vector<Matrix> grid_matrices(std::size_t n, std::vector<int> values) {
    std::vector<Matrix> out;
    for (const auto& m : oracle::all_matrices(n, n, oracle::grid(values))) out.push_back(oracle::to_matrix(m));
    return out;
}

} // namespace

TEST(Representation, ZeroAndAdjoint) {
    for (const auto& e : catalog()) {
        const std::size_t n = e.algebra.dim();
        EXPECT_TRUE(check_representation(e.algebra, RepAction::zero(n, 4)).holds());
        EXPECT_TRUE(check_representation(e.algebra, adjoint_rep(e.algebra).action()).holds());
        EXPECT_TRUE(oracle::is_rep(oracle::from(e.algebra.bracket()), oracle::ad(oracle::from(e.algebra.bracket()))));
    }
}

TEST(Representation, IdentityActionOnAff1Fails) {
    const RepAction a(1, {Matrix{{1}}, Matrix{{1}}});
    const CheckReport r = check_representation(aff1(), a);
    ASSERT_EQ(r.witnesses().size(), 1u);
    EXPECT_EQ(r.witnesses()[0].indices, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(std::get<Matrix>(r.witnesses()[0].defect), (Matrix{{1}}));
    EXPECT_THROW(Representation(aff1(), a), ValidationError);
}

TEST(Representation, ShapeErrors) {
    EXPECT_THROW(RepAction(2, {Matrix(2, 3)}), DimensionError);
    EXPECT_THROW(check_representation(aff1(), RepAction::zero(3, 2)), DimensionError);
}

TEST(Dual, CoadjointOfAff1) {
    const Representation coad = coadjoint_rep(aff1());
    EXPECT_EQ(coad.basis(0), (Matrix{{0, 0}, {0, -1}}));
    EXPECT_EQ(oracle::from(coad.basis(1)), oracle::dual(oracle::ad(oracle::aff1()))[1]);
}

TEST(Dual, InvolutionAndValidity) {
    for (const auto& e : catalog()) {
        const Representation ad = adjoint_rep(e.algebra);
        EXPECT_EQ(dual_representation(dual_representation(ad)), ad);
        const auto c = oracle::from(e.algebra.bracket());
        EXPECT_TRUE(oracle::is_rep(c, oracle::dual(oracle::ad(c)))) << e.name;
    }
    const RepAction zero = RepAction::zero(2, 3);
    EXPECT_EQ(dual_action(zero), zero);
}

TEST(RhoHat, TrivialPairs) {
    for (const char* name : {"aff1", "heis3", "sl2"}) {
        const LieAlgebra& g = get_entry(name).algebra;
        const Representation ad = adjoint_rep(g);
        const std::size_t n = g.dim();
        EXPECT_EQ(rho_hat(ad, Matrix::identity(n), Matrix::identity(n)), ad.action());
        EXPECT_EQ(rho_hat(ad, Matrix(n, n), Matrix(n, n)), RepAction::zero(n, n));
        EXPECT_EQ(rho_tilde(ad, Matrix::identity(n), Matrix::identity(n)), ad.action());
        const Matrix nmat = Matrix::scalar(n, 3);
        EXPECT_EQ(rho_tilde(ad, nmat, Matrix(n, n)), rho_hat(ad, nmat, Matrix(n, n)));
    }
}

TEST(RhoHat, Aff1DiagonalPair) {
    const Representation ad = adjoint_rep(aff1());
    const Matrix p = Matrix::diagonal({1, 0});
    const RepAction hat = rho_hat(ad, p, p);
    // ad(N e2) = 0 and [ad e2, S] = [[0,0],[-1,0]] diag(1,0) - diag(1,0) [[0,0],[-1,0]].
    EXPECT_EQ(hat.basis(1), (Matrix{{0, 0}, {-1, 0}}));
    EXPECT_EQ(hat.basis(0), (Matrix{{0, 0}, {0, 1}}));
    EXPECT_TRUE(is_nijenhuis_pair(aff1(), ad, p, p).holds());
    EXPECT_TRUE(check_representation(deformed_algebra(aff1(), p), hat).holds());
}

TEST(RhoHat, DualOfTildeIsHatOfTranspose) {
    for (const char* name : {"aff1", "heis3"}) {
        const LieAlgebra& g = get_entry(name).algebra;
        const Representation ad = adjoint_rep(g);
        const Representation coad = coadjoint_rep(g);
        const auto ms = grid_matrices(g.dim(), {-1, 1});
        for (std::size_t k = 0; k + 1 < ms.size(); k += 7) {
            const Matrix& nmat = ms[k];
            const Matrix& smat = ms[k + 1];
            EXPECT_EQ(dual_action(rho_tilde(ad, nmat, smat)), rho_hat(coad, nmat, smat.transpose()));
        }
    }
}

TEST(RhoHat, RepresentationOfDeformedAlgebraWhenPair) {
    std::size_t pairs = 0, dual_pairs = 0;
    for (const char* name : {"aff1", "heis3"}) {
        const LieAlgebra& g = get_entry(name).algebra;
        const Representation ad = adjoint_rep(g);
        const auto c = oracle::from(g.bracket());
        const auto oad = oracle::ad(c);
        const auto ms = grid_matrices(g.dim(), g.dim() == 2 ? std::vector<int>{-1, 0, 1}
                                                             : std::vector<int>{0, 1});
        std::vector<Matrix> ns;
        for (const auto& m : ms)
            if (is_nijenhuis(g, m).holds()) ns.push_back(m);
        const std::size_t step = g.dim() == 2 ? 1 : 5;
        for (const auto& nmat : ns)
            for (std::size_t k = 0; k < ms.size(); k += step) {
                const Matrix& smat = ms[k];
                const Bracket deformed = deformed_algebra(g, nmat);
                const bool pair = is_nijenhuis_pair(g, ad, nmat, smat).holds();
                const bool dual_pair = is_dual_nijenhuis_pair(g, ad, nmat, smat).holds();
                EXPECT_EQ(pair, oracle::nijenhuis_pair(c, oad, oracle::from(nmat), oracle::from(smat)));
                EXPECT_EQ(dual_pair, oracle::dual_nijenhuis_pair(c, oad, oracle::from(nmat), oracle::from(smat)));
                if (pair) {
                    ++pairs;
                    EXPECT_TRUE(check_representation(deformed, rho_hat(ad, nmat, smat)).holds());
                }
                if (dual_pair) {
                    ++dual_pairs;
                    EXPECT_TRUE(check_representation(deformed, rho_tilde(ad, nmat, smat)).holds());
                }
            }
    }
    EXPECT_GT(pairs, 20u);
    EXPECT_GT(dual_pairs, 20u);
}

TEST(Semidirect, BasisOrderGThenV) {
    const LieAlgebra big = semidirect_product(aff1(), coadjoint_rep(aff1()));
    EXPECT_EQ(big.basis_names(), (std::vector<std::string>{"e1", "e2", "v1", "v2"}));
    // [e1, v2] = ad*(e1) v2 = -v2.
    EXPECT_EQ(big.basis_bracket(0, 3), (Vector{0, 0, 0, -1}));
}
