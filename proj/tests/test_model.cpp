#include "braidcoh/model.hpp"

#include "doctest.h"
#include "generators.hpp"

using namespace braidcoh;

namespace {

const Obj A = atom("A");
const Obj B = atom("B");
const Obj C = atom("C");

Assignment assign(std::initializer_list<std::pair<const char*, GradedBasis>> xs) {
    Assignment a;
    for (const auto& [name, degrees] : xs) a.atoms[name] = degrees;
    return a;
}

PolyMatrix interp(const Morph& m, const Assignment& asg, bool q1 = false) {
    GradedModel model;
    model.q_one = q1;
    return interpret_morphism(m, asg, model);
}

}  // namespace

TEST_CASE("object bases: concatenation and lexicographic products") {
    const Assignment asg = assign({{"A", {0, 1}}, {"B", {2}}, {"C", {}}});
    CHECK(interpret_object(zero(), asg) == GradedBasis{});
    CHECK(interpret_object(one(), asg) == GradedBasis{0});
    CHECK(interpret_object(A, asg) == GradedBasis{0, 1});
    CHECK(interpret_object(sum(A, B), asg) == GradedBasis{0, 1, 2});
    CHECK(interpret_object(prod(A, B), asg) == GradedBasis{2, 3});  // degrees add
    CHECK(interpret_object(prod(B, A), asg) == GradedBasis{2, 3});
    CHECK(interpret_object(prod(A, C), asg) == GradedBasis{});
    CHECK(interpret_object(prod(A, sum(B, one())), asg) == GradedBasis{2, 0, 3, 1});
    CHECK_THROWS_AS(interpret_object(atom("Z"), asg), UnassignedAtom);
}

TEST_CASE("structural primitives are identity matrices") {
    const Assignment asg = assign({{"A", {0, 1}}, {"B", {1}}, {"C", {0, 2}}});
    CHECK(interp(alpha_plus(A, B, C), asg).is_identity());
    CHECK(interp(alpha_times(A, B, C), asg).is_identity());
    CHECK(interp(lambda_plus(A), asg).is_identity());
    CHECK(interp(rho_plus(A), asg).is_identity());
    CHECK(interp(lambda_times(A), asg).is_identity());
    CHECK(interp(rho_times(A), asg).is_identity());
    CHECK(interp(id(prod(A, sum(B, C))), asg).is_identity());
}

TEST_CASE("additive swap is the block exchange") {
    const Assignment asg = assign({{"A", {0, 1}}, {"B", {5}}});
    const PolyMatrix g = interp(gamma_plus(A, B), asg);  // 3x3
    REQUIRE(g.rows() == 3);
    REQUIRE(g.cols() == 3);
    // B block (one vector) moves to the front
    CHECK(g.at(0, 2).is_one());
    CHECK(g.at(1, 0).is_one());
    CHECK(g.at(2, 1).is_one());
    CHECK(g.at(0, 0).is_zero());
}

TEST_CASE("braiding carries q to the degree product") {
    SUBCASE("single basis vectors") {
        const Assignment asg = assign({{"A", {1}}, {"B", {1}}});
        const PolyMatrix g = interp(gamma_times(A, B), asg);
        REQUIRE(g.rows() == 1);
        CHECK(g.at(0, 0) == Laurent::q_power(1));
        CHECK(g.str() == "[ q ]");
    }
    SUBCASE("degree products in a 2x2 case") {
        const Assignment asg = assign({{"A", {1, 2}}, {"B", {3}}});
        const PolyMatrix g = interp(gamma_times(A, B), asg);  // A*B -> B*A
        REQUIRE(g.rows() == 2);
        // dom basis (a1 b1), (a2 b1); cod basis (b1 a1), (b1 a2)
        CHECK(g.at(0, 0) == Laurent::q_power(3));
        CHECK(g.at(1, 1) == Laurent::q_power(6));
        CHECK(g.at(0, 1).is_zero());
    }
    SUBCASE("q := 1 forgets the grading") {
        const Assignment asg = assign({{"A", {1, 2}}, {"B", {3}}});
        const PolyMatrix g = interp(gamma_times(A, B), asg, true);
        CHECK(g.at(0, 0).is_one());
        CHECK(g.at(1, 1).is_one());
    }
}

TEST_CASE("distribution is the interleave-to-blocks permutation") {
    const Assignment asg = assign({{"A", {0, 0}}, {"B", {0}}, {"C", {0}}});
    const PolyMatrix d = interp(delta(A, B, C), asg);
    REQUIRE(d.rows() == 4);
    REQUIRE(d.cols() == 4);
    // dom (a1 b, a1 c, a2 b, a2 c) -> cod (a1 b, a2 b | a1 c, a2 c)
    CHECK(d.at(0, 0).is_one());
    CHECK(d.at(2, 1).is_one());
    CHECK(d.at(1, 2).is_one());
    CHECK(d.at(3, 3).is_one());
    CHECK(d.at(0, 1).is_zero());
}

TEST_CASE("zero annihilation gives empty matrices") {
    const Assignment asg = assign({{"A", {0, 1}}});
    const PolyMatrix e = interp(epsilon(A), asg);
    CHECK(e.rows() == 0);
    CHECK(e.cols() == 0);
    CHECK(e.is_identity());
}

TEST_CASE("words compose right matrix first") {
    const Assignment asg = assign({{"A", {1}}, {"B", {2}}});
    // first gT(A,B) then gT(B,A): the full double braiding
    const PolyMatrix bb = interp(comp(gamma_times(A, B), gamma_times(B, A)), asg);
    REQUIRE(bb.rows() == 1);
    CHECK(bb.at(0, 0) == Laurent::q_power(4));  // q^{2mn}, m=1, n=2
}

TEST_CASE("double braiding scales by q^2mn on single vectors") {
    for (const auto& [m, n] : {std::pair{1, 1}, {1, 2}, {2, 3}}) {
        const Assignment asg = assign({{"A", {m}}, {"B", {n}}});
        const PolyMatrix bb = interp(beta(A, B), asg);
        REQUIRE(bb.rows() == 1);
        CHECK(bb.at(0, 0) == Laurent::q_power(2 * m * n));
    }
}

TEST_CASE("inverses invert exactly") {
    const Assignment asg = assign({{"A", {0, 1}}, {"B", {1, 2}}});
    const Morph g = gamma_times(A, B);
    const PolyMatrix fwd = interp(g, asg);
    const PolyMatrix back = interp(inv(g), asg);
    CHECK(mat_mul(back, fwd).is_identity());
    CHECK(mat_mul(fwd, back).is_identity());
    CHECK(matrix_equal(back, monomial_inverse(fwd)));
}

TEST_CASE("monomial_inverse rejects non-monomial matrices") {
    PolyMatrix m(1, 1);
    m.at(0, 0) = Laurent::q_power(2) - Laurent::one();
    CHECK_THROWS_AS(monomial_inverse(m), InternalShapeError);
    PolyMatrix two(2, 2);  // rank-deficient: a column with two the units
    two.at(0, 0) = Laurent::one();
    two.at(1, 0) = Laurent::one();
    two.at(0, 1) = Laurent::one();
    two.at(1, 1) = Laurent::one();
    CHECK_THROWS_AS(monomial_inverse(two), InternalShapeError);
}

TEST_CASE("biproduct structure maps satisfy the sum equations") {
    const GradedBasis x1{0, 1}, x2{2};
    const PolyMatrix p1 = projection(x1, x2, 1), p2 = projection(x1, x2, 2);
    const PolyMatrix u1 = injection(x1, x2, 1), u2 = injection(x1, x2, 2);
    // u_i ; p_i = identity on the summand
    CHECK(mat_mul(p1, u1).is_identity());
    CHECK(mat_mul(p2, u2).is_identity());
    // u_i ; p_j = 0 for i != j
    PolyMatrix z12 = mat_mul(p2, u1);
    for (std::size_t r = 0; r < z12.rows(); ++r)
        for (std::size_t c = 0; c < z12.cols(); ++c) CHECK(z12.at(r, c).is_zero());
    // (p_1 ; u_1) + (p_2 ; u_2) = identity on the sum
    CHECK(mat_add(mat_mul(u1, p1), mat_mul(u2, p2)).is_identity());
}

TEST_CASE("distribution is characterized by its projections") {
    const Assignment asg = assign({{"A", {0, 1}}, {"B", {1}}, {"C", {0, 2}}});
    const GradedBasis ab = interpret_object(prod(A, B), asg);
    const GradedBasis ac = interpret_object(prod(A, C), asg);
    const GradedBasis bb = interpret_object(B, asg);
    const GradedBasis cb = interpret_object(C, asg);
    const PolyMatrix d = interp(delta(A, B, C), asg);
    const PolyMatrix ia = PolyMatrix::identity(interpret_object(A, asg).size());
    // delta ; p_i = 1_A (x) p_i
    CHECK(matrix_equal(mat_mul(projection(ab, ac, 1), d), kron(ia, projection(bb, cb, 1))));
    CHECK(matrix_equal(mat_mul(projection(ab, ac, 2), d), kron(ia, projection(bb, cb, 2))));
    // which reassembles delta by stacking
    CHECK(matrix_equal(
        d, vstack(kron(ia, projection(bb, cb, 1)), kron(ia, projection(bb, cb, 2)))));
}

TEST_CASE("additive associativity and swap agree with projections") {
    const Assignment asg = assign({{"A", {0}}, {"B", {1}}, {"C", {2, 3}}});
    const GradedBasis ba = interpret_object(A, asg), bb = interpret_object(B, asg),
                      bc = interpret_object(C, asg);
    const GradedBasis bab = interpret_object(sum(A, B), asg);
    const GradedBasis bbc = interpret_object(sum(B, C), asg);
    // p_A after aP equals p_{A+B} ; p_A
    const PolyMatrix ap = interp(alpha_plus(A, B, C), asg);
    CHECK(matrix_equal(mat_mul(projection(ba, bbc, 1), ap),
                       mat_mul(projection(ba, bb, 1), projection(bab, bc, 1))));
    // gP ; p_1 = p_2 (the swap exchanges which projection sees which block)
    const PolyMatrix gp = interp(gamma_plus(A, B), asg);
    CHECK(matrix_equal(mat_mul(projection(bb, ba, 1), gp), projection(ba, bb, 2)));
    CHECK(matrix_equal(mat_mul(projection(bb, ba, 2), gp), projection(ba, bb, 1)));
}

TEST_CASE("naturality squares hold for degree-preserving maps") {
    gens::Rng rng(20260815);
    const Assignment asg = assign({{"A", {0, 1, 1}}, {"B", {1, 2}}, {"C", {0, 2}}});
    const GradedBasis ba = interpret_object(A, asg), bb = interpret_object(B, asg),
                      bc = interpret_object(C, asg);
    const GradedModel model;
    for (int trial = 0; trial < 10; ++trial) {
        const PolyMatrix f = gens::random_graded_endo(rng, ba);
        const PolyMatrix g = gens::random_graded_endo(rng, bb);
        const PolyMatrix h = gens::random_graded_endo(rng, bc);
        // delta: (f (x) (g (+) h)) ; delta = delta ; ((f(x)g) (+) (f(x)h))
        const PolyMatrix d = interpret_morphism(delta(A, B, C), asg, model);
        CHECK(matrix_equal(mat_mul(d, kron(f, block_diag(g, h))),
                           mat_mul(block_diag(kron(f, g), kron(f, h)), d)));
        // gamma: (f (x) g) ; gamma = gamma ; (g (x) f)
        const PolyMatrix gm = interpret_morphism(gamma_times(A, B), asg, model);
        CHECK(matrix_equal(mat_mul(gm, kron(f, g)), mat_mul(kron(g, f), gm)));
        // eps: both sides are maps out of an empty basis
        const PolyMatrix e = interpret_morphism(epsilon(A), asg, model);
        const PolyMatrix zero_endo(0, 0);
        CHECK(matrix_equal(mat_mul(e, kron(f, zero_endo)), mat_mul(zero_endo, e)));
    }
}

TEST_CASE("degree-breaking maps break gamma naturality") {
    // the q-grading is essential: a map moving a vector across degrees
    // fails the braiding square, which is what degree preservation protects
    const Assignment asg = assign({{"A", {0, 1}}, {"B", {1}}});
    const PolyMatrix gm = interp(gamma_times(A, B), asg);
    PolyMatrix f(2, 2);  // swaps the two A vectors of different degree
    f.at(0, 1) = Laurent::one();
    f.at(1, 0) = Laurent::one();
    const PolyMatrix g = PolyMatrix::identity(1);
    CHECK(!matrix_equal(mat_mul(gm, kron(f, g)), mat_mul(kron(g, f), gm)));
}

TEST_CASE("unassigned atoms are reported") {
    const Assignment asg = assign({{"A", {0}}});
    CHECK_THROWS_AS(interp(gamma_times(A, atom("Missing")), asg), UnassignedAtom);
}
