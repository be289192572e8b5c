/* Acceptance runner: one pass/fail line per criterion, nonzero exit on any
   failure. All thresholds are pinned here; every matrix comparison is exact
   Laurent-polynomial equality (zero tolerance). */

#include "braidcoh/braid.hpp"
#include "braidcoh/conditions.hpp"

#include "generators.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace braidcoh;

namespace {

constexpr double kSuiteSecondsLimit = 5.0;  // criterion 1
constexpr int kRandomAssignments = 20;      // criteria 3, 4
constexpr int kBiproductTrials = 50;        // criterion 5
constexpr int kNaturalityTrials = 50;       // criterion 5
constexpr int kBraidPairs = 100;            // criterion 7
constexpr int kMaxHexPower = 3;             // criterion 7
constexpr int kOracleWords = 100;           // criterion 8
constexpr int kOracleMaxSteps = 6;          // criterion 8
constexpr std::size_t kOracleMaxDim = 24;   // keeps the brute-force runs small

struct Criterion {
    std::string title;
    bool ok = true;
    std::string note;  // stats on success, first failure otherwise
};

#define EXPECT(crit, cond, msg)              \
    do {                                     \
        if (!(cond) && (crit).ok) {          \
            (crit).ok = false;               \
            std::ostringstream oss_;         \
            oss_ << msg;                     \
            (crit).note = oss_.str();        \
        }                                    \
    } while (0)

Obj xpow(const Obj& x, int n) {
    Obj o = x;
    for (int i = 1; i < n; ++i) o = prod(o, x);
    return o;
}

Assignment random_assignment(gens::Rng& rng, int max_dim, int max_degree) {
    Assignment asg;
    for (const char* a : {"A", "B", "C", "D"}) {
        GradedBasis b(rng.chance(0.12) ? 0u : static_cast<std::size_t>(1 + rng.upto(max_dim)));
        for (int& d : b) d = rng.upto(max_degree + 1);
        asg.atoms[a] = b;
    }
    return asg;
}

GradedBasis random_basis(gens::Rng& rng, int max_dim) {
    GradedBasis b(static_cast<std::size_t>(rng.upto(max_dim + 1)));
    for (int& d : b) d = rng.upto(4) - 1;  // degrees -1..2
    return b;
}

bool is_zero_matrix(const PolyMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) return false;
    return true;
}

/* 1. Default-assignment suite: the conditions of F1..F18 commute exactly,
      under the five-second budget, with the degenerate four flagged. */
Criterion criterion1() {
    Criterion c{"condition suite F1-F18 exact on the default assignment"};
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteReport rep = run_suite(GradedModel{}, default_assignment());
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    EXPECT(c, rep.conditions.size() == registry().size(), "suite did not cover the registry");
    std::set<std::string> vacuous_figures;
    for (const auto& r : rep.conditions) {
        if (r.vacuous && !r.figure.empty()) vacuous_figures.insert(r.figure);
        if (r.name > ConditionName::Expand00) continue;  // F1..F18 only
        EXPECT(c, r.commutes && r.met, r.id << " failed to commute");
    }
    for (const char* f : {"F1", "F3", "F5", "F8"})
        EXPECT(c, vacuous_figures.count(f) == 1, f << " was not flagged vacuous");
    EXPECT(c, secs < kSuiteSecondsLimit,
           "suite took " << secs << " s, limit " << kSuiteSecondsLimit << " s");
    if (c.ok) {
        std::ostringstream oss;
        oss << "20 conditions commute, " << secs << " s < " << kSuiteSecondsLimit
            << " s, F1/F3/F5/F8 flagged vacuous";
        c.note = oss.str();
    }
    return c;
}

/* 2. The control check fails exactly when two strictly positive degrees can
      meet, with a q^(2mn) witness; q := 1 or zero degrees collapse it to a
      vacuous pass. */
Criterion criterion2() {
    Criterion c{"braided-not-symmetric control"};
    gens::Rng rng(20260815);
    const GradedModel model;
    int failing = 0, degenerate = 0;

    for (int k = 0; k < kRandomAssignments; ++k) {
        const Assignment asg = random_assignment(rng, 2, 2);
        const GradedBasis& da = asg.atoms.at("A");
        const GradedBasis& db = asg.atoms.at("B");
        bool pos_a = false, pos_b = false;
        for (int d : da) pos_a = pos_a || d > 0;
        for (int d : db) pos_b = pos_b || d > 0;

        const ConditionReport r = check_condition(ConditionName::NegMulSymmetry, model, asg);
        if (pos_a && pos_b) {
            ++failing;
            EXPECT(c, !r.commutes && r.met, "control commuted despite positive degrees");
            EXPECT(c, !r.vacuous, "failing control run marked vacuous");
            EXPECT(c, r.witness.has_value(), "failing control run carries no witness");
            if (r.witness.has_value()) {
                EXPECT(c, r.witness->rhs == Laurent::one(),
                       "witness compares against " << r.witness->rhs.str());
                bool is_q2mn = false;
                for (int m : da)
                    for (int n : db)
                        if (m > 0 && n > 0 && r.witness->lhs == Laurent::q_power(2 * m * n))
                            is_q2mn = true;
                EXPECT(c, is_q2mn,
                       "witness " << r.witness->lhs.str() << " is not q^(2mn) for the degrees");
            }
        } else {
            ++degenerate;
            EXPECT(c, r.commutes && !r.met, "control failed without two positive degrees");
            EXPECT(c, r.vacuous, "degenerate control run not labeled vacuous");
        }
    }

    {  // pinned failing instance: degrees (1,2) against (2) witness q^4
        Assignment asg;
        asg.atoms = {{"A", {1, 2}}, {"B", {2}}, {"C", {0}}, {"D", {0}}};
        const ConditionReport r = check_condition(ConditionName::NegMulSymmetry, model, asg);
        EXPECT(c, !r.commutes && r.witness.has_value(), "pinned control instance commuted");
        if (r.witness.has_value())
            EXPECT(c, r.witness->lhs == Laurent::q_power(4) && r.witness->rhs == Laurent::one(),
                   "pinned witness is " << r.witness->lhs.str() << " vs " << r.witness->rhs.str());
    }
    {  // q := 1 specialization passes and is labeled vacuous
        GradedModel classical;
        classical.q_one = true;
        const ConditionReport r =
            check_condition(ConditionName::NegMulSymmetry, classical, default_assignment());
        EXPECT(c, r.commutes && r.vacuous && !r.met, "q := 1 run not a vacuous pass");
        ++degenerate;
    }
    {  // all-zero degrees pass and are labeled vacuous
        Assignment asg;
        for (const char* a : {"A", "B", "C", "D"}) asg.atoms[a] = {0, 0};
        const ConditionReport r = check_condition(ConditionName::NegMulSymmetry, model, asg);
        EXPECT(c, r.commutes && r.vacuous && !r.met, "zero-degree run not a vacuous pass");
        ++degenerate;
    }
    EXPECT(c, failing >= 5, "random assignments produced only " << failing << " failing runs");
    if (c.ok) {
        std::ostringstream oss;
        oss << failing + 1 << " failing runs with q^(2mn) witnesses, " << degenerate
            << " vacuous passes";
        c.note = oss.str();
    }
    return c;
}

/* 3. The stepwise conditions F19-F31 commute under randomized assignments. */
Criterion criterion3() {
    Criterion c{"F19-F31 commute under randomized assignments"};
    gens::Rng rng(33);
    const GradedModel model;
    int runs = 0;
    for (int k = 0; k < kRandomAssignments; ++k) {
        const Assignment asg = random_assignment(rng, 2, 2);
        for (int i = static_cast<int>(ConditionName::JoyalStreet);
             i <= static_cast<int>(ConditionName::XVIIstep3); ++i) {
            const auto name = static_cast<ConditionName>(i);
            const ConditionReport r = check_condition(name, model, asg);
            ++runs;
            EXPECT(c, r.commutes, info(name).id << " failed on assignment " << k);
        }
    }
    if (c.ok) {
        std::ostringstream oss;
        oss << "13 conditions x " << kRandomAssignments << " assignments, " << runs
            << " exact runs";
        c.note = oss.str();
    }
    return c;
}

/* 4. Both formulations of the right-distributor and the left annihilator
      agree, and the three unit isomorphisms coincide. */
Criterion criterion4() {
    Criterion c{"derived-morphism equalities under randomized assignments"};
    gens::Rng rng(44);
    const GradedModel model;
    for (int k = 0; k < kRandomAssignments; ++k) {
        const Assignment asg = random_assignment(rng, 2, 2);
        for (auto name : {ConditionName::DeltaSharpAlt, ConditionName::LambdaStarAlt,
                          ConditionName::UnitTriple}) {
            const ConditionReport r = check_condition(name, model, asg);
            EXPECT(c, r.commutes, info(name).id << " failed on assignment " << k);
        }
    }
    if (c.ok) {
        std::ostringstream oss;
        oss << "delta-sharp, lambda-star and the unit triple agree on " << kRandomAssignments
            << " assignments";
        c.note = oss.str();
    }
    return c;
}

/* 5. Biproduct sum equations, the projection characterization of the
      distributor, and naturality of delta, gamma-times and eps. */
Criterion criterion5() {
    Criterion c{"biproduct equations and naturality squares"};
    gens::Rng rng(55);
    const GradedModel model;

    for (int t = 0; t < kBiproductTrials; ++t) {
        const GradedBasis b1 = random_basis(rng, 3), b2 = random_basis(rng, 3);
        for (int i : {1, 2}) {
            const std::size_t ni = (i == 1 ? b1 : b2).size();
            const std::size_t nj = (i == 1 ? b2 : b1).size();
            // u_i ; p_i = 1 (inject then project is the identity)
            EXPECT(c,
                   matrix_equal(mat_mul(projection(b1, b2, i), injection(b1, b2, i)),
                                PolyMatrix::identity(ni)),
                   "u" << i << ";p" << i << " is not the identity");
            // u_i ; p_j = 0 for i != j
            EXPECT(c,
                   is_zero_matrix(mat_mul(projection(b1, b2, 3 - i), injection(b1, b2, i))),
                   "u" << i << ";p" << 3 - i << " is not zero");
            (void)nj;
        }
        // sum of p_i ; u_i over i is the identity of the sum
        const PolyMatrix round =
            mat_add(mat_mul(injection(b1, b2, 1), projection(b1, b2, 1)),
                    mat_mul(injection(b1, b2, 2), projection(b1, b2, 2)));
        EXPECT(c, matrix_equal(round, PolyMatrix::identity(b1.size() + b2.size())),
               "sum of p_i;u_i is not the identity");
    }

    const Obj A = atom("A"), B = atom("B"), C = atom("C");
    for (int t = 0; t < kBiproductTrials; ++t) {
        Assignment asg;
        asg.atoms = {{"A", random_basis(rng, 3)},
                     {"B", random_basis(rng, 3)},
                     {"C", random_basis(rng, 3)}};
        const GradedBasis ba = interpret_object(A, asg), bb = interpret_object(B, asg),
                          bc = interpret_object(C, asg);
        const GradedBasis ab = interpret_object(prod(A, B), asg),
                          ac = interpret_object(prod(A, C), asg);
        const PolyMatrix D = interpret_morphism(delta(A, B, C), asg, model);
        // composing the distributor with the i-th projection of the target
        // peels off the i-th summand of the right factor
        for (int i : {1, 2}) {
            const PolyMatrix lhs = mat_mul(projection(ab, ac, i), D);
            const PolyMatrix rhs = kron(PolyMatrix::identity(ba.size()), projection(bb, bc, i));
            EXPECT(c, matrix_equal(lhs, rhs), "delta projection " << i << " mismatch");
        }
        const PolyMatrix rebuilt =
            vstack(kron(PolyMatrix::identity(ba.size()), projection(bb, bc, 1)),
                   kron(PolyMatrix::identity(ba.size()), projection(bb, bc, 2)));
        EXPECT(c, matrix_equal(D, rebuilt), "delta is not the stack of its projections");
    }

    int squares = 0;
    for (int t = 0; t < kNaturalityTrials; ++t) {
        Assignment asg;
        asg.atoms = {{"A", random_basis(rng, 3)},
                     {"B", random_basis(rng, 3)},
                     {"C", random_basis(rng, 3)}};
        const GradedBasis ba = asg.atoms["A"], bb = asg.atoms["B"], bc = asg.atoms["C"];
        const PolyMatrix F = gens::random_graded_endo(rng, ba);
        const PolyMatrix G = gens::random_graded_endo(rng, bb);
        const PolyMatrix H = gens::random_graded_endo(rng, bc);
        // delta: f*(g+h) then distribute equals distribute then (f*g)+(f*h)
        const PolyMatrix D = interpret_morphism(delta(A, B, C), asg, model);
        EXPECT(c,
               matrix_equal(mat_mul(D, kron(F, block_diag(G, H))),
                            mat_mul(block_diag(kron(F, G), kron(F, H)), D)),
               "delta naturality square broke at trial " << t);
        // gamma-times: f*g then swap equals swap then g*f
        const PolyMatrix S = interpret_morphism(gamma_times(A, B), asg, model);
        EXPECT(c, matrix_equal(mat_mul(S, kron(F, G)), mat_mul(kron(G, F), S)),
               "gamma-times naturality square broke at trial " << t);
        // eps: both composites collapse to the empty matrix
        const PolyMatrix E = interpret_morphism(epsilon(A), asg, model);
        EXPECT(c,
               matrix_equal(mat_mul(E, kron(F, PolyMatrix(0, 0))),
                            mat_mul(PolyMatrix::identity(0), E)),
               "eps naturality square broke at trial " << t);
        squares += 3;
    }
    if (c.ok) {
        std::ostringstream oss;
        oss << kBiproductTrials << " sum-equation trials, " << kBiproductTrials
            << " projection trials, " << squares << " naturality squares, all exact";
        c.note = oss.str();
    }
    return c;
}

/* 6. The verdict of every registered diagram is independent of the base
      vertex and the walking orientation (exhaustive sweep). */
Criterion criterion6() {
    Criterion c{"base-vertex and orientation independence"};
    const Assignment asg = default_assignment();
    const GradedModel model;
    const Obj suite_atoms[] = {atom("A"), atom("B"), atom("C"), atom("D")};
    int sweeps = 0;
    for (const auto& ci : registry()) {
        if (!ci.is_diagram) continue;
        const std::vector<Obj> atoms(suite_atoms, suite_atoms + ci.arity);
        const Diagram d = build(ci.name, atoms);
        const bool reference = check_condition(ci.name, model, asg).commutes;
        for (std::size_t v = 0; v < d.vertices().size(); ++v)
            for (Orientation o : {Orientation::CW, Orientation::CCW}) {
                const ConditionReport r = check_condition(ci.name, model, asg, v, o);
                ++sweeps;
                EXPECT(c, r.commutes == reference,
                       ci.id << " verdict flips at base " << v << (o == Orientation::CW
                                                                       ? " clockwise"
                                                                       : " counterclockwise"));
            }
    }
    if (c.ok) {
        std::ostringstream oss;
        oss << sweeps << " base/orientation runs across 36 diagrams, stable verdicts";
        c.note = oss.str();
    }
    return c;
}

/* 7. Braid backend: braid relation, hexagons at strand powers, braid
      equality transfers to the graded model, and sigma1^2 stays nontrivial. */
Criterion criterion7() {
    Criterion c{"braid backend"};
    {
        BraidWord lhs, rhs;
        lhs.strands = rhs.strands = 3;
        lhs.gens = {{1, 1}, {2, 1}, {1, 1}};
        rhs.gens = {{2, 1}, {1, 1}, {2, 1}};
        EXPECT(c, braid_equal(lhs, rhs), "the braid relation was rejected");
    }
    {
        BraidWord sq, e;
        sq.strands = e.strands = 2;
        sq.gens = {{1, 1}, {1, 1}};
        EXPECT(c, !braid_equal(sq, e), "sigma1^2 conflated with the identity");
    }

    const Obj x = atom("x");
    int hexagons = 0;
    for (int a = 1; a <= kMaxHexPower; ++a)
        for (int b = 1; b <= kMaxHexPower; ++b)
            for (int p = 1; p <= kMaxHexPower; ++p) {
                const Obj A = xpow(x, a), B = xpow(x, b), C = xpow(x, p);
                const Morph front_direct =
                    comp(alpha_times(A, B, C),
                         comp(gamma_times(A, prod(B, C)), alpha_times(B, C, A)));
                const Morph front_steps =
                    comp(prod_m(gamma_times(A, B), id(C)),
                         comp(alpha_times(B, A, C), prod_m(id(B), gamma_times(A, C))));
                EXPECT(c,
                       braid_equal(strict_image(front_direct, "x"),
                                   strict_image(front_steps, "x")),
                       "front hexagon braid mismatch at powers " << a << "," << b << "," << p);
                const Morph behind_direct =
                    comp(alpha_times(A, B, C),
                         comp(inv(gamma_times(prod(B, C), A)), alpha_times(B, C, A)));
                const Morph behind_steps =
                    comp(prod_m(inv(gamma_times(B, A)), id(C)),
                         comp(alpha_times(B, A, C), prod_m(id(B), inv(gamma_times(C, A)))));
                EXPECT(c,
                       braid_equal(strict_image(behind_direct, "x"),
                                   strict_image(behind_steps, "x")),
                       "behind hexagon braid mismatch at powers " << a << "," << b << "," << p);
                hexagons += 2;
            }

    gens::Rng rng(77);
    Assignment asg;
    asg.atoms["x"] = {0, 1};
    const GradedModel model;
    int pairs = 0;
    for (int k = 0; k < kBraidPairs; ++k) {
        const Obj start = gens::random_tensor_power(rng, "x", 4);
        const Morph m1 = gens::random_mult_word(rng, start, 1 + rng.upto(4), 2);
        const Morph m2 = gens::braid_equal_variant(rng, m1, 2);
        const BraidWord w1 = strict_image(m1, "x"), w2 = strict_image(m2, "x");
        EXPECT(c, braid_equal(w1, w2), "constructed variant pair " << k << " not braid-equal");
        EXPECT(c,
               matrix_equal(interpret_morphism(m1, asg, model),
                            interpret_morphism(m2, asg, model)),
               "braid-equal pair " << k << " differs in the graded model");
        ++pairs;
    }
    if (c.ok) {
        std::ostringstream oss;
        oss << "braid relation ok, " << hexagons << " hexagon instances, " << pairs
            << " braid-equal pairs matrix-equal, sigma1^2 distinct";
        c.note = oss.str();
    }
    return c;
}

/* 8. The independent basis-tracking evaluator reproduces every matrix entry
      on random well-typed words. */
Criterion criterion8() {
    Criterion c{"oracle cross-check"};
    gens::Rng rng(88);
    const std::vector<std::string> names = {"A", "B", "C"};
    Assignment asg;
    asg.atoms = {{"A", {0, 1}}, {"B", {1}}, {"C", {0, 2}}};
    int done = 0;
    long long entries = 0;
    while (done < kOracleWords) {
        const Obj start = gens::random_object(rng, names, 3);
        if (interpret_object(start, asg).size() > kOracleMaxDim) continue;
        GradedModel model;
        model.q_one = done % 5 == 4;
        const Morph w = gens::random_word(rng, start, 1 + rng.upto(kOracleMaxSteps), 3);
        const PolyMatrix impl = interpret_morphism(w, asg, model);
        const PolyMatrix orc = oracle::oracle_matrix(w, asg, model.q_one);
        EXPECT(c, impl.rows() == orc.rows() && impl.cols() == orc.cols(),
               "shape mismatch on word " << done << ": " << to_string(w));
        if (impl.rows() == orc.rows() && impl.cols() == orc.cols())
            for (std::size_t r = 0; r < impl.rows(); ++r)
                for (std::size_t col = 0; col < impl.cols(); ++col) {
                    EXPECT(c, impl.at(r, col) == orc.at(r, col),
                           "entry (" << r << "," << col << ") of word " << done
                                     << " differs: " << impl.at(r, col).str() << " vs "
                                     << orc.at(r, col).str());
                    ++entries;
                }
        ++done;
    }
    if (c.ok) {
        std::ostringstream oss;
        oss << kOracleWords << " random words, " << entries << " entries identical";
        c.note = oss.str();
    }
    return c;
}

}  // namespace

int main() {
    const std::vector<Criterion> results = {criterion1(), criterion2(), criterion3(),
                                            criterion4(), criterion5(), criterion6(),
                                            criterion7(), criterion8()};
    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Criterion& c = results[i];
        failures += c.ok ? 0 : 1;
        std::printf("%s  criterion %zu: %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1,
                    c.title.c_str(), c.note.empty() ? "" : " -- ", c.note.c_str());
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n", results.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, results.size());
    return failures == 0 ? 0 : 1;
}
