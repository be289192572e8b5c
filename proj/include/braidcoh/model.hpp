#pragma once

#include "braidcoh/expr.hpp"
#include "braidcoh/laurent.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace braidcoh {

/* Degrees of an ordered homogeneous basis; 0 gets the empty basis, 1 gets [0].
   Sum concatenates, Prod takes the lexicographic product with degrees added. */
using GradedBasis = std::vector<int>;

struct Assignment {
    std::map<std::string, GradedBasis> atoms;
};

class UnassignedAtom : public std::runtime_error {
public:
    explicit UnassignedAtom(const std::string& name)
        : std::runtime_error("atom has no assigned basis: " + name), atom(name) {}
    std::string atom;
};

// invariant breach inside the evaluator; unreachable for well-formed words
class InternalShapeError : public std::runtime_error {
public:
    explicit InternalShapeError(const std::string& what) : std::runtime_error(what) {}
};

/* Dense matrix over Laurent polynomials, row-major.
   rows index the codomain basis, cols the domain basis; a word f ; g
   evaluates to matrix(g) * matrix(f). */
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Laurent& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Laurent& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_identity() const;
    std::string str() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Laurent> a_;
};

PolyMatrix mat_mul(const PolyMatrix& l, const PolyMatrix& r);
PolyMatrix mat_add(const PolyMatrix& l, const PolyMatrix& r);
PolyMatrix kron(const PolyMatrix& l, const PolyMatrix& r);
PolyMatrix block_diag(const PolyMatrix& l, const PolyMatrix& r);
PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom);
bool matrix_equal(const PolyMatrix& l, const PolyMatrix& r);

/* Inverse of a monomial-permutation matrix (one unit monomial per row and
   column). Every well-formed word evaluates to such a matrix; anything else
   raises InternalShapeError. */
PolyMatrix monomial_inverse(const PolyMatrix& m);

struct GradedModel {
    bool q_one = false;  // specialize q := 1 (forgets the braiding grading)
};

GradedBasis interpret_object(const Obj& o, const Assignment& asg);
PolyMatrix interpret_morphism(const Morph& m, const Assignment& asg,
                              const GradedModel& model = {});

/* Biproduct structure maps of x1 + x2; index is 1 or 2. */
PolyMatrix projection(const GradedBasis& x1, const GradedBasis& x2, int index);
PolyMatrix injection(const GradedBasis& x1, const GradedBasis& x2, int index);

}  // namespace braidcoh
