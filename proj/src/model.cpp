#include "braidcoh/model.hpp"

#include <sstream>

namespace braidcoh {

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Laurent::one();
    return m;
}

bool PolyMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Laurent& e = at(r, c);
            if (r == c ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

std::string PolyMatrix::str() const {
    if (rows_ == 0 || cols_ == 0) {
        std::ostringstream out;
        out << "(empty " << rows_ << "x" << cols_ << " matrix)";
        return out.str();
    }
    std::vector<std::string> cells(rows_ * cols_);
    std::vector<std::size_t> width(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            cells[r * cols_ + c] = at(r, c).str();
            width[c] = std::max(width[c], cells[r * cols_ + c].size());
        }
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        out << "[ ";
        for (std::size_t c = 0; c < cols_; ++c) {
            const std::string& s = cells[r * cols_ + c];
            out << s << std::string(width[c] - s.size(), ' ');
            out << (c + 1 < cols_ ? "  " : " ");
        }
        out << "]";
        if (r + 1 < rows_) out << "\n";
    }
    return out.str();
}

PolyMatrix mat_mul(const PolyMatrix& l, const PolyMatrix& r) {
    if (l.cols() != r.rows())
        throw InternalShapeError("matrix product shape mismatch");
    PolyMatrix m(l.rows(), r.cols());
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t k = 0; k < l.cols(); ++k) {
            const Laurent& lik = l.at(i, k);
            if (lik.is_zero()) continue;
            for (std::size_t j = 0; j < r.cols(); ++j) {
                if (r.at(k, j).is_zero()) continue;
                m.at(i, j) += lik * r.at(k, j);
            }
        }
    return m;
}

PolyMatrix mat_add(const PolyMatrix& l, const PolyMatrix& r) {
    if (l.rows() != r.rows() || l.cols() != r.cols())
        throw InternalShapeError("matrix sum shape mismatch");
    PolyMatrix m = l;
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j) m.at(i, j) += r.at(i, j);
    return m;
}

PolyMatrix kron(const PolyMatrix& l, const PolyMatrix& r) {
    PolyMatrix m(l.rows() * r.rows(), l.cols() * r.cols());
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j) {
            if (l.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < r.rows(); ++k)
                for (std::size_t t = 0; t < r.cols(); ++t) {
                    if (r.at(k, t).is_zero()) continue;
                    m.at(i * r.rows() + k, j * r.cols() + t) = l.at(i, j) * r.at(k, t);
                }
        }
    return m;
}

PolyMatrix block_diag(const PolyMatrix& l, const PolyMatrix& r) {
    PolyMatrix m(l.rows() + r.rows(), l.cols() + r.cols());
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j) m.at(i, j) = l.at(i, j);
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) m.at(l.rows() + i, l.cols() + j) = r.at(i, j);
    return m;
}

PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw InternalShapeError("vstack shape mismatch");
    PolyMatrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

bool matrix_equal(const PolyMatrix& l, const PolyMatrix& r) {
    if (l.rows() != r.rows() || l.cols() != r.cols()) return false;
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j)
            if (!(l.at(i, j) == r.at(i, j))) return false;
    return true;
}

PolyMatrix monomial_inverse(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw InternalShapeError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    PolyMatrix r(n, n);
    std::vector<bool> col_hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t hits = 0, col = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (!m.at(i, j).is_zero()) {
                ++hits;
                col = j;
            }
        if (hits != 1 || col_hit[col])
            throw InternalShapeError("inverse of a non-monomial matrix");
        col_hit[col] = true;
        const Laurent& e = m.at(i, col);
        if (!e.is_monomial()) throw InternalShapeError("inverse of a non-monomial matrix");
        auto [exp, coeff] = *e.terms().begin();
        if (coeff != 1 && coeff != -1)
            throw InternalShapeError("matrix entry is not a unit");
        r.at(col, i) = Laurent::monomial(coeff, -exp);
    }
    return r;
}

GradedBasis interpret_object(const Obj& o, const Assignment& asg) {
    switch (o->tag) {
    case ObjTag::Zero: return {};
    case ObjTag::One: return {0};
    case ObjTag::Atom: {
        auto it = asg.atoms.find(o->name);
        if (it == asg.atoms.end()) throw UnassignedAtom(o->name);
        return it->second;
    }
    case ObjTag::Sum: {
        GradedBasis l = interpret_object(o->left, asg);
        GradedBasis r = interpret_object(o->right, asg);
        l.insert(l.end(), r.begin(), r.end());
        return l;
    }
    case ObjTag::Prod: {
        GradedBasis l = interpret_object(o->left, asg);
        GradedBasis r = interpret_object(o->right, asg);
        GradedBasis p;
        p.reserve(l.size() * r.size());
        for (int dl : l)
            for (int dr : r) p.push_back(dl + dr);
        return p;
    }
    }
    throw std::logic_error("unhandled object tag");
}

namespace {

PolyMatrix interp(const Morph& m, const Assignment& asg, const GradedModel& model) {
    auto basis = [&](const Obj& o) { return interpret_object(o, asg); };
    switch (m->tag) {
    case MorphTag::Id: return PolyMatrix::identity(basis(m->args[0]).size());
    // the additive and multiplicative associators and unitors flatten to the
    // same concatenated/lexicographic basis order, so they are identities
    case MorphTag::AlphaPlus:
        return PolyMatrix::identity(basis(m->args[0]).size() + basis(m->args[1]).size() +
                                    basis(m->args[2]).size());
    case MorphTag::LambdaPlus:
    case MorphTag::RhoPlus:
        return PolyMatrix::identity(basis(m->args[0]).size());
    case MorphTag::AlphaTimes:
        return PolyMatrix::identity(basis(m->args[0]).size() * basis(m->args[1]).size() *
                                    basis(m->args[2]).size());
    case MorphTag::LambdaTimes:
    case MorphTag::RhoTimes:
        return PolyMatrix::identity(basis(m->args[0]).size());
    case MorphTag::GammaPlus: {
        const std::size_t na = basis(m->args[0]).size(), nb = basis(m->args[1]).size();
        PolyMatrix r(na + nb, na + nb);
        for (std::size_t i = 0; i < na; ++i) r.at(nb + i, i) = Laurent::one();
        for (std::size_t j = 0; j < nb; ++j) r.at(j, na + j) = Laurent::one();
        return r;
    }
    case MorphTag::GammaTimes: {
        const GradedBasis da = basis(m->args[0]), db = basis(m->args[1]);
        const std::size_t na = da.size(), nb = db.size();
        PolyMatrix r(na * nb, na * nb);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < nb; ++j)
                r.at(j * na + i, i * nb + j) =
                    Laurent::q_power(model.q_one ? 0 : da[i] * db[j]);
        return r;
    }
    case MorphTag::Delta: {
        // interleaved source order (a_i, b_j | c_k) to block target order
        const std::size_t na = basis(m->args[0]).size(), nb = basis(m->args[1]).size(),
                          nc = basis(m->args[2]).size();
        PolyMatrix r(na * nb + na * nc, na * (nb + nc));
        for (std::size_t i = 0; i < na; ++i) {
            for (std::size_t j = 0; j < nb; ++j)
                r.at(i * nb + j, i * (nb + nc) + j) = Laurent::one();
            for (std::size_t k = 0; k < nc; ++k)
                r.at(na * nb + i * nc + k, i * (nb + nc) + nb + k) = Laurent::one();
        }
        return r;
    }
    case MorphTag::Epsilon: return PolyMatrix(0, 0);
    case MorphTag::Inv: return monomial_inverse(interp(m->a, asg, model));
    case MorphTag::Comp:
        return mat_mul(interp(m->b, asg, model), interp(m->a, asg, model));
    case MorphTag::SumM:
        return block_diag(interp(m->a, asg, model), interp(m->b, asg, model));
    case MorphTag::ProdM: return kron(interp(m->a, asg, model), interp(m->b, asg, model));
    }
    throw std::logic_error("unhandled morphism tag");
}

}  // namespace

PolyMatrix interpret_morphism(const Morph& m, const Assignment& asg, const GradedModel& model) {
    ends(m);  // typecheck the whole word first
    return interp(m, asg, model);
}

PolyMatrix projection(const GradedBasis& x1, const GradedBasis& x2, int index) {
    const std::size_t n1 = x1.size(), n2 = x2.size();
    if (index == 1) {
        PolyMatrix p(n1, n1 + n2);
        for (std::size_t i = 0; i < n1; ++i) p.at(i, i) = Laurent::one();
        return p;
    }
    PolyMatrix p(n2, n1 + n2);
    for (std::size_t j = 0; j < n2; ++j) p.at(j, n1 + j) = Laurent::one();
    return p;
}

PolyMatrix injection(const GradedBasis& x1, const GradedBasis& x2, int index) {
    const std::size_t n1 = x1.size(), n2 = x2.size();
    if (index == 1) {
        PolyMatrix u(n1 + n2, n1);
        for (std::size_t i = 0; i < n1; ++i) u.at(i, i) = Laurent::one();
        return u;
    }
    PolyMatrix u(n1 + n2, n2);
    for (std::size_t j = 0; j < n2; ++j) u.at(n1 + j, j) = Laurent::one();
    return u;
}

}  // namespace braidcoh
