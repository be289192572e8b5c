#include "braidcoh/expr.hpp"

#include <sstream>

namespace braidcoh {

namespace {

Obj make_obj(ObjTag tag, std::string name, Obj l, Obj r) {
    auto o = std::make_shared<ObjectExpr>();
    o->tag = tag;
    o->name = std::move(name);
    o->left = std::move(l);
    o->right = std::move(r);
    return o;
}

Morph make_morph(MorphTag tag, std::vector<Obj> args, Morph a = nullptr, Morph b = nullptr) {
    auto m = std::make_shared<MorphExpr>();
    m->tag = tag;
    m->args = std::move(args);
    m->a = std::move(a);
    m->b = std::move(b);
    return m;
}

}  // namespace

Obj zero() {
    static const Obj z = make_obj(ObjTag::Zero, "", nullptr, nullptr);
    return z;
}

Obj one() {
    static const Obj u = make_obj(ObjTag::One, "", nullptr, nullptr);
    return u;
}

Obj atom(std::string name) { return make_obj(ObjTag::Atom, std::move(name), nullptr, nullptr); }

Obj sum(Obj a, Obj b) { return make_obj(ObjTag::Sum, "", std::move(a), std::move(b)); }

Obj prod(Obj a, Obj b) { return make_obj(ObjTag::Prod, "", std::move(a), std::move(b)); }

bool obj_equal(const Obj& a, const Obj& b) {
    if (a.get() == b.get()) return true;
    if (a->tag != b->tag) return false;
    switch (a->tag) {
    case ObjTag::Zero:
    case ObjTag::One: return true;
    case ObjTag::Atom: return a->name == b->name;
    case ObjTag::Sum:
    case ObjTag::Prod:
        return obj_equal(a->left, b->left) && obj_equal(a->right, b->right);
    }
    return false;
}

namespace {

// precedence: + is 0, * is 1, leaves are 2; both binary ops associate left
void print_obj(std::ostringstream& out, const Obj& o, int parent) {
    switch (o->tag) {
    case ObjTag::Zero: out << "0"; return;
    case ObjTag::One: out << "1"; return;
    case ObjTag::Atom: out << o->name; return;
    case ObjTag::Sum: {
        bool paren = parent > 0;
        if (paren) out << "(";
        print_obj(out, o->left, 0);
        out << " + ";
        print_obj(out, o->right, 1);
        if (paren) out << ")";
        return;
    }
    case ObjTag::Prod: {
        bool paren = parent > 1;
        if (paren) out << "(";
        print_obj(out, o->left, 1);
        out << " * ";
        print_obj(out, o->right, 2);
        if (paren) out << ")";
        return;
    }
    }
}

}  // namespace

std::string to_string(const Obj& o) {
    std::ostringstream out;
    print_obj(out, o, 0);
    return out.str();
}

Morph id(Obj x) { return make_morph(MorphTag::Id, {std::move(x)}); }
Morph alpha_plus(Obj a, Obj b, Obj c) {
    return make_morph(MorphTag::AlphaPlus, {std::move(a), std::move(b), std::move(c)});
}
Morph lambda_plus(Obj a) { return make_morph(MorphTag::LambdaPlus, {std::move(a)}); }
Morph rho_plus(Obj a) { return make_morph(MorphTag::RhoPlus, {std::move(a)}); }
Morph gamma_plus(Obj a, Obj b) {
    return make_morph(MorphTag::GammaPlus, {std::move(a), std::move(b)});
}
Morph alpha_times(Obj a, Obj b, Obj c) {
    return make_morph(MorphTag::AlphaTimes, {std::move(a), std::move(b), std::move(c)});
}
Morph lambda_times(Obj a) { return make_morph(MorphTag::LambdaTimes, {std::move(a)}); }
Morph rho_times(Obj a) { return make_morph(MorphTag::RhoTimes, {std::move(a)}); }
Morph gamma_times(Obj a, Obj b) {
    return make_morph(MorphTag::GammaTimes, {std::move(a), std::move(b)});
}
Morph delta(Obj a, Obj b, Obj c) {
    return make_morph(MorphTag::Delta, {std::move(a), std::move(b), std::move(c)});
}
Morph epsilon(Obj a) { return make_morph(MorphTag::Epsilon, {std::move(a)}); }

Morph inv(Morph m) { return make_morph(MorphTag::Inv, {}, std::move(m)); }
Morph comp(Morph f, Morph g) { return make_morph(MorphTag::Comp, {}, std::move(f), std::move(g)); }
Morph sum_m(Morph f, Morph g) { return make_morph(MorphTag::SumM, {}, std::move(f), std::move(g)); }
Morph prod_m(Morph f, Morph g) {
    return make_morph(MorphTag::ProdM, {}, std::move(f), std::move(g));
}

Morph compose(Morph f, Morph g) {
    Ends ef = ends(f);
    Ends eg = ends(g);
    if (!obj_equal(ef.cod, eg.dom)) throw TypeError("$", ef.cod, eg.dom);
    return comp(std::move(f), std::move(g));
}

Morph beta(Obj x, Obj y) { return comp(gamma_times(x, y), gamma_times(y, x)); }

Morph delta_sharp(Obj a, Obj b, Obj c) {
    return comp(gamma_times(sum(a, b), c),
                comp(delta(c, a, b), inv(sum_m(gamma_times(a, c), gamma_times(b, c)))));
}

Morph delta_sharp_alt(Obj a, Obj b, Obj c) {
    return comp(inv(gamma_times(c, sum(a, b))),
                comp(delta(c, a, b), sum_m(gamma_times(c, a), gamma_times(c, b))));
}

Morph lambda_star(Obj a) { return comp(gamma_times(zero(), a), epsilon(a)); }

Morph lambda_star_alt(Obj a) { return comp(inv(gamma_times(a, zero())), epsilon(a)); }

TypeError::TypeError(std::string p, Obj exp, Obj fnd)
    : std::runtime_error("type mismatch at " + p + ": " + to_string(exp) + " vs " +
                         to_string(fnd)),
      path(std::move(p)),
      expected(std::move(exp)),
      found(std::move(fnd)) {}

namespace {

Ends ends_rec(const Morph& m, const std::string& path) {
    switch (m->tag) {
    case MorphTag::Id: return {m->args[0], m->args[0]};
    case MorphTag::AlphaPlus:
        return {sum(sum(m->args[0], m->args[1]), m->args[2]),
                sum(m->args[0], sum(m->args[1], m->args[2]))};
    case MorphTag::LambdaPlus: return {sum(zero(), m->args[0]), m->args[0]};
    case MorphTag::RhoPlus: return {sum(m->args[0], zero()), m->args[0]};
    case MorphTag::GammaPlus:
        return {sum(m->args[0], m->args[1]), sum(m->args[1], m->args[0])};
    case MorphTag::AlphaTimes:
        return {prod(prod(m->args[0], m->args[1]), m->args[2]),
                prod(m->args[0], prod(m->args[1], m->args[2]))};
    case MorphTag::LambdaTimes: return {prod(one(), m->args[0]), m->args[0]};
    case MorphTag::RhoTimes: return {prod(m->args[0], one()), m->args[0]};
    case MorphTag::GammaTimes:
        return {prod(m->args[0], m->args[1]), prod(m->args[1], m->args[0])};
    case MorphTag::Delta:
        return {prod(m->args[0], sum(m->args[1], m->args[2])),
                sum(prod(m->args[0], m->args[1]), prod(m->args[0], m->args[2]))};
    case MorphTag::Epsilon: return {prod(m->args[0], zero()), zero()};
    case MorphTag::Inv: {
        Ends e = ends_rec(m->a, path + ".inv");
        return {e.cod, e.dom};
    }
    case MorphTag::Comp: {
        Ends f = ends_rec(m->a, path + ".first");
        Ends g = ends_rec(m->b, path + ".then");
        if (!obj_equal(f.cod, g.dom)) throw TypeError(path, f.cod, g.dom);
        return {f.dom, g.cod};
    }
    case MorphTag::SumM: {
        Ends f = ends_rec(m->a, path + ".left");
        Ends g = ends_rec(m->b, path + ".right");
        return {sum(f.dom, g.dom), sum(f.cod, g.cod)};
    }
    case MorphTag::ProdM: {
        Ends f = ends_rec(m->a, path + ".left");
        Ends g = ends_rec(m->b, path + ".right");
        return {prod(f.dom, g.dom), prod(f.cod, g.cod)};
    }
    }
    throw std::logic_error("unhandled morphism tag");
}

}  // namespace

Ends ends(const Morph& m) { return ends_rec(m, "$"); }
Obj dom(const Morph& m) { return ends(m).dom; }
Obj cod(const Morph& m) { return ends(m).cod; }

bool morph_equal(const Morph& x, const Morph& y) {
    if (x.get() == y.get()) return true;
    if (x->tag != y->tag) return false;
    if (x->args.size() != y->args.size()) return false;
    for (std::size_t i = 0; i < x->args.size(); ++i)
        if (!obj_equal(x->args[i], y->args[i])) return false;
    if ((x->a == nullptr) != (y->a == nullptr)) return false;
    if (x->a && !morph_equal(x->a, y->a)) return false;
    if ((x->b == nullptr) != (y->b == nullptr)) return false;
    if (x->b && !morph_equal(x->b, y->b)) return false;
    return true;
}

namespace {

// precedence: ; is 0, (+) is 1, (x) is 2, leaves are 3; binary ops associate left
void print_morph(std::ostringstream& out, const Morph& m, int parent) {
    auto obj_args = [&](const char* head) {
        out << head << "(";
        for (std::size_t i = 0; i < m->args.size(); ++i) {
            if (i) out << ",";
            out << to_string(m->args[i]);
        }
        out << ")";
    };
    auto binary = [&](const char* op, int prec) {
        bool paren = parent > prec;
        if (paren) out << "(";
        print_morph(out, m->a, prec);
        out << " " << op << " ";
        print_morph(out, m->b, prec + 1);
        if (paren) out << ")";
    };
    switch (m->tag) {
    case MorphTag::Id: obj_args("id"); return;
    case MorphTag::AlphaPlus: obj_args("aP"); return;
    case MorphTag::LambdaPlus: obj_args("lP"); return;
    case MorphTag::RhoPlus: obj_args("rP"); return;
    case MorphTag::GammaPlus: obj_args("gP"); return;
    case MorphTag::AlphaTimes: obj_args("aT"); return;
    case MorphTag::LambdaTimes: obj_args("lT"); return;
    case MorphTag::RhoTimes: obj_args("rT"); return;
    case MorphTag::GammaTimes: obj_args("gT"); return;
    case MorphTag::Delta: obj_args("delta"); return;
    case MorphTag::Epsilon: obj_args("eps"); return;
    case MorphTag::Inv:
        out << "inv(";
        print_morph(out, m->a, 0);
        out << ")";
        return;
    case MorphTag::Comp: binary(";", 0); return;
    case MorphTag::SumM: binary("(+)", 1); return;
    case MorphTag::ProdM: binary("(x)", 2); return;
    }
}

}  // namespace

std::string to_string(const Morph& m) {
    std::ostringstream out;
    print_morph(out, m, 0);
    return out.str();
}

}  // namespace braidcoh
