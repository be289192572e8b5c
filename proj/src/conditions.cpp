#include "braidcoh/conditions.hpp"

#include <chrono>

namespace braidcoh {

const std::vector<ConditionInfo>& registry() {
    // order must match the enum; figure splits L/R where one figure holds
    // two diagrams
    static const std::vector<ConditionInfo> table = {
        {ConditionName::AddPentagon, "AddPentagon", "F1", 4, false, true},
        {ConditionName::AddHexagon, "AddHexagon", "F2", 3, false, true},
        {ConditionName::AddUnitAssoc, "AddUnitAssoc", "F3", 2, false, true},
        {ConditionName::AddSymmetry, "AddSymmetry", "F4", 2, false, true},
        {ConditionName::MulPentagon, "MulPentagon", "F5", 4, false, true},
        {ConditionName::MulHexFront, "MulHexFront", "F6", 3, false, true},
        {ConditionName::MulHexBehind, "MulHexBehind", "F7", 3, false, true},
        {ConditionName::MulUnitAssoc, "MulUnitAssoc", "F8", 2, false, true},
        {ConditionName::RightDist2, "RightDist2", "F9L", 3, false, true},
        {ConditionName::RightDist0, "RightDist0", "F9R", 1, false, true},
        {ConditionName::DistAddComm, "DistAddComm", "F10", 3, false, true},
        {ConditionName::DistAddAssoc, "DistAddAssoc", "F11", 4, false, true},
        {ConditionName::DistZeroNeutral, "DistZeroNeutral", "F12", 2, false, true},
        {ConditionName::SeqDist22, "SeqDist22", "F13", 4, false, true},
        {ConditionName::SeqDist20, "SeqDist20", "F14", 2, false, true},
        {ConditionName::SeqDist02, "SeqDist02", "F15", 2, false, true},
        {ConditionName::SeqDist00, "SeqDist00", "F16", 0, false, true},
        {ConditionName::Expand22, "Expand22", "F17", 4, false, true},
        {ConditionName::Expand20, "Expand20", "F18L", 2, false, true},
        {ConditionName::Expand00, "Expand00", "F18R", 0, false, true},
        {ConditionName::JoyalStreet, "JoyalStreet", "F19", 3, false, true},
        {ConditionName::LapVII, "LapVII", "F20", 4, false, true},
        {ConditionName::VIIstep1, "VIIstep1", "F21", 4, false, true},
        {ConditionName::VIIstep2, "VIIstep2", "F22", 4, false, true},
        {ConditionName::VIIstep3, "VIIstep3", "F23", 4, false, true},
        {ConditionName::LapVIII, "LapVIII", "F24", 4, false, true},
        {ConditionName::VIIIstep1, "VIIIstep1", "F25", 4, false, true},
        {ConditionName::VIIIstep2, "VIIIstep2", "F26", 4, false, true},
        {ConditionName::VIIIstep3, "VIIIstep3", "F27", 4, false, true},
        {ConditionName::LapXVII, "LapXVII", "F28", 2, false, true},
        {ConditionName::XVIIstep1, "XVIIstep1", "F29", 2, false, true},
        {ConditionName::XVIIstep2, "XVIIstep2", "F30", 2, false, true},
        {ConditionName::XVIIstep3, "XVIIstep3", "F31", 2, false, true},
        {ConditionName::UnitTriple, "UnitTriple", "", 1, false, false},
        {ConditionName::DeltaSharpAlt, "DeltaSharpAlt", "", 3, false, true},
        {ConditionName::LambdaStarAlt, "LambdaStarAlt", "", 1, false, true},
        {ConditionName::NegMulSymmetry, "NegMulSymmetry", "", 2, true, true},
    };
    return table;
}

const ConditionInfo& info(ConditionName name) {
    return registry()[static_cast<std::size_t>(name)];
}

std::optional<ConditionName> lookup(std::string_view id_or_figure) {
    for (const ConditionInfo& c : registry())
        if (c.id == id_or_figure || (!c.figure.empty() && c.figure == id_or_figure))
            return c.name;
    return std::nullopt;
}

namespace {

// accumulates one cycle diagram
struct Cy {
    std::vector<Obj> vs;
    std::vector<Edge> es;
    std::size_t v(Obj o) {
        vs.push_back(std::move(o));
        return vs.size() - 1;
    }
    void e(std::size_t s, std::size_t d, Morph m) { es.push_back({s, d, std::move(m)}); }
    Diagram done(std::string name) {
        return Diagram::make(std::move(name), std::move(vs), std::move(es));
    }
};

Diagram add_pentagon(Obj A, Obj B, Obj C, Obj D, std::string name) {
    Cy c;
    auto v0 = c.v(sum(sum(sum(A, B), C), D));
    auto v1 = c.v(sum(sum(A, B), sum(C, D)));
    auto v2 = c.v(sum(A, sum(B, sum(C, D))));
    auto v3 = c.v(sum(A, sum(sum(B, C), D)));
    auto v4 = c.v(sum(sum(A, sum(B, C)), D));
    c.e(v0, v1, alpha_plus(sum(A, B), C, D));
    c.e(v1, v2, alpha_plus(A, B, sum(C, D)));
    c.e(v0, v4, sum_m(alpha_plus(A, B, C), id(D)));
    c.e(v4, v3, alpha_plus(A, sum(B, C), D));
    c.e(v3, v2, sum_m(id(A), alpha_plus(B, C, D)));
    return c.done(std::move(name));
}

Diagram mul_pentagon(Obj A, Obj B, Obj C, Obj D, std::string name) {
    Cy c;
    auto v0 = c.v(prod(prod(prod(A, B), C), D));
    auto v1 = c.v(prod(prod(A, B), prod(C, D)));
    auto v2 = c.v(prod(A, prod(B, prod(C, D))));
    auto v3 = c.v(prod(A, prod(prod(B, C), D)));
    auto v4 = c.v(prod(prod(A, prod(B, C)), D));
    c.e(v0, v1, alpha_times(prod(A, B), C, D));
    c.e(v1, v2, alpha_times(A, B, prod(C, D)));
    c.e(v0, v4, prod_m(alpha_times(A, B, C), id(D)));
    c.e(v4, v3, alpha_times(A, prod(B, C), D));
    c.e(v3, v2, prod_m(id(A), alpha_times(B, C, D)));
    return c.done(std::move(name));
}

Diagram add_hexagon(Obj A, Obj B, Obj C, std::string name) {
    Cy c;
    auto v0 = c.v(sum(sum(A, B), C));
    auto v1 = c.v(sum(A, sum(B, C)));
    auto v2 = c.v(sum(sum(B, C), A));
    auto v3 = c.v(sum(B, sum(C, A)));
    auto v4 = c.v(sum(B, sum(A, C)));
    auto v5 = c.v(sum(sum(B, A), C));
    c.e(v0, v1, alpha_plus(A, B, C));
    c.e(v1, v2, gamma_plus(A, sum(B, C)));
    c.e(v2, v3, alpha_plus(B, C, A));
    c.e(v4, v3, sum_m(id(B), gamma_plus(A, C)));
    c.e(v5, v4, alpha_plus(B, A, C));
    c.e(v0, v5, sum_m(gamma_plus(A, B), id(C)));
    return c.done(std::move(name));
}

Diagram mul_hex_front(Obj A, Obj B, Obj C, std::string name, bool invert_braidings) {
    auto braid = [&](Obj x, Obj y) {
        return invert_braidings ? inv(gamma_times(y, x)) : gamma_times(std::move(x), std::move(y));
    };
    Cy c;
    auto v0 = c.v(prod(prod(A, B), C));
    auto v1 = c.v(prod(A, prod(B, C)));
    auto v2 = c.v(prod(prod(B, C), A));
    auto v3 = c.v(prod(B, prod(C, A)));
    auto v4 = c.v(prod(B, prod(A, C)));
    auto v5 = c.v(prod(prod(B, A), C));
    c.e(v0, v1, alpha_times(A, B, C));
    c.e(v1, v2, braid(A, prod(B, C)));
    c.e(v2, v3, alpha_times(B, C, A));
    c.e(v4, v3, prod_m(id(B), braid(A, C)));
    c.e(v5, v4, alpha_times(B, A, C));
    c.e(v0, v5, prod_m(braid(A, B), id(C)));
    return c.done(std::move(name));
}

Diagram mul_hex_behind(Obj A, Obj B, Obj C, std::string name) {
    Cy c;
    auto v0 = c.v(prod(prod(A, B), C));
    auto v1 = c.v(prod(A, prod(B, C)));
    auto v2 = c.v(prod(prod(B, C), A));
    auto v3 = c.v(prod(B, prod(C, A)));
    auto v4 = c.v(prod(B, prod(A, C)));
    auto v5 = c.v(prod(prod(B, A), C));
    c.e(v0, v1, alpha_times(A, B, C));
    c.e(v2, v1, gamma_times(prod(B, C), A));
    c.e(v2, v3, alpha_times(B, C, A));
    c.e(v3, v4, prod_m(id(B), gamma_times(C, A)));
    c.e(v5, v4, alpha_times(B, A, C));
    c.e(v5, v0, prod_m(gamma_times(B, A), id(C)));
    return c.done(std::move(name));
}

}  // namespace

Diagram hexagon_inverted_variant(const std::vector<Obj>& atoms) {
    if (atoms.size() != 3) throw ArityError("hexagon_inverted_variant", 3, atoms.size());
    return mul_hex_front(atoms[0], atoms[1], atoms[2], "MulHexFrontInverted", true);
}

Diagram build(ConditionName name, const std::vector<Obj>& atoms) {
    const ConditionInfo& ci = info(name);
    if (!ci.is_diagram)
        throw std::invalid_argument(std::string(ci.id) +
                                    " is not a cycle diagram; use unit_triple_check");
    if (static_cast<int>(atoms.size()) != ci.arity)
        throw ArityError(ci.id, ci.arity, atoms.size());

    const Obj A = ci.arity > 0 ? atoms[0] : nullptr;
    const Obj B = ci.arity > 1 ? atoms[1] : nullptr;
    const Obj C = ci.arity > 2 ? atoms[2] : nullptr;
    const Obj D = ci.arity > 3 ? atoms[3] : nullptr;
    std::string nm(ci.id);

    switch (name) {
    case ConditionName::AddPentagon: return add_pentagon(A, B, C, D, nm);
    case ConditionName::AddHexagon: return add_hexagon(A, B, C, nm);
    case ConditionName::AddUnitAssoc: {
        Cy c;
        auto v0 = c.v(sum(sum(A, zero()), B));
        auto v1 = c.v(sum(A, sum(zero(), B)));
        auto v2 = c.v(sum(A, B));
        c.e(v0, v1, alpha_plus(A, zero(), B));
        c.e(v0, v2, sum_m(rho_plus(A), id(B)));
        c.e(v1, v2, sum_m(id(A), lambda_plus(B)));
        return c.done(nm);
    }
    case ConditionName::AddSymmetry: {
        Cy c;
        auto v0 = c.v(sum(A, B));
        auto v1 = c.v(sum(B, A));
        c.e(v0, v1, gamma_plus(A, B));
        c.e(v1, v0, gamma_plus(B, A));
        return c.done(nm);
    }
    case ConditionName::MulPentagon: return mul_pentagon(A, B, C, D, nm);
    case ConditionName::MulHexFront: return mul_hex_front(A, B, C, nm, false);
    case ConditionName::MulHexBehind: return mul_hex_behind(A, B, C, nm);
    case ConditionName::MulUnitAssoc: {
        Cy c;
        auto v0 = c.v(prod(prod(A, one()), B));
        auto v1 = c.v(prod(A, prod(one(), B)));
        auto v2 = c.v(prod(A, B));
        c.e(v0, v1, alpha_times(A, one(), B));
        c.e(v0, v2, prod_m(rho_times(A), id(B)));
        c.e(v1, v2, prod_m(id(A), lambda_times(B)));
        return c.done(nm);
    }
    case ConditionName::RightDist2: {
        Cy c;
        auto v0 = c.v(prod(A, sum(B, C)));
        auto v1 = c.v(sum(prod(A, B), prod(A, C)));
        auto v2 = c.v(prod(A, sum(B, C)));
        auto v3 = c.v(sum(prod(A, B), prod(A, C)));
        c.e(v0, v1, delta(A, B, C));
        c.e(v0, v2, beta(A, sum(B, C)));
        c.e(v1, v3, sum_m(beta(A, B), beta(A, C)));
        c.e(v2, v3, delta(A, B, C));
        return c.done(nm);
    }
    case ConditionName::RightDist0: {
        Cy c;
        auto v0 = c.v(prod(A, zero()));
        c.e(v0, v0, beta(A, zero()));
        return c.done(nm);
    }
    case ConditionName::DistAddComm: {
        Cy c;
        auto v0 = c.v(prod(A, sum(B, C)));
        auto v1 = c.v(sum(prod(A, B), prod(A, C)));
        auto v2 = c.v(prod(A, sum(C, B)));
        auto v3 = c.v(sum(prod(A, C), prod(A, B)));
        c.e(v0, v1, delta(A, B, C));
        c.e(v0, v2, prod_m(id(A), gamma_plus(B, C)));
        c.e(v2, v3, delta(A, C, B));
        c.e(v3, v1, gamma_plus(prod(A, C), prod(A, B)));
        return c.done(nm);
    }
    case ConditionName::DistAddAssoc: {
        Cy c;
        auto t0 = c.v(prod(A, sum(B, sum(C, D))));
        auto t1 = c.v(sum(prod(A, B), prod(A, sum(C, D))));
        auto t2 = c.v(sum(prod(A, B), sum(prod(A, C), prod(A, D))));
        auto b0 = c.v(prod(A, sum(sum(B, C), D)));
        auto b1 = c.v(sum(prod(A, sum(B, C)), prod(A, D)));
        auto b2 = c.v(sum(sum(prod(A, B), prod(A, C)), prod(A, D)));
        c.e(t0, t1, delta(A, B, sum(C, D)));
        c.e(t1, t2, sum_m(id(prod(A, B)), delta(A, C, D)));
        c.e(b0, b1, delta(A, sum(B, C), D));
        c.e(b1, b2, sum_m(delta(A, B, C), id(prod(A, D))));
        c.e(b0, t0, prod_m(id(A), alpha_plus(B, C, D)));
        c.e(b2, t2, alpha_plus(prod(A, B), prod(A, C), prod(A, D)));
        return c.done(nm);
    }
    case ConditionName::DistZeroNeutral: {
        Cy c;
        auto v0 = c.v(prod(A, sum(B, zero())));
        auto v1 = c.v(sum(prod(A, B), prod(A, zero())));
        auto v2 = c.v(prod(A, B));
        auto v3 = c.v(sum(prod(A, B), zero()));
        c.e(v0, v1, delta(A, B, zero()));
        c.e(v0, v2, prod_m(id(A), rho_plus(B)));
        c.e(v1, v3, sum_m(id(prod(A, B)), epsilon(A)));
        c.e(v3, v2, rho_plus(prod(A, B)));
        return c.done(nm);
    }
    case ConditionName::SeqDist22: {
        Cy c;
        auto v0 = c.v(prod(prod(A, B), sum(C, D)));
        auto v1 = c.v(prod(A, prod(B, sum(C, D))));
        auto v2 = c.v(prod(A, sum(prod(B, C), prod(B, D))));
        auto v3 = c.v(sum(prod(prod(A, B), C), prod(prod(A, B), D)));
        auto v4 = c.v(sum(prod(A, prod(B, C)), prod(A, prod(B, D))));
        c.e(v0, v1, alpha_times(A, B, sum(C, D)));
        c.e(v1, v2, prod_m(id(A), delta(B, C, D)));
        c.e(v2, v4, delta(A, prod(B, C), prod(B, D)));
        c.e(v0, v3, delta(prod(A, B), C, D));
        c.e(v3, v4, sum_m(alpha_times(A, B, C), alpha_times(A, B, D)));
        return c.done(nm);
    }
    case ConditionName::SeqDist20: {
        Cy c;
        auto v0 = c.v(prod(prod(A, B), zero()));
        auto v1 = c.v(prod(A, prod(B, zero())));
        auto v2 = c.v(zero());
        auto v3 = c.v(prod(A, zero()));
        c.e(v0, v1, alpha_times(A, B, zero()));
        c.e(v0, v2, epsilon(prod(A, B)));
        c.e(v1, v3, prod_m(id(A), epsilon(B)));
        c.e(v3, v2, epsilon(A));
        return c.done(nm);
    }
    case ConditionName::SeqDist02: {
        Cy c;
        auto v0 = c.v(prod(one(), sum(A, B)));
        auto v1 = c.v(sum(prod(one(), A), prod(one(), B)));
        auto v2 = c.v(sum(A, B));
        c.e(v0, v1, delta(one(), A, B));
        c.e(v0, v2, lambda_times(sum(A, B)));
        c.e(v1, v2, sum_m(lambda_times(A), lambda_times(B)));
        return c.done(nm);
    }
    case ConditionName::SeqDist00: {
        Cy c;
        auto v0 = c.v(prod(one(), zero()));
        auto v1 = c.v(zero());
        c.e(v0, v1, epsilon(one()));
        c.e(v0, v1, lambda_times(zero()));
        return c.done(nm);
    }
    case ConditionName::Expand22: {
        Cy c;
        auto X = c.v(prod(sum(A, B), sum(C, D)));
        auto L1 = c.v(prod(sum(C, D), sum(A, B)));
        auto L2 = c.v(sum(prod(sum(C, D), A), prod(sum(C, D), B)));
        auto L3 = c.v(sum(prod(A, sum(C, D)), prod(B, sum(C, D))));
        auto L4 = c.v(sum(sum(prod(A, C), prod(A, D)), sum(prod(B, C), prod(B, D))));
        auto L5 = c.v(sum(sum(sum(prod(A, C), prod(A, D)), prod(B, C)), prod(B, D)));
        auto L6 = c.v(sum(sum(prod(A, C), sum(prod(A, D), prod(B, C))), prod(B, D)));
        auto R1 = c.v(sum(prod(sum(A, B), C), prod(sum(A, B), D)));
        auto R2 = c.v(sum(prod(C, sum(A, B)), prod(D, sum(A, B))));
        auto R3 = c.v(sum(sum(prod(C, A), prod(C, B)), sum(prod(D, A), prod(D, B))));
        auto R4 = c.v(sum(sum(prod(A, C), prod(B, C)), sum(prod(A, D), prod(B, D))));
        auto R5 = c.v(sum(sum(sum(prod(A, C), prod(B, C)), prod(A, D)), prod(B, D)));
        auto R6 = c.v(sum(sum(prod(A, C), sum(prod(B, C), prod(A, D))), prod(B, D)));
        c.e(X, L1, gamma_times(sum(A, B), sum(C, D)));
        c.e(L1, L2, delta(sum(C, D), A, B));
        c.e(L3, L2, sum_m(gamma_times(A, sum(C, D)), gamma_times(B, sum(C, D))));
        c.e(L3, L4, sum_m(delta(A, C, D), delta(B, C, D)));
        c.e(L5, L4, alpha_plus(sum(prod(A, C), prod(A, D)), prod(B, C), prod(B, D)));
        c.e(L5, L6, sum_m(alpha_plus(prod(A, C), prod(A, D), prod(B, C)), id(prod(B, D))));
        c.e(X, R1, delta(sum(A, B), C, D));
        c.e(R1, R2, sum_m(gamma_times(sum(A, B), C), gamma_times(sum(A, B), D)));
        c.e(R2, R3, sum_m(delta(C, A, B), delta(D, A, B)));
        c.e(R4, R3, sum_m(sum_m(gamma_times(A, C), gamma_times(B, C)),
                          sum_m(gamma_times(A, D), gamma_times(B, D))));
        c.e(R5, R4, alpha_plus(sum(prod(A, C), prod(B, C)), prod(A, D), prod(B, D)));
        c.e(R5, R6, sum_m(alpha_plus(prod(A, C), prod(B, C), prod(A, D)), id(prod(B, D))));
        c.e(R6, L6, sum_m(sum_m(id(prod(A, C)), gamma_plus(prod(B, C), prod(A, D))),
                          id(prod(B, D))));
        return c.done(nm);
    }
    case ConditionName::Expand20: {
        Cy c;
        auto v0 = c.v(prod(sum(A, B), zero()));
        auto v1 = c.v(prod(zero(), sum(A, B)));
        auto v2 = c.v(sum(prod(zero(), A), prod(zero(), B)));
        auto v3 = c.v(zero());
        auto v4 = c.v(sum(zero(), zero()));
        auto v5 = c.v(sum(prod(A, zero()), prod(B, zero())));
        c.e(v0, v1, gamma_times(sum(A, B), zero()));
        c.e(v1, v2, delta(zero(), A, B));
        c.e(v5, v2, sum_m(gamma_times(A, zero()), gamma_times(B, zero())));
        c.e(v0, v3, epsilon(sum(A, B)));
        c.e(v4, v3, lambda_plus(zero()));
        c.e(v5, v4, sum_m(epsilon(A), epsilon(B)));
        return c.done(nm);
    }
    case ConditionName::Expand00: {
        Cy c;
        auto v0 = c.v(prod(zero(), zero()));
        c.e(v0, v0, gamma_times(zero(), zero()));
        return c.done(nm);
    }
    case ConditionName::JoyalStreet: {
        Cy c;
        auto w0 = c.v(prod(prod(A, B), C));
        auto w1 = c.v(prod(prod(B, A), C));
        auto w2 = c.v(prod(C, prod(B, A)));
        auto w3 = c.v(prod(A, prod(B, C)));
        auto w4 = c.v(prod(A, prod(C, B)));
        auto w5 = c.v(prod(prod(C, B), A));
        c.e(w0, w1, prod_m(gamma_times(A, B), id(C)));
        c.e(w1, w2, gamma_times(prod(B, A), C));
        c.e(w5, w2, alpha_times(C, B, A));
        c.e(w0, w3, alpha_times(A, B, C));
        c.e(w3, w4, prod_m(id(A), gamma_times(B, C)));
        c.e(w4, w5, gamma_times(A, prod(C, B)));
        return c.done(nm);
    }
    case ConditionName::LapVII: {
        Cy c;
        auto u0 = c.v(prod(prod(B, A), sum(C, D)));
        auto u1 = c.v(sum(prod(prod(B, A), C), prod(prod(B, A), D)));
        auto u2 = c.v(prod(sum(C, D), prod(B, A)));
        auto u3 = c.v(sum(prod(C, prod(B, A)), prod(D, prod(B, A))));
        auto u4 = c.v(prod(prod(sum(C, D), B), A));
        auto u5 = c.v(sum(prod(prod(C, B), A), prod(prod(D, B), A)));
        auto u6 = c.v(prod(prod(B, sum(C, D)), A));
        auto u7 = c.v(sum(prod(A, prod(C, B)), prod(A, prod(D, B))));
        auto u8 = c.v(prod(sum(prod(B, C), prod(B, D)), A));
        auto u9 = c.v(prod(A, sum(prod(C, B), prod(D, B))));
        auto u10 = c.v(prod(sum(prod(C, B), prod(D, B)), A));
        c.e(u0, u1, delta(prod(B, A), C, D));
        c.e(u1, u3, sum_m(gamma_times(prod(B, A), C), gamma_times(prod(B, A), D)));
        c.e(u0, u2, gamma_times(prod(B, A), sum(C, D)));
        c.e(u4, u2, alpha_times(sum(C, D), B, A));
        c.e(u5, u3, sum_m(alpha_times(C, B, A), alpha_times(D, B, A)));
        c.e(u6, u4, prod_m(gamma_times(B, sum(C, D)), id(A)));
        c.e(u7, u5, sum_m(gamma_times(A, prod(C, B)), gamma_times(A, prod(D, B))));
        c.e(u6, u8, prod_m(delta(B, C, D), id(A)));
        c.e(u9, u7, delta(A, prod(C, B), prod(D, B)));
        c.e(u9, u10, gamma_times(A, sum(prod(C, B), prod(D, B))));
        c.e(u8, u10, prod_m(sum_m(gamma_times(B, C), gamma_times(B, D)), id(A)));
        return c.done(nm);
    }
    case ConditionName::VIIstep1: {
        Cy c;
        auto m0 = c.v(prod(prod(B, A), sum(C, D)));
        auto m1 = c.v(sum(prod(prod(B, A), C), prod(prod(B, A), D)));
        auto m2 = c.v(prod(sum(C, D), prod(B, A)));
        auto m3 = c.v(sum(prod(prod(A, B), C), prod(prod(A, B), D)));
        auto m4 = c.v(prod(prod(sum(C, D), B), A));
        auto m5 = c.v(sum(prod(A, prod(B, C)), prod(A, prod(B, D))));
        auto m6 = c.v(prod(A, prod(sum(C, D), B)));
        auto m7 = c.v(sum(prod(A, prod(C, B)), prod(A, prod(D, B))));
        auto m8 = c.v(prod(A, prod(B, sum(C, D))));
        auto m9 = c.v(prod(A, sum(prod(C, B), prod(D, B))));
        auto m10 = c.v(prod(A, sum(prod(B, C), prod(B, D))));
        c.e(m0, m1, delta(prod(B, A), C, D));
        c.e(m3, m1, sum_m(prod_m(gamma_times(A, B), id(C)), prod_m(gamma_times(A, B), id(D))));
        c.e(m0, m2, gamma_times(prod(B, A), sum(C, D)));
        c.e(m3, m5, sum_m(alpha_times(A, B, C), alpha_times(A, B, D)));
        c.e(m4, m2, alpha_times(sum(C, D), B, A));
        c.e(m5, m7, sum_m(prod_m(id(A), gamma_times(B, C)), prod_m(id(A), gamma_times(B, D))));
        c.e(m6, m4, gamma_times(A, prod(sum(C, D), B)));
        c.e(m9, m7, delta(A, prod(C, B), prod(D, B)));
        c.e(m8, m6, prod_m(id(A), gamma_times(B, sum(C, D))));
        c.e(m10, m9, prod_m(id(A), sum_m(gamma_times(B, C), gamma_times(B, D))));
        c.e(m8, m10, prod_m(id(A), delta(B, C, D)));
        return c.done(nm);
    }
    case ConditionName::VIIstep2: {
        Cy c;
        auto n0 = c.v(prod(prod(B, A), sum(C, D)));
        auto n1 = c.v(sum(prod(prod(B, A), C), prod(prod(B, A), D)));
        auto n2 = c.v(prod(sum(C, D), prod(B, A)));
        auto n3 = c.v(sum(prod(prod(A, B), C), prod(prod(A, B), D)));
        auto n4 = c.v(prod(prod(sum(C, D), B), A));
        auto n5 = c.v(prod(prod(A, B), sum(C, D)));
        auto n6 = c.v(prod(A, prod(sum(C, D), B)));
        auto n7 = c.v(prod(A, prod(B, sum(C, D))));
        c.e(n0, n1, delta(prod(B, A), C, D));
        c.e(n3, n1, sum_m(prod_m(gamma_times(A, B), id(C)), prod_m(gamma_times(A, B), id(D))));
        c.e(n0, n2, gamma_times(prod(B, A), sum(C, D)));
        c.e(n5, n3, delta(prod(A, B), C, D));
        c.e(n4, n2, alpha_times(sum(C, D), B, A));
        c.e(n5, n7, alpha_times(A, B, sum(C, D)));
        c.e(n6, n4, gamma_times(A, prod(sum(C, D), B)));
        c.e(n7, n6, prod_m(id(A), gamma_times(B, sum(C, D))));
        return c.done(nm);
    }
    case ConditionName::VIIstep3: {
        Cy c;
        auto q0 = c.v(prod(prod(B, A), sum(C, D)));
        auto q1 = c.v(prod(sum(C, D), prod(B, A)));
        auto q2 = c.v(prod(prod(sum(C, D), B), A));
        auto q3 = c.v(prod(prod(A, B), sum(C, D)));
        auto q4 = c.v(prod(A, prod(sum(C, D), B)));
        auto q5 = c.v(prod(A, prod(B, sum(C, D))));
        c.e(q3, q0, prod_m(gamma_times(A, B), id(sum(C, D))));
        c.e(q0, q1, gamma_times(prod(B, A), sum(C, D)));
        c.e(q2, q1, alpha_times(sum(C, D), B, A));
        c.e(q3, q5, alpha_times(A, B, sum(C, D)));
        c.e(q4, q2, gamma_times(A, prod(sum(C, D), B)));
        c.e(q5, q4, prod_m(id(A), gamma_times(B, sum(C, D))));
        return c.done(nm);
    }
    case ConditionName::LapVIII: {
        Cy c;
        auto w0 = c.v(prod(A, sum(prod(B, C), prod(B, D))));
        auto w1 = c.v(prod(A, sum(prod(C, B), prod(D, B))));
        auto w2 = c.v(sum(prod(A, prod(C, B)), prod(A, prod(D, B))));
        auto w3 = c.v(prod(A, prod(B, sum(C, D))));
        auto w4 = c.v(sum(prod(prod(A, C), B), prod(prod(A, D), B)));
        auto w5 = c.v(prod(A, prod(sum(C, D), B)));
        auto w6 = c.v(sum(prod(B, prod(A, C)), prod(B, prod(A, D))));
        auto w7 = c.v(prod(prod(A, sum(C, D)), B));
        auto w8 = c.v(prod(sum(prod(A, C), prod(A, D)), B));
        auto w9 = c.v(prod(B, sum(prod(A, C), prod(A, D))));
        c.e(w0, w1, prod_m(id(A), sum_m(gamma_times(B, C), gamma_times(B, D))));
        c.e(w1, w2, delta(A, prod(C, B), prod(D, B)));
        c.e(w4, w2, sum_m(alpha_times(A, C, B), alpha_times(A, D, B)));
        c.e(w3, w0, prod_m(id(A), delta(B, C, D)));
        c.e(w6, w4, sum_m(gamma_times(B, prod(A, C)), gamma_times(B, prod(A, D))));
        c.e(w3, w5, prod_m(id(A), gamma_times(B, sum(C, D))));
        c.e(w9, w6, delta(B, prod(A, C), prod(A, D)));
        c.e(w7, w5, alpha_times(A, sum(C, D), B));
        c.e(w7, w8, prod_m(delta(A, C, D), id(B)));
        c.e(w9, w8, gamma_times(B, sum(prod(A, C), prod(A, D))));
        return c.done(nm);
    }
    case ConditionName::VIIIstep1: {
        Cy c;
        auto p0 = c.v(sum(prod(prod(A, B), C), prod(prod(A, B), D)));
        auto p1 = c.v(sum(prod(A, prod(B, C)), prod(A, prod(B, D))));
        auto p2 = c.v(prod(prod(A, B), sum(C, D)));
        auto p3 = c.v(sum(prod(A, prod(C, B)), prod(A, prod(D, B))));
        auto p4 = c.v(prod(A, prod(B, sum(C, D))));
        auto p5 = c.v(sum(prod(prod(A, C), B), prod(prod(A, D), B)));
        auto p6 = c.v(prod(A, prod(sum(C, D), B)));
        auto p7 = c.v(sum(prod(B, prod(A, C)), prod(B, prod(A, D))));
        auto p8 = c.v(prod(prod(A, sum(C, D)), B));
        auto p9 = c.v(prod(sum(prod(A, C), prod(A, D)), B));
        auto p10 = c.v(prod(B, sum(prod(A, C), prod(A, D))));
        c.e(p0, p1, sum_m(alpha_times(A, B, C), alpha_times(A, B, D)));
        c.e(p1, p3, sum_m(prod_m(id(A), gamma_times(B, C)), prod_m(id(A), gamma_times(B, D))));
        c.e(p2, p0, delta(prod(A, B), C, D));
        c.e(p5, p3, sum_m(alpha_times(A, C, B), alpha_times(A, D, B)));
        c.e(p2, p4, alpha_times(A, B, sum(C, D)));
        c.e(p7, p5, sum_m(gamma_times(B, prod(A, C)), gamma_times(B, prod(A, D))));
        c.e(p4, p6, prod_m(id(A), gamma_times(B, sum(C, D))));
        c.e(p10, p7, delta(B, prod(A, C), prod(A, D)));
        c.e(p8, p6, alpha_times(A, sum(C, D), B));
        c.e(p8, p9, prod_m(delta(A, C, D), id(B)));
        c.e(p10, p9, gamma_times(B, sum(prod(A, C), prod(A, D))));
        return c.done(nm);
    }
    case ConditionName::VIIIstep2: {
        Cy c;
        auto r0 = c.v(sum(prod(prod(A, B), C), prod(prod(A, B), D)));
        auto r1 = c.v(prod(prod(A, B), sum(C, D)));
        auto r2 = c.v(sum(prod(prod(B, A), C), prod(prod(B, A), D)));
        auto r3 = c.v(prod(A, prod(B, sum(C, D))));
        auto r4 = c.v(prod(A, prod(sum(C, D), B)));
        auto r5 = c.v(sum(prod(B, prod(A, C)), prod(B, prod(A, D))));
        auto r6 = c.v(prod(prod(A, sum(C, D)), B));
        auto r7 = c.v(prod(sum(prod(A, C), prod(A, D)), B));
        auto r8 = c.v(prod(B, sum(prod(A, C), prod(A, D))));
        c.e(r2, r0, sum_m(prod_m(gamma_times(B, A), id(C)), prod_m(gamma_times(B, A), id(D))));
        c.e(r1, r0, delta(prod(A, B), C, D));
        c.e(r2, r5, sum_m(alpha_times(B, A, C), alpha_times(B, A, D)));
        c.e(r1, r3, alpha_times(A, B, sum(C, D)));
        c.e(r3, r4, prod_m(id(A), gamma_times(B, sum(C, D))));
        c.e(r8, r5, delta(B, prod(A, C), prod(A, D)));
        c.e(r6, r4, alpha_times(A, sum(C, D), B));
        c.e(r6, r7, prod_m(delta(A, C, D), id(B)));
        c.e(r8, r7, gamma_times(B, sum(prod(A, C), prod(A, D))));
        return c.done(nm);
    }
    case ConditionName::VIIIstep3: {
        Cy c;
        auto s0 = c.v(sum(prod(prod(A, B), C), prod(prod(A, B), D)));
        auto s1 = c.v(prod(prod(A, B), sum(C, D)));
        auto s2 = c.v(sum(prod(prod(B, A), C), prod(prod(B, A), D)));
        auto s3 = c.v(prod(prod(B, A), sum(C, D)));
        auto s4 = c.v(sum(prod(B, prod(A, C)), prod(B, prod(A, D))));
        auto s5 = c.v(prod(B, prod(A, sum(C, D))));
        auto s6 = c.v(prod(B, sum(prod(A, C), prod(A, D))));
        c.e(s2, s0, sum_m(prod_m(gamma_times(B, A), id(C)), prod_m(gamma_times(B, A), id(D))));
        c.e(s1, s0, delta(prod(A, B), C, D));
        c.e(s2, s4, sum_m(alpha_times(B, A, C), alpha_times(B, A, D)));
        c.e(s3, s1, prod_m(gamma_times(B, A), id(sum(C, D))));
        c.e(s3, s5, alpha_times(B, A, sum(C, D)));
        c.e(s6, s4, delta(B, prod(A, C), prod(A, D)));
        c.e(s5, s6, prod_m(id(B), delta(A, C, D)));
        return c.done(nm);
    }
    case ConditionName::LapXVII: {
        Cy c;
        auto x0 = c.v(prod(A, prod(zero(), B)));
        auto x1 = c.v(prod(prod(A, zero()), B));
        auto x2 = c.v(prod(A, prod(B, zero())));
        auto x3 = c.v(prod(zero(), B));
        auto x4 = c.v(prod(A, zero()));
        auto x5 = c.v(zero());
        auto x6 = c.v(prod(B, zero()));
        c.e(x1, x0, alpha_times(A, zero(), B));
        c.e(x2, x0, prod_m(id(A), gamma_times(B, zero())));
        c.e(x2, x4, prod_m(id(A), epsilon(B)));
        c.e(x1, x3, prod_m(epsilon(A), id(B)));
        c.e(x4, x5, epsilon(A));
        c.e(x6, x5, epsilon(B));
        c.e(x6, x3, gamma_times(B, zero()));
        return c.done(nm);
    }
    case ConditionName::XVIIstep1: {
        Cy c;
        auto y0 = c.v(prod(A, prod(zero(), B)));
        auto y1 = c.v(prod(prod(A, zero()), B));
        auto y2 = c.v(prod(A, prod(B, zero())));
        auto y3 = c.v(prod(B, prod(A, zero())));
        auto y4 = c.v(prod(A, zero()));
        auto y5 = c.v(zero());
        auto y6 = c.v(prod(B, zero()));
        c.e(y1, y0, alpha_times(A, zero(), B));
        c.e(y2, y0, prod_m(id(A), gamma_times(B, zero())));
        c.e(y2, y4, prod_m(id(A), epsilon(B)));
        c.e(y3, y1, gamma_times(B, prod(A, zero())));
        c.e(y3, y6, prod_m(id(B), epsilon(A)));
        c.e(y4, y5, epsilon(A));
        c.e(y6, y5, epsilon(B));
        return c.done(nm);
    }
    case ConditionName::XVIIstep2: {
        Cy c;
        auto z0 = c.v(prod(prod(A, B), zero()));
        auto z1 = c.v(prod(prod(B, A), zero()));
        auto z2 = c.v(prod(A, prod(B, zero())));
        auto z3 = c.v(prod(B, prod(A, zero())));
        auto z4 = c.v(prod(A, zero()));
        auto z5 = c.v(zero());
        auto z6 = c.v(prod(B, zero()));
        c.e(z0, z2, alpha_times(A, B, zero()));
        c.e(z1, z0, prod_m(gamma_times(B, A), id(zero())));
        c.e(z2, z4, prod_m(id(A), epsilon(B)));
        c.e(z1, z3, alpha_times(B, A, zero()));
        c.e(z3, z6, prod_m(id(B), epsilon(A)));
        c.e(z4, z5, epsilon(A));
        c.e(z6, z5, epsilon(B));
        return c.done(nm);
    }
    case ConditionName::XVIIstep3: {
        Cy c;
        auto t0 = c.v(prod(prod(A, B), zero()));
        auto t1 = c.v(prod(prod(B, A), zero()));
        auto t2 = c.v(zero());
        c.e(t0, t2, epsilon(prod(A, B)));
        c.e(t1, t0, prod_m(gamma_times(B, A), id(zero())));
        c.e(t1, t2, epsilon(prod(B, A)));
        return c.done(nm);
    }
    case ConditionName::DeltaSharpAlt: {
        Cy c;
        auto v0 = c.v(prod(sum(A, B), C));
        auto v1 = c.v(sum(prod(A, C), prod(B, C)));
        c.e(v0, v1, delta_sharp(A, B, C));
        c.e(v0, v1, delta_sharp_alt(A, B, C));
        return c.done(nm);
    }
    case ConditionName::LambdaStarAlt: {
        Cy c;
        auto v0 = c.v(prod(zero(), A));
        auto v1 = c.v(zero());
        c.e(v0, v1, lambda_star(A));
        c.e(v0, v1, lambda_star_alt(A));
        return c.done(nm);
    }
    case ConditionName::NegMulSymmetry: {
        Cy c;
        auto v0 = c.v(prod(A, B));
        auto v1 = c.v(prod(B, A));
        c.e(v0, v1, gamma_times(A, B));
        c.e(v1, v0, gamma_times(B, A));
        return c.done(nm);
    }
    case ConditionName::UnitTriple: break;  // rejected above
    }
    throw std::logic_error("unhandled condition");
}

CommuteReport unit_triple_check(const Obj& x, const GradedModel& model, const Assignment& asg) {
    const Morph m1 = rho_times(x);
    const Morph m2 = comp(gamma_times(x, one()), lambda_times(x));
    const Morph m3 = comp(inv(gamma_times(one(), x)), lambda_times(x));
    const PolyMatrix a = interpret_morphism(m1, asg, model);
    const PolyMatrix b = interpret_morphism(m2, asg, model);
    const PolyMatrix c = interpret_morphism(m3, asg, model);

    CommuteReport rep;
    rep.max_dim = a.rows();
    rep.vacuous = a.is_identity() && b.is_identity() && c.is_identity();
    rep.commutes = matrix_equal(a, b) && matrix_equal(b, c);
    if (!rep.commutes) {
        const PolyMatrix& lhs = matrix_equal(a, b) ? b : a;
        const PolyMatrix& rhs = matrix_equal(a, b) ? c : b;
        for (std::size_t r = 0; r < lhs.rows() && !rep.witness; ++r)
            for (std::size_t cc = 0; cc < lhs.cols(); ++cc)
                if (!(lhs.at(r, cc) == rhs.at(r, cc))) {
                    rep.witness = Witness{r, cc, lhs.at(r, cc), rhs.at(r, cc)};
                    break;
                }
    }
    return rep;
}

namespace {

const char* const kSuiteAtoms[4] = {"A", "B", "C", "D"};

}  // namespace

ConditionReport check_condition(ConditionName name, const GradedModel& model,
                                const Assignment& asg, std::size_t base, Orientation o) {
    const ConditionInfo& ci = info(name);
    ConditionReport out;
    out.name = name;
    out.id = std::string(ci.id);
    out.figure = std::string(ci.figure);
    out.expected_commutes = !ci.expect_fail;
    out.base_vertex = base;

    std::vector<Obj> atoms;
    for (int i = 0; i < ci.arity; ++i) atoms.push_back(atom(kSuiteAtoms[i]));

    const auto t0 = std::chrono::steady_clock::now();
    CommuteReport rep;
    if (!ci.is_diagram) {
        rep = unit_triple_check(atoms[0], model, asg);
        out.base_vertex = 0;
    } else {
        rep = check_commutes(build(name, atoms), model, asg, base, o);
    }
    const auto t1 = std::chrono::steady_clock::now();

    out.commutes = rep.commutes;
    out.met = (out.commutes == out.expected_commutes);
    // a passing run of the expected-fail control means the model was too
    // degenerate to see the braiding; report that as vacuous
    out.vacuous = ci.expect_fail ? rep.commutes : rep.vacuous;
    out.max_dim = rep.max_dim;
    out.witness = rep.witness;
    out.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return out;
}

SuiteReport run_suite(const GradedModel& model, const Assignment& asg) {
    SuiteReport suite;
    suite.ok = true;
    for (const ConditionInfo& ci : registry()) {
        suite.conditions.push_back(check_condition(ci.name, model, asg));
        if (!suite.conditions.back().met) suite.ok = false;
    }
    return suite;
}

Assignment default_assignment() {
    Assignment asg;
    for (const char* name : kSuiteAtoms) asg.atoms[name] = {0, 1};
    return asg;
}

}  // namespace braidcoh
