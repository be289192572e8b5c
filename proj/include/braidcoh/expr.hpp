#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcoh {

/* Object expressions: the free (+,*,0,1) terms over named atoms. */

enum class ObjTag { Zero, One, Atom, Sum, Prod };

class ObjectExpr;
using Obj = std::shared_ptr<const ObjectExpr>;

class ObjectExpr {
public:
    ObjTag tag;
    std::string name;  // Atom
    Obj left, right;   // Sum / Prod
};

Obj zero();
Obj one();
Obj atom(std::string name);
Obj sum(Obj a, Obj b);
Obj prod(Obj a, Obj b);

bool obj_equal(const Obj& a, const Obj& b);
std::string to_string(const Obj& o);

/* Morphism words over the structural isomorphisms.

   Composition is written left to right throughout: comp(f, g) means
   "first f, then g", and its matrix is matrix(g) * matrix(f). */

enum class MorphTag {
    Id,
    AlphaPlus,   // (a+b)+c -> a+(b+c)
    LambdaPlus,  // 0+a -> a
    RhoPlus,     // a+0 -> a
    GammaPlus,   // a+b -> b+a
    AlphaTimes,  // (a*b)*c -> a*(b*c)
    LambdaTimes, // 1*a -> a
    RhoTimes,    // a*1 -> a
    GammaTimes,  // a*b -> b*a
    Delta,       // a*(b+c) -> (a*b)+(a*c)
    Epsilon,     // a*0 -> 0
    Inv,
    Comp,
    SumM,
    ProdM,
};

class MorphExpr;
using Morph = std::shared_ptr<const MorphExpr>;

class MorphExpr {
public:
    MorphTag tag;
    std::vector<Obj> args;  // object parameters of a primitive
    Morph a, b;             // Inv: a; Comp/SumM/ProdM: a, b
};

Morph id(Obj x);
Morph alpha_plus(Obj a, Obj b, Obj c);
Morph lambda_plus(Obj a);
Morph rho_plus(Obj a);
Morph gamma_plus(Obj a, Obj b);
Morph alpha_times(Obj a, Obj b, Obj c);
Morph lambda_times(Obj a);
Morph rho_times(Obj a);
Morph gamma_times(Obj a, Obj b);
Morph delta(Obj a, Obj b, Obj c);
Morph epsilon(Obj a);

Morph inv(Morph m);
Morph comp(Morph f, Morph g);   // raw node, boundaries not checked here
Morph compose(Morph f, Morph g);// checks cod(f) == dom(g)
Morph sum_m(Morph f, Morph g);
Morph prod_m(Morph f, Morph g);

/* Derived isomorphisms. */

// loop on x*y measuring the braiding: gT(x,y) ; gT(y,x)
Morph beta(Obj x, Obj y);
// right distributivity (a+b)*c -> (a*c)+(b*c), defined through delta
Morph delta_sharp(Obj a, Obj b, Obj c);
Morph delta_sharp_alt(Obj a, Obj b, Obj c);
// left annihilator 0*a -> 0, defined through eps
Morph lambda_star(Obj a);
Morph lambda_star_alt(Obj a);

class TypeError : public std::runtime_error {
public:
    TypeError(std::string path, Obj expected, Obj found);
    std::string path;  // node path from the root, "$" then .first/.then/.inv/.left/.right
    Obj expected, found;
};

struct Ends {
    Obj dom, cod;
};

/* Walk the word computing both boundaries; every Comp node is checked.
   Throws TypeError with the path of the offending node. */
Ends ends(const Morph& m);
Obj dom(const Morph& m);
Obj cod(const Morph& m);

bool morph_equal(const Morph& x, const Morph& y);
std::string to_string(const Morph& m);

}  // namespace braidcoh
