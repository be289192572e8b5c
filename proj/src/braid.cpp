#include "braidcoh/braid.hpp"

#include <algorithm>

namespace braidcoh {

BraidWord block_crossing(int a, int b) {
    BraidWord w;
    w.strands = a + b;
    // each strand of the second block passes under the whole first block
    for (int j = 1; j <= b; ++j)
        for (int i = a + j - 1; i >= j; --i) w.gens.push_back({i, +1});
    return w;
}

namespace {

int tensor_len(const Obj& o, const std::string& atom) {
    switch (o->tag) {
    case ObjTag::Atom:
        if (o->name == atom) return 1;
        throw UnsupportedNode("object atom " + o->name + " is not " + atom);
    case ObjTag::Prod: return tensor_len(o->left, atom) + tensor_len(o->right, atom);
    default:
        throw UnsupportedNode("object " + to_string(o) +
                              " is outside the strict multiplicative fragment");
    }
}

BraidWord strict_rec(const Morph& m, const std::string& atom) {
    switch (m->tag) {
    case MorphTag::Id: return {tensor_len(m->args[0], atom), {}};
    case MorphTag::AlphaTimes:
        return {tensor_len(m->args[0], atom) + tensor_len(m->args[1], atom) +
                    tensor_len(m->args[2], atom),
                {}};
    case MorphTag::GammaTimes:
        return block_crossing(tensor_len(m->args[0], atom), tensor_len(m->args[1], atom));
    case MorphTag::Inv: {
        BraidWord w = strict_rec(m->a, atom);
        std::reverse(w.gens.begin(), w.gens.end());
        for (BraidGen& g : w.gens) g.sign = -g.sign;
        return w;
    }
    case MorphTag::Comp: {
        BraidWord f = strict_rec(m->a, atom);
        BraidWord g = strict_rec(m->b, atom);
        if (f.strands != g.strands) throw StrandMismatch(f.strands, g.strands);
        f.gens.insert(f.gens.end(), g.gens.begin(), g.gens.end());
        return f;
    }
    case MorphTag::ProdM: {
        BraidWord f = strict_rec(m->a, atom);
        BraidWord g = strict_rec(m->b, atom);
        for (const BraidGen& x : g.gens) f.gens.push_back({x.index + f.strands, x.sign});
        f.strands += g.strands;
        return f;
    }
    default:
        throw UnsupportedNode("morphism node " + to_string(m) +
                              " is outside the strict multiplicative fragment");
    }
}

}  // namespace

BraidWord strict_image(const Morph& m, const std::string& atom) {
    ends(m);  // reject ill-bounded words up front
    return strict_rec(m, atom);
}

void FreeWord::push(int gen, int sign) {
    if (!letters.empty() && letters.back().first == gen && letters.back().second == -sign)
        letters.pop_back();
    else
        letters.emplace_back(gen, sign);
}

namespace {

// image of one free-group letter under s_i^sign, appended reduced
void subst_letter(FreeWord& out, int j, int t, int i, int sign) {
    // images of the positive generator x_j
    std::vector<std::pair<int, int>> img;
    if (sign > 0) {
        if (j == i) img = {{i, 1}, {i + 1, 1}, {i, -1}};
        else if (j == i + 1) img = {{i, 1}};
        else img = {{j, 1}};
    } else {
        if (j == i) img = {{i + 1, 1}};
        else if (j == i + 1) img = {{i + 1, -1}, {i, 1}, {i + 1, 1}};
        else img = {{j, 1}};
    }
    if (t > 0)
        for (auto [g, s] : img) out.push(g, s);
    else
        for (auto it = img.rbegin(); it != img.rend(); ++it) out.push(it->first, -it->second);
}

}  // namespace

std::vector<FreeWord> artin_images(const BraidWord& w) {
    const int n = w.strands;
    std::vector<FreeWord> images(n);
    for (int j = 1; j <= n; ++j) images[j - 1].letters = {{j, 1}};
    for (const BraidGen& g : w.gens) {
        if (g.index < 1 || g.index >= n)
            throw std::out_of_range("generator s" + std::to_string(g.index) +
                                    " needs at least " + std::to_string(g.index + 1) +
                                    " strands");
        for (FreeWord& word : images) {
            FreeWord next;
            for (auto [j, t] : word.letters) subst_letter(next, j, t, g.index, g.sign);
            word = std::move(next);
        }
    }
    return images;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw StrandMismatch(a.strands, b.strands);
    return artin_images(a) == artin_images(b);
}

}  // namespace braidcoh
