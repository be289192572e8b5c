#pragma once

#include "braidcoh/expr.hpp"

#include <string>
#include <utility>
#include <vector>

namespace braidcoh {

class UnsupportedNode : public std::runtime_error {
public:
    explicit UnsupportedNode(const std::string& what) : std::runtime_error(what) {}
};

class StrandMismatch : public std::runtime_error {
public:
    StrandMismatch(int a, int b)
        : std::runtime_error("braid words live on " + std::to_string(a) + " and " +
                             std::to_string(b) + " strands") {}
};

struct BraidGen {
    int index;  // 1..strands-1
    int sign;   // +1 or -1
    bool operator==(const BraidGen&) const = default;
};

struct BraidWord {
    int strands = 0;
    std::vector<BraidGen> gens;
};

// positive crossing of the first a strands over the last b, in B_{a+b}
BraidWord block_crossing(int a, int b);

/* Braid word of a word in the strict multiplicative fragment: only Id,
   aT, gT, inv, ;, (x) over tensor powers of the single named atom (no +,
   0, 1, delta, eps); anything else raises UnsupportedNode. Associators
   map to the empty word, gT on tensor lengths (a,b) to block_crossing. */
BraidWord strict_image(const Morph& m, const std::string& atom);

/* Freely reduced word in the free group on x1..xn. */
struct FreeWord {
    std::vector<std::pair<int, int>> letters;  // (generator, ±1)
    void push(int gen, int sign);
    bool operator==(const FreeWord&) const = default;
};

/* Images of x1..xn under the automorphism induced by the braid word:
   s_i sends x_i to x_i x_{i+1} x_i^{-1} and x_{i+1} to x_i. Equality of
   these images decides equality in the braid group. */
std::vector<FreeWord> artin_images(const BraidWord& w);

bool braid_equal(const BraidWord& a, const BraidWord& b);

}  // namespace braidcoh
