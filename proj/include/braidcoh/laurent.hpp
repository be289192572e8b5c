#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace braidcoh {

using Int = boost::multiprecision::cpp_int;

/* Laurent polynomial in q with integer coefficients.
   Invariant: the term map never stores a zero coefficient. */
class Laurent {
public:
    Laurent() = default;  // zero
    static Laurent constant(Int c);
    static Laurent monomial(Int coeff, int exp);
    static Laurent q_power(int exp) { return monomial(1, exp); }
    static Laurent one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Int coeff(int exp) const;
    const std::map<int, Int>& terms() const { return terms_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator*(const Laurent& o) const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;

    // evaluation at q = 1, kept as a constant polynomial
    Laurent at_q1() const;

    std::string str() const;

    bool operator==(const Laurent& o) const = default;

private:
    std::map<int, Int> terms_;
};

}  // namespace braidcoh
