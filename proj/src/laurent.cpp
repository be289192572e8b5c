#include "braidcoh/laurent.hpp"

#include <sstream>

namespace braidcoh {

Laurent Laurent::constant(Int c) { return monomial(std::move(c), 0); }

Laurent Laurent::monomial(Int coeff, int exp) {
    Laurent p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Int Laurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) {
        Int& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) {
        Int& slot = terms_[e];
        slot -= c;
        if (slot == 0) terms_.erase(e);
    }
    return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Int& slot = r.terms_[e1 + e2];
            slot += c1 * c2;
            if (slot == 0) r.terms_.erase(e1 + e2);
        }
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
}

Laurent Laurent::at_q1() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return constant(s);
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponent first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str() << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace braidcoh
