#include "cncsim/field.hpp"

#include <stdexcept>
#include <string>

namespace cncsim {

std::uint32_t GaloisField::default_polynomial(unsigned q) {
    // Primitive polynomials of degree 1..16, high bit included. The degree-8
    // entry is x^8+x^4+x^3+x^2+1 (0x11D), the usual Reed-Solomon field where
    // x is primitive. All entries are verified by the constructor's cycle
    // check, which any non-primitive polynomial fails.
    static const std::uint32_t table[17] = {
        0,
        0x3,     // x+1
        0x7,     // x^2+x+1
        0xB,     // x^3+x+1
        0x13,    // x^4+x+1
        0x25,    // x^5+x^2+1
        0x43,    // x^6+x+1
        0x89,    // x^7+x^3+1
        0x11D,   // x^8+x^4+x^3+x^2+1
        0x211,   // x^9+x^4+1
        0x409,   // x^10+x^3+1
        0x805,   // x^11+x^2+1
        0x1053,  // x^12+x^6+x^4+x+1
        0x201B,  // x^13+x^4+x^3+x+1
        0x4443,  // x^14+x^10+x^6+x+1
        0x8003,  // x^15+x+1
        0x1100B, // x^16+x^12+x^3+x+1
    };
    if (q < 1 || q > 16) {
        throw std::invalid_argument("field exponent q must be in [1, 16], got " + std::to_string(q));
    }
    return table[q];
}

GaloisField::GaloisField(unsigned q, std::uint32_t reduction_poly) : q_(q) {
    if (q < 1 || q > 16) {
        throw std::invalid_argument("field exponent q must be in [1, 16], got " + std::to_string(q));
    }
    poly_ = reduction_poly != 0 ? reduction_poly : default_polynomial(q);
    if ((poly_ >> q) != 1u) {
        throw std::invalid_argument("reduction polynomial must have degree q");
    }
    size_ = 1u << q_;
    alpha_ = xtimes(1); // x reduced mod p; equals 2 except in GF(2)

    exp_.assign(2 * order(), 0);
    log_.assign(size_, 0);
    std::vector<bool> seen(size_, false);

    Symbol b = 1;
    for (std::uint32_t i = 0; i < order(); ++i) {
        if (seen[b]) {
            throw std::invalid_argument("reduction polynomial is not primitive");
        }
        seen[b] = true;
        exp_[i] = b;
        exp_[i + order()] = b;
        log_[b] = i;
        b = xtimes(b);
    }
    if (b != 1) {
        throw std::invalid_argument("reduction polynomial is not primitive");
    }
}

Symbol GaloisField::xtimes(Symbol v) const {
    std::uint32_t shifted = static_cast<std::uint32_t>(v) << 1;
    if (shifted & size_) {
        shifted ^= poly_;
    }
    return static_cast<Symbol>(shifted);
}

Symbol GaloisField::div(Symbol a, Symbol b) const {
    if (b == 0) {
        throw std::domain_error("division by zero in GF(2^q)");
    }
    if (a == 0) {
        return 0;
    }
    return exp_[log_[a] + order() - log_[b]];
}

Symbol GaloisField::inv(Symbol a) const {
    if (a == 0) {
        throw std::domain_error("zero has no inverse in GF(2^q)");
    }
    return exp_[order() - log_[a]];
}

Symbol GaloisField::pow(Symbol base, std::uint64_t exponent) const {
    if (base == 0) {
        return exponent == 0 ? 1 : 0;
    }
    std::uint64_t e = (static_cast<std::uint64_t>(log_[base]) * exponent) % order();
    return exp_[e];
}

} // namespace cncsim
