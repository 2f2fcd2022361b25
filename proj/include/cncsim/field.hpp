#pragma once

#include <cstdint>
#include <vector>

namespace cncsim {

// One field element. 16-bit storage covers every supported field (q <= 16).
using Symbol = std::uint16_t;

// GF(2^q) with log/exp tables over a primitive reduction polynomial.
//
// The tables are built by repeated multiplication with x: exp[i] = x^i mod p.
// The polynomial must be primitive, so that the powers of alpha = x visit
// every nonzero element exactly once; the constructor verifies this and
// rejects polynomials that fail the cycle check.
//
// Immutable after construction, safe to share across threads.
class GaloisField {
public:
    explicit GaloisField(unsigned q = 8, std::uint32_t reduction_poly = 0);

    unsigned q() const { return q_; }
    std::uint32_t polynomial() const { return poly_; }
    Symbol alpha() const { return alpha_; }

    // Number of elements (2^q) and order of the multiplicative group (2^q - 1).
    std::uint32_t size() const { return size_; }
    std::uint32_t order() const { return size_ - 1; }

    static std::uint32_t default_polynomial(unsigned q);

    // Addition in characteristic 2 is XOR (self-inverse, so sub == add).
    static Symbol add(Symbol a, Symbol b) { return a ^ b; }
    static Symbol sub(Symbol a, Symbol b) { return a ^ b; }

    Symbol mul(Symbol a, Symbol b) const {
        if (a == 0 || b == 0) {
            return 0;
        }
        // Doubled exp table avoids the mod: log(a)+log(b) < 2*order.
        return exp_[log_[a] + log_[b]];
    }

    Symbol div(Symbol a, Symbol b) const;

    // Multiplicative inverse; zero input means a caller tried to pivot on a
    // zero entry and is a domain error.
    Symbol inv(Symbol a) const;

    // base^e with 0^0 = 1. For base = alpha this is exp[e mod order].
    Symbol pow(Symbol base, std::uint64_t exponent) const;

    Symbol exp(std::uint32_t i) const { return exp_[i % order()]; }
    std::uint32_t log(Symbol a) const { return log_[a]; }

private:
    Symbol xtimes(Symbol v) const;

    unsigned q_;
    std::uint32_t poly_;
    std::uint32_t size_;
    Symbol alpha_;
    std::vector<Symbol> exp_;        // 2*order entries
    std::vector<std::uint32_t> log_; // size entries, log_[0] unused
};

} // namespace cncsim
