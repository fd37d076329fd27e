#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "surfdeform/bitvec.hpp"
#include "surfdeform/common.hpp"

namespace surfdeform {

// Signed Pauli string in symplectic GF(2) form. The stored operator is
// i^phase * prod_k X_k^{x_k} Z_k^{z_k} with X written before Z on each site,
// so a site with both bits set is Y up to phase (Y = i X Z). Values are
// immutable in spirit: every algebraic operation returns a new string.
class PauliString {
public:
    PauliString() = default;
    explicit PauliString(std::size_t n) : n_(n), x_(n), z_(n), phase_(0) {}

    static PauliString identity(std::size_t n) { return PauliString(n); }

    // Single-site factor; `which` is 'X', 'Y' or 'Z'.
    static PauliString single(std::size_t n, std::size_t site, char which) {
        PauliString p(n);
        switch (which) {
            case 'X': p.x_.set(site); break;
            case 'Z': p.z_.set(site); break;
            case 'Y': p.x_.set(site); p.z_.set(site); p.phase_ = 1; break;
            default: throw operand_error("unknown Pauli factor");
        }
        return p;
    }

    std::size_t size() const { return n_; }
    const BitVec& x_bits() const { return x_; }
    const BitVec& z_bits() const { return z_; }
    int phase() const { return phase_; }

    bool x(std::size_t i) const { return x_.get(i); }
    bool z(std::size_t i) const { return z_.get(i); }

    void set_x(std::size_t i, bool v = true) { x_.set(i, v); }
    void set_z(std::size_t i, bool v = true) { z_.set(i, v); }
    void set_phase(int ph) { phase_ = std::uint8_t(((ph % 4) + 4) % 4); }

    bool is_identity() const { return !x_.any() && !z_.any(); }
    bool is_real() const { return phase_ == 0 || phase_ == 2; }

    // Number of sites acted on; X and Z on the same site count once.
    std::size_t weight() const {
        std::size_t c = 0;
        const auto& xw = x_.words();
        const auto& zw = z_.words();
        for (std::size_t i = 0; i < xw.size(); ++i)
            c += std::size_t(std::popcount(xw[i] | zw[i]));
        return c;
    }

    bool pure_x() const { return !z_.any(); }
    bool pure_z() const { return !x_.any(); }

    bool commutes_with(const PauliString& q) const {
        check_dim(q);
        return !(x_.overlap_parity(q.z_) ^ z_.overlap_parity(q.x_));
    }

    PauliString operator*(const PauliString& q) const {
        check_dim(q);
        PauliString r(n_);
        r.x_ = x_; r.x_.xor_with(q.x_);
        r.z_ = z_; r.z_.xor_with(q.z_);
        int ph = phase_ + q.phase_ + (z_.overlap_parity(q.x_) ? 2 : 0);
        r.phase_ = std::uint8_t(ph & 3);
        return r;
    }

    PauliString inverse() const {
        PauliString r = *this;
        int ph = -int(phase_) - (z_.overlap_parity(x_) ? 2 : 0);
        r.phase_ = std::uint8_t(((ph % 4) + 4) % 4);
        return r;
    }

    // Grow to n sites (new sites act as identity).
    void extend(std::size_t n) {
        x_.resize(n);
        z_.resize(n);
        n_ = n;
    }

    bool same_bits(const PauliString& q) const { return x_ == q.x_ && z_ == q.z_; }

    bool operator==(const PauliString& q) const {
        return n_ == q.n_ && phase_ == q.phase_ && x_ == q.x_ && z_ == q.z_;
    }

    std::strong_ordering operator<=>(const PauliString& q) const {
        if (auto c = x_ <=> q.x_; c != 0) return c;
        if (auto c = z_ <=> q.z_; c != 0) return c;
        return phase_ <=> q.phase_;
    }

    // Diagnostic text form, e.g. "+X0 X1 Z4". Grammar: sign in {+,-,+i,-i},
    // then site-indexed factors in ascending site order; identity is "+I".
    std::string str() const;
    static PauliString parse(const std::string& text, std::size_t n);

private:
    void check_dim(const PauliString& q) const {
        if (n_ != q.n_) throw dimension_error("Pauli string length mismatch");
    }

    std::size_t n_ = 0;
    BitVec x_, z_;
    std::uint8_t phase_ = 0;
};

}  // namespace surfdeform
