#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "surfdeform/pauli.hpp"

namespace surfdeform {

// Echelonized span of Pauli strings over the symplectic GF(2) vector space.
// Rows are kept as Pauli strings so reductions track phases: membership is a
// bit-span question, sign consistency a separate report.
class PauliSpan {
public:
    PauliSpan() = default;
    explicit PauliSpan(std::size_t n) : n_(n) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t qubits() const { return n_; }
    const std::vector<PauliString>& rows() const { return rows_; }

    // Residual of p after elimination; identity bits iff p is in the span.
    PauliString reduce(PauliString p) const;

    bool contains(const PauliString& p) const { return reduce(p).is_identity(); }

    // In-span with matching sign: residual is exactly +I.
    bool contains_signed(const PauliString& p) const {
        PauliString r = reduce(p);
        return r.is_identity() && r.phase() == 0;
    }

    // Returns true if p enlarged the span.
    bool add(const PauliString& p);

    // Back-eliminate and order rows by pivot; the result is the unique
    // reduced echelon basis of the span.
    void canonicalize();

private:
    static std::size_t pivot_of(const PauliString& p);

    std::size_t n_ = 0;
    std::vector<PauliString> rows_;        // echelon, ascending pivot
    std::vector<std::size_t> pivots_;
};

std::size_t gf2_rank(const std::vector<PauliString>& ops, std::size_t n);

bool spans_equal(const std::vector<PauliString>& a, const std::vector<PauliString>& b,
                 std::size_t n);

// Center of the group generated by `ops`: every element of the span that
// commutes with all generators. Canonical (reduced echelon) basis.
std::vector<PauliString> group_center(const std::vector<PauliString>& ops, std::size_t n);

// Symplectic Gram-Schmidt: peel anticommuting pairs off the candidate list.
// Candidates that end up commuting with everything are dropped. Deterministic
// given the input order.
std::vector<std::pair<PauliString, PauliString>> symplectic_pairs(
    std::vector<PauliString> pool);

}  // namespace surfdeform
