#pragma once

#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "surfdeform/geometry.hpp"
#include "surfdeform/gf2.hpp"
#include "surfdeform/pauli.hpp"

namespace surfdeform {

struct Boundary {
    BoundarySide side{};
    CheckType type{};
    std::vector<Coord> qubits;  // ordered data coords along the side
    bool operator==(const Boundary&) const = default;
};

struct Violation {
    std::string condition;
    std::string description;
};

struct ValidityReport {
    bool ok = true;
    std::vector<Violation> violations;
    void fail(std::string cond, std::string desc) {
        ok = false;
        violations.push_back({std::move(cond), std::move(desc)});
    }
};

// A deformable surface-code patch. Pauli strings are indexed over the data
// qubits in `qubit_coords` order; the index map only grows, disabled qubits
// keep their slot with empty support. Measured sets are kept sorted so equal
// codes built through different instruction orders compare equal.
//
// Alongside the measured sets (stab_set / gauge_set) the patch carries the
// generator representation: gen_stabs, the logical pair, and the gauge pairs.
struct CodePatch {
    std::vector<Coord> qubit_coords;
    std::map<Coord, std::size_t> qubit_index;
    std::map<Coord, CheckType> syndrome_qubits;
    std::set<Coord> disabled;           // disabled data qubits
    std::set<Coord> disabled_ancillas;  // retired syndrome sites

    std::vector<PauliString> stab_set;   // measured every cycle
    std::vector<PauliString> gauge_set;  // measured on demand
    std::vector<PauliString> gen_stabs;  // stabilizer generators s_1..s_{n-l-1}
    PauliString logical_x, logical_z;
    std::vector<std::pair<PauliString, PauliString>> gauge_pairs;

    std::array<Boundary, 4> boundaries;

    bool operator==(const CodePatch&) const = default;

    std::size_t n() const { return qubit_coords.size(); }
    std::size_t active_data_count() const { return qubit_coords.size() - disabled.size(); }

    bool has_data(Coord c) const { return qubit_index.count(c) != 0; }
    bool is_disabled(Coord c) const { return disabled.count(c) != 0; }
    bool is_active_data(Coord c) const { return has_data(c) && !is_disabled(c); }
    bool has_syndrome(Coord c) const { return syndrome_qubits.count(c) != 0; }

    std::size_t index_of(Coord c) const;
    Coord coord_of(std::size_t i) const { return qubit_coords.at(i); }

    PauliString single(Coord c, char which) const {
        return PauliString::single(n(), index_of(c), which);
    }

    // Support helpers.
    bool op_touches(const PauliString& p, std::size_t idx) const {
        return p.x(idx) || p.z(idx);
    }
    std::vector<Coord> support_coords(const PauliString& p) const;

    const Boundary& boundary(BoundarySide s) const { return boundaries[std::size_t(s)]; }
    Boundary& boundary(BoundarySide s) { return boundaries[std::size_t(s)]; }
    bool on_boundary(Coord c, BoundarySide s) const;

    // Mutation helpers used by the transformation layer.
    std::size_t add_data_qubit(Coord c);  // extends every stored operator
    void insert_stab(const PauliString& p);
    void insert_gauge(const PauliString& p);
    void remove_stab(const PauliString& p);
    void remove_gauge(const PauliString& p);
    void insert_gen(const PauliString& p);
    void remove_gen(const PauliString& p);

    // Rebuild the generator representation in canonical form: reduced-echelon
    // center of <Meas> plus symplectic Gram-Schmidt pairs, logicals reduced
    // modulo the center. Same code, unique representation.
    void canonicalize();

    // Bounding box over active data qubits: {min, max} corners.
    std::pair<Coord, Coord> bounding_box() const;
};

// Pristine rotated surface code of distance d: d^2 data qubits, d^2-1 checks,
// logical Z along the left column, logical X along the top row.
CodePatch build_rotated_code(int d);

// Five-qubit cross fixture: center qubit shared by two X checks (s1, s2) and
// two Z checks (g1, g2). The minimal playground for the atomic instructions.
CodePatch build_cross_patch();

// Theorem-style generator checks: (1) independence, (2) conjugate pairs
// anticommute, (3) everything else commutes; plus support hygiene.
ValidityReport validate_generators(const CodePatch& patch);

// Measured-set checks: (1) Stab inside the stabilizer span, (2) Gauge inside
// the gauge algebra but outside the stabilizer span, (3) every stabilizer
// generator recoverable from <Meas>.
ValidityReport validate_meas(const CodePatch& patch);

bool group_contains(const std::vector<PauliString>& generators, const PauliString& p);

struct SignedMembership {
    bool in_span = false;
    bool sign_consistent = false;
};
SignedMembership group_contains_signed(const std::vector<PauliString>& generators,
                                       const PauliString& p);

}  // namespace surfdeform
