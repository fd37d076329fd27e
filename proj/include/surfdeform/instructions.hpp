#pragma once

#include <optional>
#include <vector>

#include "surfdeform/gauge.hpp"
#include "surfdeform/patch.hpp"
#include "surfdeform/schedule.hpp"

namespace surfdeform {

struct InstructionResult {
    CodePatch patch;
    CompositeInstruction instruction;
};

// Remove a single interior data qubit: two S2G introduce Z_q and X_q and
// demote the adjacent checks, G2G reshapes every gauge touching q into
// triangle operators, then q separates from the code carrying its gauge pair.
InstructionResult dataq_rm(const CodePatch& patch, Coord q);

// Remove a single interior syndrome qubit: single-site gauges on the check's
// data qubits demote the surrounding opposite-type checks (their product is
// the recovered octagon), the check itself is recovered as the product of the
// introduced gauges, and the ancilla retires.
InstructionResult syndromeq_rm(const CodePatch& patch, Coord q);

// Remove a defect on or adjacent to the named boundary. For a data defect,
// `fix` selects which single-site operator is fixed as a stabilizer (corner
// balancing chooses it; default is the opposite of the boundary type). For a
// boundary-syndrome defect, `data_choice` picks which adjacent data qubit
// leaves the patch (default: lowest coordinate).
InstructionResult patchq_rm(const CodePatch& patch, BoundarySide side, Coord defect,
                            std::optional<CheckType> fix = {},
                            std::optional<Coord> data_choice = {});

struct AddSite {
    enum class Role { Data, Syndrome };
    Coord site;
    Role role = Role::Data;
    char basis = 0;               // data sites: '0' or '+'
    CheckType ctype = CheckType::X;  // syndrome sites
    std::vector<Coord> support;      // syndrome sites: intended data support
};

// Incorporate new qubits beyond the current code. Data qubits enter as
// single-site stabilizers in the declared basis; each proposed check is then
// installed by upgrading an existing boundary check or by an S2G/G2S round
// that consumes the fresh single-site stabilizers.
InstructionResult patchq_add(const CodePatch& patch, const std::vector<AddSite>& sites);

// The operator an ancilla currently measures: the stabilizer or gauge whose
// support equals the ancilla's template support clipped to active qubits.
std::optional<PauliString> find_check_of(const CodePatch& patch, Coord ancilla,
                                         bool* is_stab = nullptr);

// Template data support of an ancilla position, clipped to active qubits.
std::vector<Coord> ancilla_template_support(const CodePatch& patch, Coord ancilla);

}  // namespace surfdeform
