#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "surfdeform/geometry.hpp"
#include "surfdeform/pauli.hpp"

namespace surfdeform {

// One replayable step of a deformation. The four gauge transformations are
// the physically meaningful entries (S2G and G2S measure an operator); the
// rest is bookkeeping that a replay applies verbatim.
struct Step {
    enum class Kind {
        S2G,          // measure new gauge `op`; `demoted` moved Stab -> Gauge
        G2S,          // measure gauge `op`; on -1 apply `op2` (byproduct)
        S2S,          // multiply stabilizers `op` * `op2` (replace first / append)
        G2G,          // replace gauge `op` by `op` * `op2`
        AddQubit,     // fresh data qubit at `site` in basis `basis` ('0' or '+')
        AddSyndrome,  // fresh ancilla at `site` of type `ctype`
        RetireStab,   // stop measuring stabilizer `op`
        RetireGauge,  // stop measuring gauge `op`
        RetireSyndrome,  // ancilla at `site` leaves service
        Disable,      // data qubit at `site` leaves the code
        SetBoundary,  // replace descriptor of `side` by `coords`
    };

    Kind kind{};
    PauliString op, op2;
    std::vector<PauliString> demoted;
    int outcome = +1;     // recorded G2S outcome at construction time
    bool replace = true;  // S2S mode
    Coord site{};
    char basis = 0;
    CheckType ctype = CheckType::X;
    BoundarySide side = BoundarySide::XL1;
    std::vector<Coord> coords;

    std::string str() const;
};

// Names of the composite instructions.
enum class InstructionName { DataQ_RM, SyndromeQ_RM, PatchQ_RM, PatchQ_ADD, Atomic };

const char* instruction_name(InstructionName n);

struct CompositeInstruction {
    InstructionName name = InstructionName::Atomic;
    std::string args;  // e.g. "Q(4,4)" or "XL2 [(0,10,data,plus), ...]"
    std::vector<Step> expansion;

    std::string header() const;
};

// Ordered instruction list; the unit of replayable deformation.
struct DeformationSchedule {
    std::vector<CompositeInstruction> instructions;

    void append(CompositeInstruction in) { instructions.push_back(std::move(in)); }
    void append(const DeformationSchedule& other) {
        instructions.insert(instructions.end(), other.instructions.begin(),
                            other.instructions.end());
    }
    bool empty() const { return instructions.empty(); }
    std::size_t step_count() const;

    void write_log(std::ostream& os) const;
};

}  // namespace surfdeform
