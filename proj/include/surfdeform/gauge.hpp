#pragma once

#include <cstddef>
#include <vector>

#include "surfdeform/patch.hpp"
#include "surfdeform/schedule.hpp"

namespace surfdeform {

struct GaugeOptions {
    // Honest GF(2) span checks on preconditions. Composite instructions pass
    // false and supply witnesses instead; the public surface keeps them on.
    bool verify_spans = true;
};

struct AtomicResult {
    CodePatch patch;
    Step step;
};

// Stabilizer-to-gauge: measure a new operator, demote every anticommuting
// stabilizer, update the generator representation so exactly one former
// generator pairs with the new gauge. A new gauge already inside the gauge
// algebra is accepted as a redundant measurement (no demotions).
AtomicResult s2g(const CodePatch& patch, const PauliString& new_gauge,
                 const GaugeOptions& opts = {});

// Gauge-to-stabilizer: fix a gauge operator by measuring it every cycle.
// Preparatory G2G reductions shrink the anticommuting set to one; that
// partner is consumed and recorded as the byproduct to apply on outcome -1.
// A determined gauge (inside the stabilizer span) promotes deterministically.
AtomicResult g2s(const CodePatch& patch, const PauliString& gauge, int outcome,
                 const GaugeOptions& opts = {});

// Stabilizer-to-stabilizer: multiply entries a and b of stab_set; the product
// replaces entry a or is appended. Indices refer to the sorted stab_set.
AtomicResult s2s(const CodePatch& patch, std::size_t a, std::size_t b, bool replace);

// Gauge-to-gauge: replace gauge_set[g] by its product with a measured
// operator m. Degenerate products (inside the stabilizer span) are rejected.
AtomicResult g2g(const CodePatch& patch, std::size_t g, const PauliString& m,
                 const GaugeOptions& opts = {});

// In-place step application used by composites and schedule replay.
// All entry points below mutate `patch` and return the recorded step.
namespace detail {

Step s2g_mut(CodePatch& patch, PauliString new_gauge, const GaugeOptions& opts,
             const std::vector<PauliString>* redundancy_witness = nullptr);
Step g2s_mut(CodePatch& patch, PauliString gauge, int outcome, const GaugeOptions& opts);
Step s2s_mut(CodePatch& patch, PauliString a, PauliString b, bool replace);
Step g2g_mut(CodePatch& patch, PauliString g, PauliString m,
             const GaugeOptions& opts);
Step add_qubit_mut(CodePatch& patch, Coord site, char basis);
Step add_syndrome_mut(CodePatch& patch, Coord site, CheckType t);
Step retire_stab_mut(CodePatch& patch, PauliString op);
Step retire_gauge_mut(CodePatch& patch, PauliString op);
Step retire_syndrome_mut(CodePatch& patch, Coord site);
// basis = 0: gauge-qubit separation (the removed qubit carries a gauge pair);
// basis = 'X'/'Z': the qubit was fixed by a single-site stabilizer of that type.
Step disable_mut(CodePatch& patch, Coord site, char basis);

}  // namespace detail

void apply_step(CodePatch& patch, const Step& step, const GaugeOptions& opts = {.verify_spans = false});

// Replays a full instruction expansion; the result must equal the patch the
// instruction was built from (asserted in tests).
CodePatch replay(const CodePatch& pre, const CompositeInstruction& instr);
CodePatch replay(const CodePatch& pre, const DeformationSchedule& schedule);

// Recompute all four boundary descriptors from the active data set:
// outermost active qubit per row (X sides) / per column (Z sides).
void recompute_boundaries(CodePatch& patch);

}  // namespace surfdeform
