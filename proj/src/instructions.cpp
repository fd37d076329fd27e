#include "surfdeform/instructions.hpp"

#include <algorithm>

#include "surfdeform/common.hpp"

namespace surfdeform {

namespace {

const GaugeOptions kFast{.verify_spans = false};
const GaugeOptions kChecked{.verify_spans = true};

PauliString make_op(const CodePatch& p, CheckType t, const std::vector<Coord>& support) {
    PauliString op(p.n());
    for (Coord c : support) {
        std::size_t i = p.index_of(c);
        if (t == CheckType::X) op.set_x(i); else op.set_z(i);
    }
    return op;
}

bool pure_type_is(const PauliString& p, CheckType t) {
    return t == CheckType::X ? (p.pure_x() && !p.is_identity())
                             : (p.pure_z() && !p.is_identity());
}

std::vector<PauliString> stabs_touching(const CodePatch& p, std::size_t idx,
                                        std::optional<CheckType> type = {}) {
    std::vector<PauliString> out;
    for (const auto& s : p.stab_set) {
        if (!p.op_touches(s, idx)) continue;
        if (type && !pure_type_is(s, *type)) continue;
        out.push_back(s);
    }
    return out;
}

bool any_stab_anticommutes(const CodePatch& p, const PauliString& g) {
    for (const auto& s : p.stab_set)
        if (!s.commutes_with(g)) return true;
    return false;
}

// Introduce a single-site gauge; falls back to the redundant-measurement path
// when no stabilizer anticommutes (witness first, honest span check second).
void introduce_single(CodePatch& p, std::vector<Step>& steps, const PauliString& single,
                      const std::vector<PauliString>& witness) {
    if (any_stab_anticommutes(p, single)) {
        steps.push_back(detail::s2g_mut(p, single, kFast));
        return;
    }
    PauliString prod = PauliString::identity(p.n());
    for (const auto& w : witness) prod = prod * w;
    if (prod.same_bits(single)) {
        steps.push_back(detail::s2g_mut(p, single, kFast, &witness));
    } else {
        steps.push_back(detail::s2g_mut(p, single, kChecked));
    }
}

// Fix `pin` (single-site operator on q) as a stabilizer and detach q from the
// patch: merge same-type checks, promote, purge, retire, disable.
void remove_pinned_qubit(CodePatch& p, std::vector<Step>& steps, Coord q, CheckType fix) {
    std::size_t idx = p.index_of(q);
    PauliString pin = p.single(q, fix == CheckType::X ? 'X' : 'Z');
    CheckType opp = opposite(fix);

    // Merge measured opposite-type checks on q down to one.
    auto opp_stabs = stabs_touching(p, idx, opp);
    while (opp_stabs.size() >= 2) {
        steps.push_back(detail::s2s_mut(p, opp_stabs[0], opp_stabs[1], true));
        opp_stabs = stabs_touching(p, idx, opp);
    }

    bool already_pinned =
        std::binary_search(p.stab_set.begin(), p.stab_set.end(), pin);
    if (!already_pinned) {
        if (!opp_stabs.empty()) {
            steps.push_back(detail::s2g_mut(p, pin, kFast));
        } else {
            steps.push_back(detail::s2g_mut(p, pin, kChecked));
        }
        steps.push_back(detail::g2s_mut(p, pin, +1, kFast));
    }

    // Purge remaining measured support on q.
    for (;;) {
        bool changed = false;
        for (const auto& s : p.stab_set) {
            if (s == pin || !p.op_touches(s, idx)) continue;
            steps.push_back(detail::s2s_mut(p, s, pin, true));
            changed = true;
            break;
        }
        if (changed) continue;
        for (const auto& g : p.gauge_set) {
            if (!p.op_touches(g, idx)) continue;
            steps.push_back(detail::g2g_mut(p, g, pin, kFast));
            changed = true;
            break;
        }
        if (!changed) break;
    }

    steps.push_back(detail::retire_stab_mut(p, pin));
    steps.push_back(detail::disable_mut(p, q, fix == CheckType::X ? 'X' : 'Z'));
}

// Weight-1 stabilizers left by boundary surgery pin their qubit in a fixed
// basis state; detach such qubits until none remain.
void cascade_pinned(CodePatch& p, std::vector<Step>& steps) {
    for (;;) {
        std::optional<std::pair<Coord, CheckType>> found;
        for (const auto& s : p.stab_set) {
            if (s.weight() != 1) continue;
            std::size_t idx = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (s.x(i) || s.z(i)) { idx = i; break; }
            found = {p.coord_of(idx), s.pure_x() ? CheckType::X : CheckType::Z};
            break;
        }
        if (!found) return;
        remove_pinned_qubit(p, steps, found->first, found->second);
    }
}

}  // namespace

std::vector<Coord> ancilla_template_support(const CodePatch& patch, Coord ancilla) {
    std::vector<Coord> out;
    if (is_plaquette_site(ancilla)) {
        for (Coord c : cell_corners(ancilla))
            if (patch.is_active_data(c)) out.push_back(c);
    } else if (is_midpoint_site(ancilla)) {
        if (ancilla.row & 1) {  // vertical pair
            for (Coord c : {Coord{ancilla.row - 1, ancilla.col}, Coord{ancilla.row + 1, ancilla.col}})
                if (patch.is_active_data(c)) out.push_back(c);
        } else {
            for (Coord c : {Coord{ancilla.row, ancilla.col - 1}, Coord{ancilla.row, ancilla.col + 1}})
                if (patch.is_active_data(c)) out.push_back(c);
        }
    }
    return out;
}

std::optional<PauliString> find_check_of(const CodePatch& patch, Coord ancilla, bool* is_stab) {
    auto it = patch.syndrome_qubits.find(ancilla);
    if (it == patch.syndrome_qubits.end()) return std::nullopt;
    auto support = ancilla_template_support(patch, ancilla);
    if (support.empty()) return std::nullopt;
    PauliString expect = make_op(patch, it->second, support);
    if (std::binary_search(patch.stab_set.begin(), patch.stab_set.end(), expect)) {
        if (is_stab) *is_stab = true;
        return expect;
    }
    if (std::binary_search(patch.gauge_set.begin(), patch.gauge_set.end(), expect)) {
        if (is_stab) *is_stab = false;
        return expect;
    }
    return std::nullopt;
}

InstructionResult dataq_rm(const CodePatch& patch0, Coord q) {
    if (!is_data_site(q)) throw geometry_error("DataQ_RM: not a data coordinate: " + q.str());
    if (!patch0.has_data(q) || patch0.is_disabled(q))
        throw geometry_error("DataQ_RM: no active data qubit at " + q.str());
    for (auto side : {BoundarySide::XL1, BoundarySide::XL2, BoundarySide::ZL1, BoundarySide::ZL2})
        if (patch0.on_boundary(q, side))
            throw transform_error("DataQ_RM: " + q.str() +
                                  " lies on the boundary, PatchQ_RM applies");

    CodePatch p = patch0;
    CompositeInstruction instr;
    instr.name = InstructionName::DataQ_RM;
    instr.args = "Q" + q.str();
    auto& steps = instr.expansion;

    std::size_t idx = p.index_of(q);
    PauliString zq = p.single(q, 'Z');
    PauliString xq = p.single(q, 'X');
    steps.push_back(detail::s2g_mut(p, zq, kFast));
    steps.push_back(detail::s2g_mut(p, xq, kFast));

    // Reshape every other gauge so only X_q and Z_q act on q.
    for (;;) {
        bool changed = false;
        for (const auto& g : p.gauge_set) {
            if (g == xq || g == zq || !p.op_touches(g, idx)) continue;
            steps.push_back(detail::g2g_mut(p, g, g.x(idx) ? xq : zq, kFast));
            changed = true;
            break;
        }
        if (!changed) break;
    }

    steps.push_back(detail::retire_gauge_mut(p, xq));
    steps.push_back(detail::retire_gauge_mut(p, zq));
    steps.push_back(detail::disable_mut(p, q, 0));
    recompute_boundaries(p);
    return {std::move(p), std::move(instr)};
}

InstructionResult syndromeq_rm(const CodePatch& patch0, Coord q) {
    if (is_data_site(q)) throw geometry_error("SyndromeQ_RM: data coordinate " + q.str());
    if (!patch0.has_syndrome(q))
        throw geometry_error("SyndromeQ_RM: no ancilla at " + q.str());
    if (is_midpoint_site(q))
        throw transform_error("SyndromeQ_RM: " + q.str() +
                              " is a boundary check, PatchQ_RM applies");
    bool is_stab = false;
    auto check = find_check_of(patch0, q, &is_stab);
    if (!check || !is_stab)
        throw transform_error("SyndromeQ_RM: ancilla " + q.str() +
                              " does not measure a live stabilizer");

    CodePatch p = patch0;
    CompositeInstruction instr;
    instr.name = InstructionName::SyndromeQ_RM;
    instr.args = "Q" + q.str();
    auto& steps = instr.expansion;

    CheckType t = p.syndrome_qubits.at(q);
    char tc = t == CheckType::X ? 'X' : 'Z';
    PauliString s0 = *check;

    std::vector<PauliString> singles;
    for (Coord c : ancilla_template_support(p, q)) {
        PauliString single = p.single(c, tc);
        std::vector<PauliString> witness = singles;
        witness.push_back(s0);
        introduce_single(p, steps, single, witness);
        singles.push_back(single);
    }

    steps.push_back(detail::retire_stab_mut(p, s0));
    steps.push_back(detail::retire_syndrome_mut(p, q));
    recompute_boundaries(p);
    return {std::move(p), std::move(instr)};
}

InstructionResult patchq_rm(const CodePatch& patch0, BoundarySide side, Coord defect,
                            std::optional<CheckType> fix, std::optional<Coord> data_choice) {
    CodePatch p = patch0;
    CompositeInstruction instr;
    instr.name = InstructionName::PatchQ_RM;
    instr.args = std::string(side_name(side)) + " Q" + defect.str();
    auto& steps = instr.expansion;

    if (is_data_site(defect)) {
        if (!p.is_active_data(defect))
            throw geometry_error("PatchQ_RM: no active data qubit at " + defect.str());
        if (!p.on_boundary(defect, side)) {
            bool on_any = false;
            for (auto s : {BoundarySide::XL1, BoundarySide::XL2, BoundarySide::ZL1, BoundarySide::ZL2})
                on_any = on_any || p.on_boundary(defect, s);
            throw transform_error(on_any
                                      ? "PatchQ_RM: " + defect.str() + " is not on boundary " +
                                            side_name(side)
                                      : "PatchQ_RM: interior defect " + defect.str() +
                                            ", DataQ_RM/SyndromeQ_RM applies");
        }
        CheckType f = fix.value_or(opposite(boundary_type(side)));
        remove_pinned_qubit(p, steps, defect, f);
        cascade_pinned(p, steps);
    } else {
        // Boundary syndrome defect: its check merges into a neighbouring
        // ancilla by removing one of the measured data qubits.
        if (!p.has_syndrome(defect))
            throw geometry_error("PatchQ_RM: no ancilla at " + defect.str());
        if (is_plaquette_site(defect))
            throw transform_error("PatchQ_RM: " + defect.str() +
                                  " is an interior ancilla, SyndromeQ_RM applies");
        bool is_stab = false;
        auto check = find_check_of(p, defect, &is_stab);
        if (!check || !is_stab)
            throw transform_error("PatchQ_RM: ancilla " + defect.str() +
                                  " does not measure a live stabilizer");
        auto support = p.support_coords(*check);
        std::sort(support.begin(), support.end());
        Coord victim = data_choice.value_or(support.front());
        if (std::find(support.begin(), support.end(), victim) == support.end())
            throw operand_error("PatchQ_RM: data choice must be measured by the defect ancilla");
        CheckType f = fix.value_or(opposite(boundary_type(side)));
        remove_pinned_qubit(p, steps, victim, f);
        cascade_pinned(p, steps);
        if (p.has_syndrome(defect))
            steps.push_back(detail::retire_syndrome_mut(p, defect));
    }

    recompute_boundaries(p);
    return {std::move(p), std::move(instr)};
}

InstructionResult patchq_add(const CodePatch& patch0, const std::vector<AddSite>& sites) {
    CodePatch p = patch0;
    CompositeInstruction instr;
    instr.name = InstructionName::PatchQ_ADD;
    auto& steps = instr.expansion;

    std::vector<AddSite> data_sites, syn_sites;
    for (const auto& s : sites)
        (s.role == AddSite::Role::Data ? data_sites : syn_sites).push_back(s);
    std::sort(data_sites.begin(), data_sites.end(),
              [](const AddSite& a, const AddSite& b) { return a.site < b.site; });
    std::sort(syn_sites.begin(), syn_sites.end(),
              [](const AddSite& a, const AddSite& b) { return a.site < b.site; });

    {
        std::string a;
        for (const auto& s : data_sites) a += " Q" + s.site.str();
        for (const auto& s : syn_sites) a += " S" + s.site.str();
        instr.args = a.empty() ? "none" : a.substr(1);
    }
    if (sites.empty()) return {std::move(p), std::move(instr)};

    auto [lo, hi] = p.bounding_box();
    for (const auto& s : data_sites) {
        if (p.has_data(s.site))
            throw geometry_error("PatchQ_ADD: site already present: " + s.site.str());
        bool adjacent = false;
        for (const auto& c : p.qubit_coords) {
            if (p.is_disabled(c)) continue;
            if (std::abs(c.row - s.site.row) <= 2 && std::abs(c.col - s.site.col) <= 2) {
                adjacent = true;
                break;
            }
        }
        if (!adjacent)
            throw geometry_error("PatchQ_ADD: site not adjacent to the patch: " + s.site.str());
        bool beyond_x = s.site.col < lo.col || s.site.col > hi.col;
        bool beyond_z = s.site.row < lo.row || s.site.row > hi.row;
        if (beyond_x && !beyond_z && s.basis != '+')
            throw transform_error("PatchQ_ADD: sites extending an X boundary initialize in |+>");
        if (beyond_z && !beyond_x && s.basis != '0')
            throw transform_error("PatchQ_ADD: sites extending a Z boundary initialize in |0>");
        steps.push_back(detail::add_qubit_mut(p, s.site, s.basis));
    }

    auto live_single_on_new = [&](Coord c, CheckType t) {
        if (!p.has_data(c)) return false;
        PauliString single = p.single(c, t == CheckType::X ? 'X' : 'Z');
        return std::binary_search(p.stab_set.begin(), p.stab_set.end(), single);
    };

    struct Pending {
        AddSite site;
        bool done = false;
        std::optional<PauliString> upgraded_from;
    };
    std::vector<Pending> pending;
    for (const auto& s : syn_sites) pending.push_back({s});

    // Upgrade pass: extend an existing check over the fresh qubits.
    for (auto& pd : pending) {
        PauliString target = make_op(p, pd.site.ctype, pd.site.support);
        if (std::binary_search(p.stab_set.begin(), p.stab_set.end(), target)) {
            pd.done = true;
            continue;
        }
        for (const auto& s : p.stab_set) {
            if (!pure_type_is(s, pd.site.ctype)) continue;
            PauliString diff = s * target;
            if (diff.is_identity()) continue;
            bool subset = true;
            for (std::size_t i = 0; i < p.n() && subset; ++i)
                if (p.op_touches(s, i) && !p.op_touches(target, i)) subset = false;
            if (!subset) continue;
            auto diff_sites = p.support_coords(diff);
            bool all_fresh = !diff_sites.empty();
            for (Coord c : diff_sites)
                all_fresh = all_fresh && live_single_on_new(c, pd.site.ctype);
            if (!all_fresh) continue;
            PauliString cur = s;
            pd.upgraded_from = s;
            std::sort(diff_sites.begin(), diff_sites.end());
            for (Coord c : diff_sites) {
                PauliString single = p.single(c, pd.site.ctype == CheckType::X ? 'X' : 'Z');
                steps.push_back(detail::s2s_mut(p, cur, single, true));
                cur = cur * single;
            }
            pd.done = true;
            break;
        }
    }

    auto promote_determined = [&]() {
        for (;;) {
            bool changed = false;
            for (const auto& g : p.gauge_set) {
                if (std::binary_search(p.gen_stabs.begin(), p.gen_stabs.end(), g)) {
                    steps.push_back(detail::g2s_mut(p, g, +1, kFast));
                    changed = true;
                    break;
                }
            }
            if (!changed) return;
        }
    };

    // Install passes: consume fresh single-site stabilizers.
    for (;;) {
        bool progress = false;
        for (auto& pd : pending) {
            if (pd.done) continue;
            PauliString target = make_op(p, pd.site.ctype, pd.site.support);
            if (std::binary_search(p.stab_set.begin(), p.stab_set.end(), target)) {
                pd.done = true;
                progress = true;
                continue;
            }
            std::vector<PauliString> anti;
            for (const auto& s : p.stab_set)
                if (!s.commutes_with(target)) anti.push_back(s);
            if (anti.empty()) continue;  // maybe satisfied by a later promotion
            for (const auto& a : anti) {
                auto sup = p.support_coords(a);
                if (a.weight() != 1 || !live_single_on_new(sup.front(), pd.site.ctype == CheckType::X
                                                                            ? CheckType::Z
                                                                            : CheckType::X))
                    throw geometry_error("PatchQ_ADD: proposed check " + target.str() +
                                         " conflicts with " + a.str());
            }
            steps.push_back(detail::s2g_mut(p, target, kFast));
            steps.push_back(detail::g2s_mut(p, target, +1, kFast));
            promote_determined();
            pd.done = true;
            progress = true;
        }
        if (!progress) break;
    }
    promote_determined();

    for (const auto& pd : pending)
        if (!pd.done)
            throw geometry_error("PatchQ_ADD: could not install check at " + pd.site.site.str());

    // Ancilla bookkeeping: retire midpoints whose checks were upgraded, then
    // register the new ancillas.
    for (const auto& pd : pending) {
        if (!pd.upgraded_from) continue;
        for (const auto& [anc, t] : std::map<Coord, CheckType>(patch0.syndrome_qubits)) {
            if (t != pd.site.ctype || !is_midpoint_site(anc)) continue;
            bool was_stab = false;
            auto old_check = find_check_of(patch0, anc, &was_stab);
            if (old_check && old_check->size() < p.n()) old_check->extend(p.n());
            if (old_check && was_stab && *old_check == *pd.upgraded_from && p.has_syndrome(anc)) {
                steps.push_back(detail::retire_syndrome_mut(p, anc));
                break;
            }
        }
    }
    for (const auto& pd : pending)
        if (!p.has_syndrome(pd.site.site))
            steps.push_back(detail::add_syndrome_mut(p, pd.site.site, pd.site.ctype));

    recompute_boundaries(p);
    return {std::move(p), std::move(instr)};
}

}  // namespace surfdeform
