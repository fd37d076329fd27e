#include "surfdeform/gauge.hpp"

#include <algorithm>

#include "surfdeform/common.hpp"

namespace surfdeform {
namespace detail {

namespace {

std::vector<PauliString> anticommuters(const std::vector<PauliString>& ops,
                                       const PauliString& g) {
    std::vector<PauliString> out;
    for (const auto& p : ops)
        if (!p.commutes_with(g)) out.push_back(p);
    return out;
}

bool in_sorted(const std::vector<PauliString>& v, const PauliString& p) {
    auto it = std::lower_bound(v.begin(), v.end(), p);
    return it != v.end() && *it == p;
}

PauliSpan stab_span_of(const CodePatch& patch) {
    PauliSpan span(patch.n());
    for (const auto& s : patch.gen_stabs) span.add(s);
    return span;
}

PauliSpan gauge_algebra_of(const CodePatch& patch) {
    PauliSpan span(patch.n());
    for (const auto& s : patch.gen_stabs) span.add(s);
    for (const auto& [a, b] : patch.gauge_pairs) {
        span.add(a);
        span.add(b);
    }
    return span;
}

}  // namespace

Step s2g_mut(CodePatch& patch, PauliString g, const GaugeOptions& opts,
             const std::vector<PauliString>* redundancy_witness) {
    if (g.size() != patch.n()) throw dimension_error("S2G: operator length mismatch");
    if (!g.is_real() || g.is_identity()) throw operand_error("S2G: gauge must be a real non-identity operator");

    std::vector<PauliString> anti = anticommuters(patch.stab_set, g);

    Step step;
    step.kind = Step::Kind::S2G;
    step.op = g;

    if (anti.empty()) {
        // Redundant gauge measurement: g must already lie in the gauge
        // algebra but outside the stabilizer span.
        bool ok = false;
        if (redundancy_witness) {
            PauliString prod = PauliString::identity(patch.n());
            for (const auto& w : *redundancy_witness) prod = prod * w;
            ok = prod.same_bits(g);
        } else if (opts.verify_spans) {
            ok = gauge_algebra_of(patch).contains(g) && !stab_span_of(patch).contains(g);
        }
        if (!ok) {
            if (!g.commutes_with(patch.logical_x) || !g.commutes_with(patch.logical_z))
                throw transform_error("S2G would corrupt the logical qubit: " + g.str());
            throw transform_error("not a valid S2G: no stabilizer anticommutes with " + g.str());
        }
        patch.insert_gauge(g);
        return step;
    }

    // Generator update: pick the lowest anticommuting generator as s_k, fix
    // every other anticommuting operator of the representation by s_k.
    std::vector<PauliString> gen_anti = anticommuters(patch.gen_stabs, g);
    if (gen_anti.empty())
        throw internal_error("S2G: measured stabilizer anticommutes but no generator does");
    PauliString s_k = gen_anti.front();
    patch.remove_gen(s_k);
    for (std::size_t i = 1; i < gen_anti.size(); ++i) {
        patch.remove_gen(gen_anti[i]);
        patch.insert_gen(s_k * gen_anti[i]);
    }
    if (!patch.logical_x.commutes_with(g)) patch.logical_x = s_k * patch.logical_x;
    if (!patch.logical_z.commutes_with(g)) patch.logical_z = s_k * patch.logical_z;
    for (auto& [a, b] : patch.gauge_pairs) {
        if (!a.commutes_with(g)) a = s_k * a;
        if (!b.commutes_with(g)) b = s_k * b;
    }
    patch.gauge_pairs.emplace_back(s_k, g);

    for (const auto& s : anti) {
        patch.remove_stab(s);
        patch.insert_gauge(s);
    }
    patch.insert_gauge(g);
    step.demoted = anti;
    return step;
}

Step g2s_mut(CodePatch& patch, PauliString g, int outcome, const GaugeOptions& opts) {
    if (g.size() != patch.n()) throw dimension_error("G2S: operator length mismatch");
    if (!in_sorted(patch.gauge_set, g))
        throw operand_error("G2S: operator is not a measured gauge: " + g.str());

    Step step;
    step.kind = Step::Kind::G2S;
    step.op = g;
    step.outcome = outcome;

    std::vector<PauliString> anti = anticommuters(patch.gauge_set, g);
    if (anti.size() > 1) {
        // Preparatory G2G reductions until a single partner remains.
        PauliString h = anti.front();
        for (std::size_t i = 1; i < anti.size(); ++i) {
            PauliString prod = h * anti[i];
            patch.remove_gauge(anti[i]);
            bool determined = in_sorted(patch.gen_stabs, prod);
            if (!determined && opts.verify_spans) determined = stab_span_of(patch).contains(prod);
            if (determined)
                patch.insert_stab(prod);  // the fixed partner leaves a stabilizer behind
            else
                patch.insert_gauge(prod);
        }
        anti.resize(1);
    }

    if (anti.empty()) {
        // Determined gauge: value fixed by the stabilizer group, promotion is
        // deterministic and records no byproduct.
        bool determined = in_sorted(patch.gen_stabs, g);
        if (!determined && opts.verify_spans) determined = stab_span_of(patch).contains(g);
        if (!determined)
            throw transform_error("G2S: no anticommuting gauge partner for " + g.str());
        if (outcome != +1)
            throw transform_error("G2S: determined gauge cannot measure -1: " + g.str());
        patch.remove_gauge(g);
        patch.insert_stab(g);
        step.op2 = PauliString::identity(patch.n());
        return step;
    }

    PauliString h = anti.front();
    patch.remove_gauge(g);
    patch.remove_gauge(h);
    patch.insert_stab(g);
    step.op2 = h;

    // Generator update, the reverse of S2G: normalize the pairs so a single
    // element anticommutes with g, then trade that pair for g.
    std::vector<std::pair<std::size_t, int>> hits;  // (pair index, member 0/1)
    for (std::size_t i = 0; i < patch.gauge_pairs.size(); ++i) {
        if (!patch.gauge_pairs[i].first.commutes_with(g)) hits.push_back({i, 0});
        if (!patch.gauge_pairs[i].second.commutes_with(g)) hits.push_back({i, 1});
    }
    if (hits.empty())
        throw internal_error("G2S: gauge anticommutes with a measured gauge but no pair element");
    auto member = [&](std::pair<std::size_t, int> h_) -> PauliString& {
        return h_.second == 0 ? patch.gauge_pairs[h_.first].first
                              : patch.gauge_pairs[h_.first].second;
    };
    PauliString h_g = member(hits.front());
    for (std::size_t i = 1; i < hits.size(); ++i) member(hits[i]) = h_g * member(hits[i]);
    patch.gauge_pairs.erase(patch.gauge_pairs.begin() + std::ptrdiff_t(hits.front().first));
    patch.insert_gen(g);
    return step;
}

Step s2s_mut(CodePatch& patch, PauliString a, PauliString b, bool replace) {
    if (!in_sorted(patch.stab_set, a) || !in_sorted(patch.stab_set, b))
        throw operand_error("S2S: both factors must be measured stabilizers");
    if (a == b) throw operand_error("S2S: factors must differ");
    PauliString prod = a * b;
    if (replace) patch.remove_stab(a);
    patch.insert_stab(prod);
    Step step;
    step.kind = Step::Kind::S2S;
    step.op = a;
    step.op2 = b;
    step.replace = replace;
    return step;
}

Step g2g_mut(CodePatch& patch, PauliString g, PauliString m,
             const GaugeOptions& opts) {
    if (!in_sorted(patch.gauge_set, g))
        throw operand_error("G2G: target is not a measured gauge: " + g.str());
    Step step;
    step.kind = Step::Kind::G2G;
    step.op = g;
    step.op2 = m;
    if (m.is_identity()) return step;  // no-op
    if (!in_sorted(patch.stab_set, m) && !in_sorted(patch.gauge_set, m))
        throw operand_error("G2G: multiplier must come from Meas: " + m.str());
    PauliString prod = g * m;
    if (prod.is_identity())
        throw transform_error("G2G: degenerate product (identity)");
    if (opts.verify_spans && stab_span_of(patch).contains(prod))
        throw transform_error("G2G: degenerate gauge, product lies in the stabilizer span");
    patch.remove_gauge(g);
    patch.insert_gauge(prod);
    return step;
}

Step add_qubit_mut(CodePatch& patch, Coord site, char basis) {
    if (basis != '0' && basis != '+') throw operand_error("new qubit basis must be '0' or '+'");
    std::size_t idx = patch.add_data_qubit(site);
    PauliString p = PauliString::single(patch.n(), idx, basis == '+' ? 'X' : 'Z');
    patch.insert_stab(p);
    patch.insert_gen(p);
    Step step;
    step.kind = Step::Kind::AddQubit;
    step.site = site;
    step.basis = basis;
    return step;
}

Step add_syndrome_mut(CodePatch& patch, Coord site, CheckType t) {
    if (is_data_site(site)) throw geometry_error("syndrome site on data sublattice: " + site.str());
    patch.syndrome_qubits[site] = t;
    patch.disabled_ancillas.erase(site);
    Step step;
    step.kind = Step::Kind::AddSyndrome;
    step.site = site;
    step.ctype = t;
    return step;
}

Step retire_stab_mut(CodePatch& patch, PauliString op) {
    patch.remove_stab(op);
    Step step;
    step.kind = Step::Kind::RetireStab;
    step.op = op;
    return step;
}

Step retire_gauge_mut(CodePatch& patch, PauliString op) {
    patch.remove_gauge(op);
    Step step;
    step.kind = Step::Kind::RetireGauge;
    step.op = op;
    return step;
}

Step retire_syndrome_mut(CodePatch& patch, Coord site) {
    if (!patch.has_syndrome(site)) throw geometry_error("no ancilla at " + site.str());
    patch.syndrome_qubits.erase(site);
    patch.disabled_ancillas.insert(site);
    Step step;
    step.kind = Step::Kind::RetireSyndrome;
    step.site = site;
    return step;
}

Step disable_mut(CodePatch& patch, Coord site, char basis) {
    std::size_t idx = patch.index_of(site);
    if (patch.is_disabled(site)) throw geometry_error("qubit already disabled: " + site.str());
    for (const auto& p : patch.stab_set)
        if (patch.op_touches(p, idx))
            throw internal_error("disable: measured stabilizer still touches " + site.str());
    for (const auto& p : patch.gauge_set)
        if (patch.op_touches(p, idx))
            throw internal_error("disable: measured gauge still touches " + site.str());

    if (basis == 'X' || basis == 'Z') {
        // Detach a qubit pinned by a single-site stabilizer of this type.
        PauliString pin = patch.single(site, basis);
        std::vector<PauliString> touching;
        for (const auto& s : patch.gen_stabs)
            if (patch.op_touches(s, idx)) touching.push_back(s);
        if (touching.empty())
            throw internal_error("disable: no generator pins qubit " + site.str());
        // Make the pin itself a generator, clear the rest, then drop it.
        PauliString lead = touching.front();
        auto it = std::find(touching.begin(), touching.end(), pin);
        if (it != touching.end()) lead = pin;
        for (const auto& s : touching) {
            if (s == lead) continue;
            patch.remove_gen(s);
            patch.insert_gen(s * lead);
        }
        if (!(lead == pin)) {
            patch.remove_gen(lead);
            patch.insert_gen(pin);
        }
        auto clean = [&](PauliString& p) {
            if (patch.op_touches(p, idx)) p = p * pin;
        };
        clean(patch.logical_x);
        clean(patch.logical_z);
        for (auto& [a, b] : patch.gauge_pairs) {
            clean(a);
            clean(b);
        }
        patch.remove_gen(pin);
    } else {
        // Gauge-qubit separation: rebuild the pairs so (X_q, Z_q) is one of
        // them, then drop that pair with the qubit.
        for (const auto& s : patch.gen_stabs)
            if (patch.op_touches(s, idx))
                throw internal_error("disable: generator touches separating qubit " + site.str());
        std::vector<PauliString> pool;
        pool.push_back(patch.single(site, 'X'));
        pool.push_back(patch.single(site, 'Z'));
        for (const auto& [a, b] : patch.gauge_pairs) {
            pool.push_back(a);
            pool.push_back(b);
        }
        auto pairs = symplectic_pairs(std::move(pool));
        if (pairs.empty() || !(pairs.front().first == patch.single(site, 'X')) ||
            !pairs.front().second.same_bits(patch.single(site, 'Z')))
            throw internal_error("disable: qubit does not carry a full gauge pair: " + site.str());
        if (pairs.size() != patch.gauge_pairs.size())
            throw internal_error("disable: gauge pair count mismatch at " + site.str());
        pairs.erase(pairs.begin());
        patch.gauge_pairs = std::move(pairs);
        auto untouched = [&](const PauliString& p) { return !patch.op_touches(p, idx); };
        if (!untouched(patch.logical_x) || !untouched(patch.logical_z))
            throw internal_error("disable: logical operator touches separating qubit");
    }

    patch.disabled.insert(site);
    Step step;
    step.kind = Step::Kind::Disable;
    step.site = site;
    step.basis = basis;
    return step;
}

}  // namespace detail

namespace {

AtomicResult wrap(CodePatch patch, Step step) { return {std::move(patch), std::move(step)}; }

}  // namespace

AtomicResult s2g(const CodePatch& patch, const PauliString& new_gauge, const GaugeOptions& opts) {
    CodePatch p = patch;
    Step s = detail::s2g_mut(p, new_gauge, opts);
    return wrap(std::move(p), std::move(s));
}

AtomicResult g2s(const CodePatch& patch, const PauliString& gauge, int outcome,
                 const GaugeOptions& opts) {
    CodePatch p = patch;
    Step s = detail::g2s_mut(p, gauge, outcome, opts);
    return wrap(std::move(p), std::move(s));
}

AtomicResult s2s(const CodePatch& patch, std::size_t a, std::size_t b, bool replace) {
    if (a >= patch.stab_set.size() || b >= patch.stab_set.size())
        throw operand_error("S2S: stabilizer index out of range");
    if (a == b) throw operand_error("S2S: indices must differ");
    CodePatch p = patch;
    Step s = detail::s2s_mut(p, patch.stab_set[a], patch.stab_set[b], replace);
    return wrap(std::move(p), std::move(s));
}

AtomicResult g2g(const CodePatch& patch, std::size_t g, const PauliString& m,
                 const GaugeOptions& opts) {
    if (g >= patch.gauge_set.size()) throw operand_error("G2G: gauge index out of range");
    CodePatch p = patch;
    Step s = detail::g2g_mut(p, patch.gauge_set[g], m, opts);
    return wrap(std::move(p), std::move(s));
}

void apply_step(CodePatch& patch, const Step& step, const GaugeOptions& opts) {
    using K = Step::Kind;
    switch (step.kind) {
        case K::S2G: {
            // Witness-free replay: demotion list in the step documents intent,
            // recomputation reproduces it bit-exactly.
            if (step.demoted.empty()) {
                std::vector<PauliString> witness;  // accepted as redundant
                witness.push_back(step.op);
                detail::s2g_mut(patch, step.op, opts, &witness);
            } else {
                detail::s2g_mut(patch, step.op, opts);
            }
            break;
        }
        case K::G2S: detail::g2s_mut(patch, step.op, step.outcome, opts); break;
        case K::S2S: detail::s2s_mut(patch, step.op, step.op2, step.replace); break;
        case K::G2G: detail::g2g_mut(patch, step.op, step.op2, opts); break;
        case K::AddQubit: detail::add_qubit_mut(patch, step.site, step.basis); break;
        case K::AddSyndrome: detail::add_syndrome_mut(patch, step.site, step.ctype); break;
        case K::RetireStab: detail::retire_stab_mut(patch, step.op); break;
        case K::RetireGauge: detail::retire_gauge_mut(patch, step.op); break;
        case K::RetireSyndrome: detail::retire_syndrome_mut(patch, step.site); break;
        case K::Disable: detail::disable_mut(patch, step.site, step.basis); break;
        case K::SetBoundary: patch.boundary(step.side).qubits = step.coords; break;
    }
}

CodePatch replay(const CodePatch& pre, const CompositeInstruction& instr) {
    CodePatch p = pre;
    std::size_t grow = 0;
    for (const auto& s : instr.expansion) {
        if (s.kind == Step::Kind::S2G && s.demoted.empty()) ++grow;  // keep op sizes aligned
        // Operators recorded before qubit additions are shorter; extend lazily.
        Step st = s;
        if (st.op.size() && st.op.size() < p.n()) st.op.extend(p.n());
        if (st.op2.size() && st.op2.size() < p.n()) st.op2.extend(p.n());
        for (auto& d : st.demoted)
            if (d.size() < p.n()) d.extend(p.n());
        apply_step(p, st);
    }
    recompute_boundaries(p);
    (void)grow;
    return p;
}

CodePatch replay(const CodePatch& pre, const DeformationSchedule& schedule) {
    CodePatch p = pre;
    for (const auto& in : schedule.instructions) p = replay(p, in);
    return p;
}

void recompute_boundaries(CodePatch& patch) {
    std::map<int, std::pair<int, int>> row_range;  // row -> [min_col, max_col]
    std::map<int, std::pair<int, int>> col_range;  // col -> [min_row, max_row]
    for (const auto& c : patch.qubit_coords) {
        if (patch.is_disabled(c)) continue;
        auto [rit, rnew] = row_range.try_emplace(c.row, std::pair<int, int>{c.col, c.col});
        if (!rnew) {
            rit->second.first = std::min(rit->second.first, c.col);
            rit->second.second = std::max(rit->second.second, c.col);
        }
        auto [cit, cnew] = col_range.try_emplace(c.col, std::pair<int, int>{c.row, c.row});
        if (!cnew) {
            cit->second.first = std::min(cit->second.first, c.row);
            cit->second.second = std::max(cit->second.second, c.row);
        }
    }
    std::vector<Coord> left, right, top, bottom;
    for (const auto& [row, mm] : row_range) {
        left.push_back({row, mm.first});
        right.push_back({row, mm.second});
    }
    for (const auto& [col, mm] : col_range) {
        top.push_back({mm.first, col});
        bottom.push_back({mm.second, col});
    }
    patch.boundary(BoundarySide::XL1).qubits = std::move(left);
    patch.boundary(BoundarySide::XL2).qubits = std::move(right);
    patch.boundary(BoundarySide::ZL1).qubits = std::move(top);
    patch.boundary(BoundarySide::ZL2).qubits = std::move(bottom);
}

}  // namespace surfdeform
