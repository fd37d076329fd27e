#include "surfdeform/patch.hpp"

#include <algorithm>

#include "surfdeform/common.hpp"

namespace surfdeform {

std::size_t CodePatch::index_of(Coord c) const {
    auto it = qubit_index.find(c);
    if (it == qubit_index.end())
        throw geometry_error("no data qubit at " + c.str());
    return it->second;
}

std::vector<Coord> CodePatch::support_coords(const PauliString& p) const {
    std::vector<Coord> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.x(i) || p.z(i)) out.push_back(qubit_coords[i]);
    return out;
}

bool CodePatch::on_boundary(Coord c, BoundarySide s) const {
    const auto& b = boundary(s).qubits;
    return std::find(b.begin(), b.end(), c) != b.end();
}

std::size_t CodePatch::add_data_qubit(Coord c) {
    if (!is_data_site(c)) throw geometry_error("not a data site: " + c.str());
    if (has_data(c)) throw geometry_error("data qubit already present: " + c.str());
    std::size_t idx = qubit_coords.size();
    qubit_coords.push_back(c);
    qubit_index[c] = idx;
    std::size_t nn = idx + 1;
    for (auto& p : stab_set) p.extend(nn);
    for (auto& p : gauge_set) p.extend(nn);
    for (auto& p : gen_stabs) p.extend(nn);
    for (auto& [a, b] : gauge_pairs) { a.extend(nn); b.extend(nn); }
    logical_x.extend(nn);
    logical_z.extend(nn);
    return idx;
}

namespace {

void insert_sorted(std::vector<PauliString>& v, const PauliString& p) {
    auto it = std::lower_bound(v.begin(), v.end(), p);
    if (it != v.end() && *it == p) return;  // one measurement per operator
    v.insert(it, p);
}

void remove_exact(std::vector<PauliString>& v, const PauliString& p, const char* what) {
    auto it = std::lower_bound(v.begin(), v.end(), p);
    if (it == v.end() || !(*it == p))
        throw operand_error(std::string("operator not found in ") + what + ": " + p.str());
    v.erase(it);
}

}  // namespace

void CodePatch::insert_stab(const PauliString& p) { insert_sorted(stab_set, p); }
void CodePatch::insert_gauge(const PauliString& p) { insert_sorted(gauge_set, p); }
void CodePatch::remove_stab(const PauliString& p) { remove_exact(stab_set, p, "stab_set"); }
void CodePatch::remove_gauge(const PauliString& p) { remove_exact(gauge_set, p, "gauge_set"); }
void CodePatch::insert_gen(const PauliString& p) { insert_sorted(gen_stabs, p); }
void CodePatch::remove_gen(const PauliString& p) { remove_exact(gen_stabs, p, "gen_stabs"); }

void CodePatch::canonicalize() {
    std::vector<PauliString> meas = stab_set;
    meas.insert(meas.end(), gauge_set.begin(), gauge_set.end());
    gen_stabs = group_center(meas, n());

    PauliSpan center(n());
    for (const auto& g : gen_stabs) center.add(g);
    center.canonicalize();

    std::vector<PauliString> pool = gauge_set;
    auto pairs = symplectic_pairs(std::move(pool));
    for (auto& [a, b] : pairs) {
        a = center.reduce(a);
        b = center.reduce(b);
        if (b < a) std::swap(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    gauge_pairs = std::move(pairs);

    logical_x = center.reduce(logical_x);
    logical_z = center.reduce(logical_z);

    if (gen_stabs.size() + gauge_pairs.size() + 1 != active_data_count())
        throw internal_error("canonicalize: generator count mismatch");
}

std::pair<Coord, Coord> CodePatch::bounding_box() const {
    Coord lo{1 << 30, 1 << 30}, hi{-(1 << 30), -(1 << 30)};
    for (const auto& c : qubit_coords) {
        if (is_disabled(c)) continue;
        lo.row = std::min(lo.row, c.row);
        lo.col = std::min(lo.col, c.col);
        hi.row = std::max(hi.row, c.row);
        hi.col = std::max(hi.col, c.col);
    }
    return {lo, hi};
}

CodePatch build_rotated_code(int d) {
    if (d < 2) throw operand_error("code distance must be at least 2");
    CodePatch patch;

    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            patch.add_data_qubit({2 * r, 2 * c});

    std::size_t n = patch.n();
    auto check_op = [&](CheckType t, const std::vector<Coord>& support) {
        PauliString p(n);
        for (Coord q : support) {
            std::size_t i = patch.index_of(q);
            if (t == CheckType::X) p.set_x(i); else p.set_z(i);
        }
        return p;
    };

    // Interior plaquettes, checkerboard colored.
    for (int i = 0; i < d - 1; ++i) {
        for (int j = 0; j < d - 1; ++j) {
            Coord anc{2 * i + 1, 2 * j + 1};
            CheckType t = plaquette_type(anc);
            auto corners = cell_corners(anc);
            patch.syndrome_qubits[anc] = t;
            patch.insert_stab(check_op(t, {corners.begin(), corners.end()}));
        }
    }
    // Boundary half checks: Z pairs along top/bottom rows, X pairs along
    // left/right columns, at alternating positions continuing the checkerboard.
    for (int j = 0; j < d - 1; ++j) {
        if (j % 2 == 0) {  // top: cell (-1, j) is Z for even j
            Coord anc{0, 2 * j + 1};
            patch.syndrome_qubits[anc] = CheckType::Z;
            patch.insert_stab(check_op(CheckType::Z, {{0, 2 * j}, {0, 2 * j + 2}}));
        }
        if ((d - 1 + j) % 2 == 1) {  // bottom: cell (d-1, j)
            Coord anc{2 * d - 2, 2 * j + 1};
            patch.syndrome_qubits[anc] = CheckType::Z;
            patch.insert_stab(check_op(CheckType::Z, {{2 * d - 2, 2 * j}, {2 * d - 2, 2 * j + 2}}));
        }
    }
    for (int i = 0; i < d - 1; ++i) {
        if (i % 2 == 1) {  // left: cell (i, -1) is X for odd i
            Coord anc{2 * i + 1, 0};
            patch.syndrome_qubits[anc] = CheckType::X;
            patch.insert_stab(check_op(CheckType::X, {{2 * i, 0}, {2 * i + 2, 0}}));
        }
        if ((i + d - 1) % 2 == 0) {  // right: cell (i, d-1)
            Coord anc{2 * i + 1, 2 * d - 2};
            patch.syndrome_qubits[anc] = CheckType::X;
            patch.insert_stab(check_op(CheckType::X, {{2 * i, 2 * d - 2}, {2 * i + 2, 2 * d - 2}}));
        }
    }

    if (patch.stab_set.size() != std::size_t(d) * d - 1)
        throw internal_error("rotated code construction produced wrong check count");

    patch.gen_stabs = patch.stab_set;

    std::vector<Coord> left, right, top, bottom;
    for (int r = 0; r < d; ++r) {
        left.push_back({2 * r, 0});
        right.push_back({2 * r, 2 * d - 2});
    }
    for (int c = 0; c < d; ++c) {
        top.push_back({0, 2 * c});
        bottom.push_back({2 * d - 2, 2 * c});
    }
    patch.boundary(BoundarySide::XL1) = {BoundarySide::XL1, CheckType::X, left};
    patch.boundary(BoundarySide::XL2) = {BoundarySide::XL2, CheckType::X, right};
    patch.boundary(BoundarySide::ZL1) = {BoundarySide::ZL1, CheckType::Z, top};
    patch.boundary(BoundarySide::ZL2) = {BoundarySide::ZL2, CheckType::Z, bottom};

    PauliString zl(n), xl(n);
    for (Coord q : left) zl.set_z(patch.index_of(q));
    for (Coord q : top) xl.set_x(patch.index_of(q));
    patch.logical_z = zl;
    patch.logical_x = xl;
    return patch;
}

CodePatch build_cross_patch() {
    CodePatch patch;
    // Arms q1..q4 around center q5, matching the usual removal diagrams:
    // s1 = X q1 q2 q5, s2 = X q3 q4 q5, g1 = Z q1 q3 q5, g2 = Z q2 q4 q5.
    patch.add_data_qubit({0, 0});  // q1
    patch.add_data_qubit({0, 4});  // q2
    patch.add_data_qubit({4, 0});  // q3
    patch.add_data_qubit({4, 4});  // q4
    patch.add_data_qubit({2, 2});  // q5
    std::size_t n = 5;
    auto op = [&](CheckType t, std::initializer_list<std::size_t> sites) {
        PauliString p(n);
        for (auto s : sites) {
            if (t == CheckType::X) p.set_x(s); else p.set_z(s);
        }
        return p;
    };
    patch.insert_stab(op(CheckType::X, {0, 1, 4}));
    patch.insert_stab(op(CheckType::X, {2, 3, 4}));
    patch.insert_stab(op(CheckType::Z, {0, 2, 4}));
    patch.insert_stab(op(CheckType::Z, {1, 3, 4}));
    patch.gen_stabs = patch.stab_set;
    patch.syndrome_qubits[{1, 1}] = CheckType::X;
    patch.syndrome_qubits[{3, 3}] = CheckType::X;
    patch.syndrome_qubits[{1, 3}] = CheckType::Z;
    patch.syndrome_qubits[{3, 1}] = CheckType::Z;
    patch.logical_z = op(CheckType::Z, {0, 1});
    patch.logical_x = op(CheckType::X, {0, 2});
    patch.boundary(BoundarySide::XL1) = {BoundarySide::XL1, CheckType::X, {{0, 0}, {4, 0}}};
    patch.boundary(BoundarySide::XL2) = {BoundarySide::XL2, CheckType::X, {{0, 4}, {4, 4}}};
    patch.boundary(BoundarySide::ZL1) = {BoundarySide::ZL1, CheckType::Z, {{0, 0}, {0, 4}}};
    patch.boundary(BoundarySide::ZL2) = {BoundarySide::ZL2, CheckType::Z, {{4, 0}, {4, 4}}};
    return patch;
}

namespace {

// All generator-representation operators: gens, logicals, pair members.
std::vector<const PauliString*> rep_operators(const CodePatch& patch) {
    std::vector<const PauliString*> ops;
    for (const auto& s : patch.gen_stabs) ops.push_back(&s);
    ops.push_back(&patch.logical_x);
    ops.push_back(&patch.logical_z);
    for (const auto& [a, b] : patch.gauge_pairs) {
        ops.push_back(&a);
        ops.push_back(&b);
    }
    return ops;
}

// Conjugate partner index inside rep_operators ordering, or npos.
std::size_t conjugate_of(const CodePatch& patch, std::size_t i) {
    std::size_t g = patch.gen_stabs.size();
    if (i < g) return std::size_t(-1);
    std::size_t r = i - g;
    return g + (r ^ 1u);  // logical pair and each gauge pair are adjacent
}

}  // namespace

ValidityReport validate_generators(const CodePatch& patch) {
    ValidityReport rep;
    auto ops = rep_operators(patch);
    std::size_t n = patch.n();

    // (1) independence
    std::vector<PauliString> all;
    all.reserve(ops.size());
    for (auto* p : ops) all.push_back(*p);
    if (gf2_rank(all, n) != all.size())
        rep.fail("T1.1", "generator representation is not independent");
    if (patch.gen_stabs.size() + patch.gauge_pairs.size() + 1 != patch.active_data_count())
        rep.fail("T1.1", "generator count does not match n - l - 1 for k = 1");

    // (2)+(3) commutation structure
    for (std::size_t i = 0; i < ops.size(); ++i) {
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            bool conj = conjugate_of(patch, i) == j;
            bool comm = ops[i]->commutes_with(*ops[j]);
            if (conj && comm)
                rep.fail("T1.2", "conjugate pair commutes: " + ops[i]->str() + " , " + ops[j]->str());
            if (!conj && !comm)
                rep.fail("T1.3", "operators anticommute: " + ops[i]->str() + " , " + ops[j]->str());
        }
    }

    // support hygiene: measured sets, generators and logicals avoid disabled qubits
    auto check_support = [&](const PauliString& p, const char* where) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if ((p.x(i) || p.z(i)) && patch.is_disabled(patch.qubit_coords[i]))
                rep.fail("support", std::string(where) + " touches disabled qubit " +
                                        patch.qubit_coords[i].str() + ": " + p.str());
        }
    };
    for (const auto& p : patch.stab_set) check_support(p, "stabilizer");
    for (const auto& p : patch.gauge_set) check_support(p, "gauge");
    for (const auto& p : patch.gen_stabs) check_support(p, "generator");
    check_support(patch.logical_x, "logical_x");
    check_support(patch.logical_z, "logical_z");

    for (const auto& p : patch.stab_set)
        if (!p.is_real()) rep.fail("phase", "stabilizer with imaginary phase: " + p.str());
    for (const auto& p : patch.gauge_set)
        if (!p.is_real()) rep.fail("phase", "gauge with imaginary phase: " + p.str());
    return rep;
}

ValidityReport validate_meas(const CodePatch& patch) {
    ValidityReport rep;
    std::size_t n = patch.n();

    PauliSpan stab_span(n);
    for (const auto& s : patch.gen_stabs) stab_span.add(s);

    PauliSpan gauge_alg(n);
    for (const auto& s : patch.gen_stabs) gauge_alg.add(s);
    for (const auto& [a, b] : patch.gauge_pairs) {
        gauge_alg.add(a);
        gauge_alg.add(b);
    }

    // (1) Stab inside the stabilizer span
    for (const auto& s : patch.stab_set)
        if (!stab_span.contains(s))
            rep.fail("M.1", "measured stabilizer outside generator span: " + s.str());

    // (2) Gauge inside the gauge algebra, outside the stabilizer span
    for (const auto& g : patch.gauge_set) {
        if (!gauge_alg.contains(g))
            rep.fail("M.2", "measured gauge outside gauge algebra: " + g.str());
        else if (stab_span.contains(g))
            rep.fail("M.2", "measured gauge is a determined operator: " + g.str());
    }

    // (3) every stabilizer generator recoverable from <Meas>
    PauliSpan meas_span(n);
    for (const auto& s : patch.stab_set) meas_span.add(s);
    for (const auto& g : patch.gauge_set) meas_span.add(g);
    for (const auto& s : patch.gen_stabs)
        if (!meas_span.contains(s))
            rep.fail("M.3", "generator not recoverable from Meas: " + s.str());
    return rep;
}

bool group_contains(const std::vector<PauliString>& generators, const PauliString& p) {
    if (!generators.empty() && generators.front().size() != p.size())
        throw dimension_error("group_contains: length mismatch");
    PauliSpan span(p.size());
    for (const auto& g : generators) span.add(g);
    return span.contains(p);
}

SignedMembership group_contains_signed(const std::vector<PauliString>& generators,
                                       const PauliString& p) {
    if (!generators.empty() && generators.front().size() != p.size())
        throw dimension_error("group_contains: length mismatch");
    PauliSpan span(p.size());
    for (const auto& g : generators) span.add(g);
    SignedMembership m;
    PauliString r = span.reduce(p);
    m.in_span = r.is_identity();
    m.sign_consistent = m.in_span && r.phase() == 0;
    return m;
}

}  // namespace surfdeform
