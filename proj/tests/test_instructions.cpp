#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "surfdeform/distance.hpp"
#include "surfdeform/gauge.hpp"
#include "surfdeform/instructions.hpp"
#include "surfdeform/patch.hpp"

using namespace surfdeform;

namespace {

void check_valid(const CodePatch& p) {
    auto g = validate_generators(p);
    INFO((g.violations.empty() ? "" : g.violations.front().description));
    CHECK(g.ok);
    auto m = validate_meas(p);
    INFO((m.violations.empty() ? "" : m.violations.front().description));
    CHECK(m.ok);
}

void check_replay(const CodePatch& pre, const InstructionResult& r) {
    auto replayed = replay(pre, r.instruction);
    CHECK(replayed == r.patch);
}

int count_touching(const CodePatch& p, Coord c) {
    std::size_t idx = p.index_of(c);
    int k = 0;
    for (const auto& s : p.stab_set) k += p.op_touches(s, idx);
    for (const auto& g : p.gauge_set) k += p.op_touches(g, idx);
    return k;
}

}  // namespace

TEST_CASE("DataQ_RM on the d=3 center") {
    auto patch = build_rotated_code(3);
    auto r = dataq_rm(patch, {2, 2});
    check_valid(r.patch);
    check_replay(patch, r);

    CHECK(r.patch.is_disabled({2, 2}));
    CHECK(count_touching(r.patch, {2, 2}) == 0);
    // the four reshaped triangles are the measured gauges
    CHECK(r.patch.gauge_set.size() == 4);
    for (const auto& g : r.patch.gauge_set) CHECK(g.weight() == 3);
    // super-stabilizers live in the generator set, not in Stab
    auto supers_z = recovered_supers(r.patch, CheckType::Z);
    auto supers_x = recovered_supers(r.patch, CheckType::X);
    REQUIRE(supers_z.size() == 1);
    REQUIRE(supers_x.size() == 1);
    CHECK(group_contains(r.patch.gen_stabs, supers_z[0]));
    CHECK(group_contains(r.patch.gen_stabs, supers_x[0]));
}

TEST_CASE("DataQ_RM rejects boundary and syndrome coordinates") {
    auto patch = build_rotated_code(3);
    CHECK_THROWS_AS(dataq_rm(patch, {0, 0}), transform_error);   // corner
    CHECK_THROWS_AS(dataq_rm(patch, {0, 2}), transform_error);   // boundary
    CHECK_THROWS_AS(dataq_rm(patch, {1, 1}), geometry_error);    // syndrome site
    auto once = dataq_rm(patch, {2, 2});
    CHECK_THROWS_AS(dataq_rm(once.patch, {2, 2}), geometry_error);  // already disabled
}

TEST_CASE("DataQ_RM twice on adjacent qubits commutes after canonicalization") {
    auto patch = build_rotated_code(5);
    auto ab = dataq_rm(dataq_rm(patch, {2, 2}).patch, {2, 4}).patch;
    auto ba = dataq_rm(dataq_rm(patch, {2, 4}).patch, {2, 2}).patch;
    check_valid(ab);
    check_valid(ba);
    // measured data agree bit-exactly as built
    CHECK(ab.stab_set == ba.stab_set);
    CHECK(ab.gauge_set == ba.gauge_set);
    CHECK(ab.disabled == ba.disabled);
    CHECK(ab.boundaries == ba.boundaries);
    ab.canonicalize();
    ba.canonicalize();
    CHECK(ab == ba);
}

TEST_CASE("DataQ_RM on disjoint interior targets commutes bit-exactly") {
    auto patch = build_rotated_code(7);
    auto ab = dataq_rm(dataq_rm(patch, {2, 2}).patch, {8, 8}).patch;
    auto ba = dataq_rm(dataq_rm(patch, {8, 8}).patch, {2, 2}).patch;
    CHECK(ab == ba);
}

TEST_CASE("SyndromeQ_RM on the d=5 center produces the octagon code") {
    auto patch = build_rotated_code(5);
    Coord q{3, 3};  // X-type interior check wired to four data qubits
    REQUIRE(patch.syndrome_qubits.at(q) == CheckType::X);
    auto r = syndromeq_rm(patch, q);
    check_valid(r.patch);
    check_replay(patch, r);

    CHECK_FALSE(r.patch.has_syndrome(q));
    CHECK(r.patch.disabled.empty());  // no data qubit leaves
    CHECK(r.patch.gauge_set.size() == 8);  // four Z plaquettes + four X singles

    // the recovered supers: the weight-8 Z octagon and the X check itself
    auto sz = recovered_supers(r.patch, CheckType::Z);
    auto sx = recovered_supers(r.patch, CheckType::X);
    REQUIRE(sz.size() == 1);
    REQUIRE(sx.size() == 1);
    CHECK(sz[0].weight() == 8);
    CHECK(sx[0].weight() == 4);
    CHECK(group_contains(r.patch.gen_stabs, sz[0]));
    CHECK(group_contains(r.patch.gen_stabs, sx[0]));

    // Fig-6 distances: Z preserved at 5, X reduced to 3
    auto d = distance(r.patch);
    CHECK(d.dx == 3);
    CHECK(d.dz == 5);
    auto b = brute_force_distance(r.patch, 5);
    CHECK(b.dx == 3);
    CHECK(b.dz == 5);
}

TEST_CASE("SyndromeQ_RM works beside the boundary on d=3") {
    auto patch = build_rotated_code(3);
    for (Coord q : {Coord{1, 1}, Coord{1, 3}, Coord{3, 1}, Coord{3, 3}}) {
        auto r = syndromeq_rm(patch, q);
        check_valid(r.patch);
        check_replay(patch, r);
    }
    CHECK_THROWS_AS(syndromeq_rm(patch, Coord{2, 2}), geometry_error);  // data site
    CHECK_THROWS_AS(syndromeq_rm(patch, Coord{0, 1}), transform_error);  // boundary check
}

TEST_CASE("SyndromeQ_RM and DataQ_RM on neighbours commute after canonicalization") {
    auto patch = build_rotated_code(5);
    auto ab = dataq_rm(syndromeq_rm(patch, {3, 3}).patch, {2, 6}).patch;
    auto ba = syndromeq_rm(dataq_rm(patch, {2, 6}).patch, {3, 3}).patch;
    check_valid(ab);
    check_valid(ba);
    ab.canonicalize();
    ba.canonicalize();
    CHECK(ab == ba);
}

TEST_CASE("PatchQ_RM removes a boundary data qubit via a fixed Z") {
    auto patch = build_rotated_code(5);
    Coord q{4, 0};  // mid left boundary (X boundary)
    auto r = patchq_rm(patch, BoundarySide::XL1, q);
    check_valid(r.patch);
    check_replay(patch, r);
    CHECK(r.patch.is_disabled(q));
    CHECK(count_touching(r.patch, q) == 0);
    CHECK_FALSE(r.patch.on_boundary(q, BoundarySide::XL1));
    // the notch exposes the next qubit in that row
    CHECK(r.patch.on_boundary({4, 2}, BoundarySide::XL1));
    // boundary surgery leaves no gauge freedom behind
    CHECK(r.patch.gauge_set.empty());
    auto d = distance(r.patch);
    auto b = brute_force_distance(r.patch, 6);
    CHECK(d.dx == b.dx);
    CHECK(d.dz == b.dz);
}

TEST_CASE("PatchQ_RM errors") {
    auto patch = build_rotated_code(5);
    CHECK_THROWS_AS(patchq_rm(patch, BoundarySide::XL1, Coord{4, 4}), transform_error);
    CHECK_THROWS_AS(patchq_rm(patch, BoundarySide::XL1, Coord{4, 16}), geometry_error);
    // named boundary must match
    CHECK_THROWS_AS(patchq_rm(patch, BoundarySide::ZL1, Coord{4, 0}), transform_error);
}

TEST_CASE("PatchQ_RM corner choices differ and cascade") {
    auto patch = build_rotated_code(5);
    Coord corner{0, 8};
    auto rz = patchq_rm(patch, BoundarySide::XL2, corner, CheckType::Z);
    auto rx = patchq_rm(patch, BoundarySide::XL2, corner, CheckType::X);
    check_valid(rz.patch);
    check_valid(rx.patch);
    check_replay(patch, rz);
    check_replay(patch, rx);
    // the Z fix disables only the corner; the X fix walks one further
    CHECK(rz.patch.disabled.size() == 1);
    CHECK(rx.patch.disabled.size() == 2);
    auto dz = distance(rz.patch);
    auto dx = distance(rx.patch);
    auto bz = brute_force_distance(rz.patch, 6);
    auto bx = brute_force_distance(rx.patch, 6);
    CHECK(dz.dx == bz.dx);
    CHECK(dz.dz == bz.dz);
    CHECK(dx.dx == bx.dx);
    CHECK(dx.dz == bx.dz);
}

TEST_CASE("PatchQ_RM removes a boundary syndrome qubit") {
    auto patch = build_rotated_code(5);
    Coord anc{3, 0};  // X half-check on the left boundary
    REQUIRE(patch.has_syndrome(anc));
    auto r = patchq_rm(patch, BoundarySide::XL1, anc);
    check_valid(r.patch);
    check_replay(patch, r);
    CHECK_FALSE(r.patch.has_syndrome(anc));
    auto d = distance(r.patch);
    auto b = brute_force_distance(r.patch, 6);
    CHECK(d.dx == b.dx);
    CHECK(d.dz == b.dz);
}

TEST_CASE("PatchQ_ADD grows d=3 by one column") {
    auto patch = build_rotated_code(3);
    std::vector<AddSite> sites;
    for (int r = 0; r < 3; ++r)
        sites.push_back({{2 * r, 6}, AddSite::Role::Data, '+', CheckType::X, {}});
    sites.push_back({{1, 5}, AddSite::Role::Syndrome, 0, CheckType::X,
                     {{0, 4}, {0, 6}, {2, 4}, {2, 6}}});
    sites.push_back({{3, 5}, AddSite::Role::Syndrome, 0, CheckType::Z,
                     {{2, 4}, {2, 6}, {4, 4}, {4, 6}}});
    sites.push_back({{0, 5}, AddSite::Role::Syndrome, 0, CheckType::Z, {{0, 4}, {0, 6}}});
    sites.push_back({{3, 7}, AddSite::Role::Syndrome, 0, CheckType::X, {{2, 6}, {4, 6}}});

    auto r = patchq_add(patch, sites);
    check_valid(r.patch);
    check_replay(patch, r);
    CHECK(r.patch.active_data_count() == 12);
    CHECK(r.patch.stab_set.size() == 11);
    CHECK(r.patch.gauge_set.empty());

    // logical X extends over the added column; distances become (4, 3)
    CHECK(r.patch.logical_x.weight() == 4);
    auto d = distance(r.patch);
    CHECK(d.dx == 4);
    CHECK(d.dz == 3);
    auto b = brute_force_distance(r.patch, 5);
    CHECK(b.dx == 4);
    CHECK(b.dz == 3);

    // old right half-check ancilla retired, new ancillas in place
    CHECK_FALSE(r.patch.has_syndrome({1, 4}));
    CHECK(r.patch.has_syndrome({1, 5}));
    CHECK(r.patch.has_syndrome({3, 7}));
}

TEST_CASE("PatchQ_ADD with no sites is the identity") {
    auto patch = build_rotated_code(3);
    auto r = patchq_add(patch, {});
    CHECK(r.patch == patch);
    CHECK(r.instruction.expansion.empty());
}

TEST_CASE("PatchQ_ADD validates geometry and orientation") {
    auto patch = build_rotated_code(3);
    CHECK_THROWS_AS(
        patchq_add(patch, {{{0, 20}, AddSite::Role::Data, '+', CheckType::X, {}}}),
        geometry_error);
    // a column extension must enter in |+>
    CHECK_THROWS_AS(
        patchq_add(patch, {{{0, 6}, AddSite::Role::Data, '0', CheckType::X, {}}}),
        transform_error);
    // a row extension must enter in |0>
    CHECK_THROWS_AS(
        patchq_add(patch, {{{6, 0}, AddSite::Role::Data, '+', CheckType::X, {}}}),
        transform_error);
}

TEST_CASE("Fig 4(d) minimal growth: two data plus one syndrome qubit") {
    auto patch = build_rotated_code(3);
    std::vector<AddSite> sites = {
        {{0, 6}, AddSite::Role::Data, '+', CheckType::X, {}},
        {{2, 6}, AddSite::Role::Data, '+', CheckType::X, {}},
        {{1, 5}, AddSite::Role::Syndrome, 0, CheckType::X, {{0, 4}, {0, 6}, {2, 4}, {2, 6}}},
    };
    auto r = patchq_add(patch, sites);
    check_valid(r.patch);
    check_replay(patch, r);
    CHECK(r.patch.active_data_count() == 11);
}
