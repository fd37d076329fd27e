#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "surfdeform/distance.hpp"
#include "surfdeform/gauge.hpp"
#include "surfdeform/patch.hpp"

using namespace surfdeform;

TEST_CASE("pristine rotated codes have the textbook shape") {
    for (int d : {2, 3, 5, 7}) {
        auto patch = build_rotated_code(d);
        CHECK(patch.n() == std::size_t(d) * d);
        CHECK(patch.stab_set.size() == std::size_t(d) * d - 1);
        CHECK(patch.syndrome_qubits.size() == std::size_t(d) * d - 1);
        CHECK(patch.gauge_set.empty());
        CHECK(patch.gauge_pairs.empty());

        // weight profile: interior plaquettes weigh 4, boundary halves 2
        std::size_t w4 = 0, w2 = 0;
        for (const auto& s : patch.stab_set) {
            if (s.weight() == 4) ++w4;
            if (s.weight() == 2) ++w2;
        }
        CHECK(w4 == std::size_t(d - 1) * (d - 1));
        CHECK(w2 == 2 * std::size_t(d - 1));

        CHECK(patch.logical_z.weight() == std::size_t(d));
        CHECK(patch.logical_x.weight() == std::size_t(d));
        CHECK_FALSE(patch.logical_x.commutes_with(patch.logical_z));

        auto gen_rep = validate_generators(patch);
        INFO((gen_rep.violations.empty() ? "" : gen_rep.violations.front().description));
        CHECK(gen_rep.ok);
        CHECK(validate_meas(patch).ok);
    }
    CHECK_THROWS_AS(build_rotated_code(1), operand_error);
}

TEST_CASE("pristine stabilizer count equals data qubits minus one") {
    for (int d : {2, 3, 5}) {
        auto patch = build_rotated_code(d);
        CHECK(gf2_rank(patch.gen_stabs, patch.n()) == patch.active_data_count() - 1);
    }
}

TEST_CASE("boundary descriptors cover the perimeter and alternate") {
    auto patch = build_rotated_code(5);
    CHECK(patch.boundary(BoundarySide::XL1).type == CheckType::X);
    CHECK(patch.boundary(BoundarySide::ZL1).type == CheckType::Z);
    CHECK(patch.boundary(BoundarySide::XL1).qubits.size() == 5);

    // non-corner boundary qubits appear in exactly one descriptor, corners in two
    std::map<Coord, int> hits;
    for (auto s : {BoundarySide::XL1, BoundarySide::XL2, BoundarySide::ZL1, BoundarySide::ZL2})
        for (Coord c : patch.boundary(s).qubits) hits[c]++;
    int corners = 0;
    for (auto& [c, k] : hits) {
        CHECK(k <= 2);
        if (k == 2) ++corners;
    }
    CHECK(corners == 4);
}

TEST_CASE("validators flag rank deficiency") {
    auto patch = build_rotated_code(3);
    patch.gen_stabs.push_back(patch.gen_stabs.front());  // duplicated generator
    auto rep = validate_generators(patch);
    CHECK_FALSE(rep.ok);
    bool saw = false;
    for (const auto& v : rep.violations) saw = saw || v.condition == "T1.1";
    CHECK(saw);
}

TEST_CASE("validators flag a missing gauge half") {
    // Take the Fig-style cross, demote checks around the center, then drop one
    // gauge half so its super-stabilizer product is unrecoverable.
    auto patch = build_cross_patch();
    REQUIRE(validate_generators(patch).ok);
    REQUIRE(validate_meas(patch).ok);

    auto x5 = patch.single({2, 2}, 'X');
    auto z5 = patch.single({2, 2}, 'Z');
    auto r1 = s2g(patch, z5);
    auto r2 = s2g(r1.patch, x5);
    CHECK(validate_meas(r2.patch).ok);

    CodePatch broken = r2.patch;
    broken.remove_gauge(broken.gauge_set.front());
    CHECK_FALSE(validate_meas(broken).ok);
}

TEST_CASE("group membership") {
    auto patch = build_rotated_code(3);
    const auto& gens = patch.gen_stabs;
    CHECK(group_contains(gens, PauliString::identity(patch.n())));
    CHECK(group_contains(gens, gens[0] * gens[1]));
    CHECK_FALSE(group_contains(gens, patch.logical_z));

    auto signedm = group_contains_signed(gens, gens[0] * gens[1]);
    CHECK(signedm.in_span);
    CHECK(signedm.sign_consistent);
    auto flipped = gens[0] * gens[1];
    flipped.set_phase(2);
    auto sm2 = group_contains_signed(gens, flipped);
    CHECK(sm2.in_span);
    CHECK_FALSE(sm2.sign_consistent);
}

TEST_CASE("cross fixture matches the removal diagrams") {
    auto patch = build_cross_patch();
    CHECK(patch.n() == 5);
    CHECK(patch.stab_set.size() == 4);
    CHECK(validate_generators(patch).ok);
    CHECK(validate_meas(patch).ok);
    auto d = brute_force_distance(patch, 3);
    CHECK(d.dx == 2);
    CHECK(d.dz == 2);
}
