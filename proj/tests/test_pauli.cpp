#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "surfdeform/gf2.hpp"
#include "surfdeform/pauli.hpp"
#include "surfdeform/rng.hpp"

using namespace surfdeform;

namespace {

PauliString random_pauli(Rng& rng, std::size_t n) {
    PauliString p(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto r = rng.below(4);
        if (r & 1) p.set_x(i);
        if (r & 2) p.set_z(i);
    }
    p.set_phase(int(rng.below(4)));
    return p;
}

}  // namespace

TEST_CASE("single-site products") {
    auto X0 = PauliString::single(4, 0, 'X');
    auto Z0 = PauliString::single(4, 0, 'Z');

    // X^2 = I
    auto sq = X0 * X0;
    CHECK(sq.is_identity());
    CHECK(sq.phase() == 0);

    // XZ = -ZX: same bits, phases differ by 2
    auto xz = X0 * Z0;
    auto zx = Z0 * X0;
    CHECK(xz.same_bits(zx));
    CHECK(xz.x(0));
    CHECK(xz.z(0));
    CHECK(((zx.phase() - xz.phase()) % 4 + 4) % 4 == 2);

    // disjoint-overlap cancellation: (X0 X1)(X1 X2) = X0 X2
    PauliString a(4), b(4);
    a.set_x(0); a.set_x(1);
    b.set_x(1); b.set_x(2);
    auto ab = a * b;
    CHECK(ab.x(0));
    CHECK_FALSE(ab.x(1));
    CHECK(ab.x(2));
    CHECK(ab.phase() == 0);
}

TEST_CASE("commutation") {
    auto X0 = PauliString::single(4, 0, 'X');
    auto Z0 = PauliString::single(4, 0, 'Z');
    auto Z1 = PauliString::single(4, 1, 'Z');
    CHECK_FALSE(X0.commutes_with(Z0));
    CHECK(X0.commutes_with(Z1));

    PauliString xx(4), zz(4);
    xx.set_x(0); xx.set_x(1);
    zz.set_z(0); zz.set_z(1);
    CHECK(xx.commutes_with(zz));  // two anticommuting overlaps cancel

    CHECK_THROWS_AS((void)X0.commutes_with(PauliString(5)), dimension_error);
}

TEST_CASE("weight") {
    CHECK(PauliString::identity(7).weight() == 0);
    auto y = PauliString::single(7, 0, 'Y');
    CHECK(y.weight() == 1);  // same-site X and Z count once
    PauliString zl(25);
    for (int i = 0; i < 5; ++i) zl.set_z(std::size_t(5 * i));
    CHECK(zl.weight() == 5);
}

TEST_CASE("algebra properties over random samples") {
    Rng rng(20240811);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + rng.below(12);
        auto p = random_pauli(rng, n);
        auto q = random_pauli(rng, n);
        auto r = random_pauli(rng, n);

        CHECK((p * q) * r == p * (q * r));
        CHECK((p * p.inverse()).is_identity());
        CHECK((p * p.inverse()).phase() == 0);
        CHECK(p.commutes_with(q) == q.commutes_with(p));

        auto pq = p * q;
        auto qp = q * p;
        CHECK(pq.same_bits(qp));
        int diff = ((pq.phase() - qp.phase()) % 4 + 4) % 4;
        CHECK(diff == (p.commutes_with(q) ? 0 : 2));
    }
}

TEST_CASE("text form round-trips") {
    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + rng.below(10);
        auto p = random_pauli(rng, n);
        auto back = PauliString::parse(p.str(), n);
        CHECK(back == p);
    }
    auto p = PauliString::parse("+X0 X1 Z4", 6);
    CHECK(p.x(0));
    CHECK(p.x(1));
    CHECK(p.z(4));
    CHECK(p.phase() == 0);
    CHECK(p.str() == "+X0 X1 Z4");
    CHECK(PauliString::parse("+I", 3).is_identity());
    CHECK(PauliString::parse("-Y2", 3).str() == "-Y2");
}

TEST_CASE("span membership and center") {
    std::size_t n = 4;
    std::vector<PauliString> gens;
    PauliString s1(n), s2(n);
    s1.set_x(0); s1.set_x(1);
    s2.set_x(1); s2.set_x(2);
    gens = {s1, s2};
    PauliSpan span(n);
    for (const auto& g : gens) span.add(g);
    CHECK(span.contains(s1 * s2));
    CHECK(span.contains(PauliString::identity(n)));
    CHECK_FALSE(span.contains(PauliString::single(n, 3, 'X')));
    CHECK_FALSE(span.contains(PauliString::single(n, 0, 'Z')));

    // center of <X0, Z0> on one qubit is trivial; of an abelian set, everything
    std::vector<PauliString> anti = {PauliString::single(1, 0, 'X'),
                                     PauliString::single(1, 0, 'Z')};
    CHECK(group_center(anti, 1).empty());
    auto cen = group_center(gens, n);
    CHECK(cen.size() == 2);
}

TEST_CASE("symplectic pairing") {
    std::size_t n = 3;
    std::vector<PauliString> pool = {
        PauliString::single(n, 0, 'X'), PauliString::single(n, 0, 'Z'),
        PauliString::single(n, 1, 'X'), PauliString::single(n, 1, 'Z')};
    auto pairs = symplectic_pairs(pool);
    REQUIRE(pairs.size() == 2);
    for (const auto& [a, b] : pairs) CHECK_FALSE(a.commutes_with(b));
    CHECK(pairs[0].first.commutes_with(pairs[1].first));
    CHECK(pairs[0].first.commutes_with(pairs[1].second));
}
