/*
   Copyright 2026 the ffdp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffdp/residue.hpp"
#include "ffdp/rng.hpp"
#include "ffdp/stats.hpp"

using namespace ffdp;

TEST_CASE("ring construction: split sizes") {
    auto f3 = FieldCtx::make(3, 1);
    auto ring = ResidueRing::make(parse_poly(f3, "x^2-1"));
    CHECK(ring->size() == 9);
    CHECK(ring->r() == 2);
    CHECK(ring->squarefree());
    for (int i = 0; i < 2; ++i) CHECK(ring->component(i).deg() == 1);

    auto f2 = FieldCtx::make(2, 1);
    auto ramified = ResidueRing::make(parse_poly(f2, "x^2"));
    CHECK_FALSE(ramified->squarefree());
    CHECK_THROWS_AS(ramified->crt_split(ramified->one()), Error);

    auto lapin = ResidueRing::make(parse_poly(f2, "x^63+x^7+1"));
    CHECK(lapin->r() == 7);
    for (int i = 0; i < 7; ++i) CHECK(lapin->component(i).deg() == 9);
}

TEST_CASE("crt_split basics") {
    auto f3 = FieldCtx::make(3, 1);
    auto ring = ResidueRing::make(parse_poly(f3, "x^2-1"));

    auto z = ring->crt_split(ring->zero());
    for (const auto& c : z) CHECK(c.is_zero());

    // x mod (x-1) = 1, x mod (x+1) = -1 = 2; factor order is (x+1), (x+2)
    // by the canonical ordering: x+1 has root -1 = 2, x+2 has root 1.
    auto sx = ring->crt_split(Poly::variable(f3, Var::X));
    REQUIRE(sx.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        Fe root = f3->neg(ring->component(i).coeff(0));
        CHECK(sx[i] == Poly::constant(f3, Var::X, root));
    }
}

TEST_CASE("crt_combine basics and idempotents") {
    auto f3 = FieldCtx::make(3, 1);
    auto ring = ResidueRing::make(parse_poly(f3, "x^2-1"));
    std::vector<Poly> ones{ring->one() % ring->component(0), ring->one() % ring->component(1)};
    CHECK(ring->crt_combine(ones) == ring->one());
    CHECK(ring->crt_combine({ring->zero(), ring->zero()}) == ring->zero());

    // Lagrange idempotent oracle in F_5[X]/(X^4-1): the combine of the
    // indicator of the component with root a equals prod_{b != a}(X-b)/(a-b).
    auto f5 = FieldCtx::make(5, 1);
    auto r5 = ResidueRing::make(parse_poly(f5, "x^4-1"));
    REQUIRE(r5->r() == 4);
    for (int i = 0; i < 4; ++i) {
        Fe a = f5->neg(r5->component(i).coeff(0));
        Poly lagrange = Poly::constant(f5, Var::X, 1);
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            Fe b = f5->neg(r5->component(j).coeff(0));
            Poly num = Poly::variable(f5, Var::X) - Poly::constant(f5, Var::X, b);
            lagrange = lagrange * (num * f5->inv(f5->sub(a, b)));
        }
        std::vector<Poly> ind(4, r5->zero());
        ind[i] = r5->one();
        CHECK(r5->crt_combine(ind) == lagrange % r5->modulus());
    }

    CHECK_THROWS_AS(ring->crt_combine({ring->one(), Poly::variable(f3, Var::X) * 1 +
                                                        Poly::monomial(f3, Var::X, 3)}),
                    Error);
}

TEST_CASE("split/combine round-trip: exhaustive small, random Lapin") {
    auto f3 = FieldCtx::make(3, 1);
    auto ring = ResidueRing::make(parse_poly(f3, "x^4-x^2+1") * parse_poly(f3, "x^2-1"));
    // any squarefree modulus works; use x^4-1 for exhaustive coverage <= 3^4
    auto r4 = ResidueRing::make(parse_poly(f3, "x^4-1"));
    for (std::uint64_t code = 0; code < r4->size(); ++code) {
        Poly x = r4->element(code);
        CHECK(r4->crt_combine(r4->crt_split(x)) == x);
    }

    auto f2 = FieldCtx::make(2, 1);
    auto lapin = ResidueRing::make(parse_poly(f2, "x^63+x^7+1"));
    Rng rng(31337);
    for (int i = 0; i < 200; ++i) {
        Poly x = lapin->uniform(rng);
        auto parts = lapin->crt_split(x);
        CHECK(lapin->crt_combine(parts) == x);
        // split of combine is identity too
        auto again = lapin->crt_split(lapin->crt_combine(parts));
        CHECK(again == parts);
    }
}

TEST_CASE("split is a ring homomorphism") {
    auto f2 = FieldCtx::make(2, 1);
    auto f3 = FieldCtx::make(3, 1);
    for (const auto& ring : {ResidueRing::make(parse_poly(f3, "x^2-1")),
                             ResidueRing::make(parse_poly(f2, "x^63+x^7+1"))}) {
        Rng rng(7);
        for (int i = 0; i < 1000; ++i) {
            Poly x = ring->uniform(rng), y = ring->uniform(rng);
            auto sx = ring->crt_split(x), sy = ring->crt_split(y);
            auto sprod = ring->crt_split(ring->mul(x, y));
            auto ssum = ring->crt_split(ring->add(x, y));
            for (int j = 0; j < ring->r(); ++j) {
                CHECK(sprod[j] == (sx[j] * sy[j]) % ring->component(j));
                CHECK(ssum[j] == (sx[j] + sy[j]) % ring->component(j));
            }
        }
    }
}

TEST_CASE("component inverses multiply back to 1") {
    auto f3 = FieldCtx::make(3, 1);
    auto ring = ResidueRing::make(parse_poly(f3, "x^2-1"));
    CHECK(ring->component_inverse(ring->one(), 0) == ring->one());
    CHECK(ring->component_inverse(Poly::constant(f3, Var::X, 2), 0) ==
          Poly::constant(f3, Var::X, 2));

    auto f2 = FieldCtx::make(2, 1);
    auto lapin = ResidueRing::make(parse_poly(f2, "x^63+x^7+1"));
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        int j = static_cast<int>(rng.below(7));
        Poly c = Poly::from_code(f2, Var::X, 1 + rng.below((1u << 9) - 1));
        Poly inv = lapin->component_inverse(c, j);
        CHECK((c * inv) % lapin->component(j) == lapin->one());
    }
    CHECK_THROWS_AS(lapin->component_inverse(lapin->zero(), 0), Error);
}

TEST_CASE("uniform sampling pushes forward to uniform on components") {
    auto f3 = FieldCtx::make(3, 1);
    auto ring = ResidueRing::make(parse_poly(f3, "x^2-1"));
    Rng rng(2718);
    std::vector<std::vector<std::uint64_t>> counts(2, std::vector<std::uint64_t>(3, 0));
    for (int i = 0; i < 10000; ++i) {
        auto parts = ring->crt_split(ring->uniform(rng));
        for (int j = 0; j < 2; ++j) counts[j][parts[j].coeff(0)]++;
    }
    std::vector<double> probs(3, 1.0 / 3.0);
    for (int j = 0; j < 2; ++j) CHECK(chi_square_gof(counts[j], probs) > 0.01);
}
