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

#include <algorithm>
#include <set>

#include "ffdp/carlitz.hpp"
#include "ffdp/rng.hpp"

using namespace ffdp;

namespace {

// Evaluate the Carlitz polynomial of M at a residue of the ring.
Poly carlitz_eval(const CarlitzPtr& ring, const Poly& M, const Poly& x) {
    BiPoly b(M.ctx(), carlitz_poly(M).to_bipoly());
    Poly spec = b.specialize(ring->base()->ctx(), ring->t_image());
    return compose_mod(spec, x, ring->base()->modulus());
}

Poly random_T_poly(const FieldPtr& ctx, int max_deg, Rng& rng) {
    std::vector<Fe> c(rng.below(max_deg + 1) + 1);
    for (auto& x : c) x = static_cast<Fe>(rng.below(ctx->q()));
    return Poly(ctx, Var::T, std::move(c));
}

}  // namespace

TEST_CASE("carlitz_poly base cases") {
    for (int q : {2, 3, 5}) {
        auto F = FieldCtx::make(q, 1);
        Poly T = Poly::variable(F, Var::T);
        Poly one = Poly::constant(F, Var::T, 1);

        // [1](X) = X
        auto id = carlitz_poly(one);
        CHECK(id.qdeg() == 0);
        CHECK(id.coeff(0) == one);

        // [T](X) = X^q + T X
        auto bt = carlitz_poly(T);
        REQUIRE(bt.qdeg() == 1);
        CHECK(bt.coeff(0) == T);
        CHECK(bt.coeff(1) == one);

        // [T^2](X) = X^{q^2} + (T^q + T) X^q + T^2 X
        auto bt2 = carlitz_poly(T * T);
        REQUIRE(bt2.qdeg() == 2);
        CHECK(bt2.coeff(0) == T * T);
        CHECK(bt2.coeff(1) == Poly::monomial(F, Var::T, q) + T);
        CHECK(bt2.coeff(2) == one);

        // [T^2+T+1](X) = X^{q^2} + (T^q+T+1) X^q + (T^2+T+1) X
        Poly m = T * T + T + one;
        auto bm = carlitz_poly(m);
        REQUIRE(bm.qdeg() == 2);
        CHECK(bm.coeff(0) == m);
        CHECK(bm.coeff(1) == Poly::monomial(F, Var::T, q) + T + one);
        CHECK(bm.coeff(2) == one);
    }
    auto f2 = FieldCtx::make(2, 1);
    CHECK_THROWS_AS(carlitz_poly(Poly::zero(f2, Var::T)), Error);
}

TEST_CASE("carlitz_compose: [M] o [N] = [N] o [M] = [MN]") {
    for (int q : {2, 3}) {
        auto F = FieldCtx::make(q, 1);
        Poly T = Poly::variable(F, Var::T);
        CHECK(carlitz_compose(carlitz_poly(T), carlitz_poly(T)) == carlitz_poly(T * T));
        Rng rng(q);
        for (int trial = 0; trial < 50; ++trial) {
            Poly M = random_T_poly(F, 2, rng), N = random_T_poly(F, 2, rng);
            if (M.is_zero() || N.is_zero()) continue;
            auto lhs = carlitz_compose(carlitz_poly(M), carlitz_poly(N));
            auto rhs = carlitz_compose(carlitz_poly(N), carlitz_poly(M));
            CHECK(lhs == rhs);
            CHECK(lhs == carlitz_poly(M * N));
            CHECK(carlitz_compose(carlitz_poly(Poly::constant(F, Var::T, 1)),
                                  carlitz_poly(M)) == carlitz_poly(M));
        }
    }
}

TEST_CASE("carlitz_cyclotomic") {
    for (int q : {2, 3, 5}) {
        auto F = FieldCtx::make(q, 1);
        Poly T = Poly::variable(F, Var::T);

        // Phi_T(T, X) = X^{q-1} + T
        BiPoly phi_t = carlitz_cyclotomic(T);
        REQUIRE(phi_t.deg() == q - 1);
        CHECK(phi_t.coeffs()[0] == T);
        for (int i = 1; i < q - 1; ++i) CHECK(phi_t.coeffs()[i].is_zero());
        CHECK(phi_t.coeffs()[q - 1] == Poly::constant(F, Var::T, 1));

        // Phi_{T^2} = [T^2](X)/[T](X), degree q(q-1)
        BiPoly phi_t2 = carlitz_cyclotomic(T * T);
        CHECK(phi_t2.deg() == q * (q - 1));
        BiPoly b2(F, carlitz_poly(T * T).to_bipoly());
        BiPoly b1(F, carlitz_poly(T).to_bipoly());
        CHECK(phi_t2 == b2.exact_div(b1));
    }
    auto f2 = FieldCtx::make(2, 1);
    CHECK(carlitz_cyclotomic(parse_poly(f2, "t^6+t^3+1")).deg() == 63);
    CHECK_THROWS_AS(carlitz_cyclotomic(Poly::zero(f2, Var::T)), Error);
}

TEST_CASE("predict_splitting") {
    for (int q : {2, 3, 5}) {
        auto F = FieldCtx::make(q, 1);
        auto pred = predict_splitting(Poly::variable(F, Var::T), parse_poly(F, "t+1"));
        CHECK_FALSE(pred.ramified);
        CHECK(pred.f == 1);
        CHECK(pred.r == static_cast<std::uint64_t>(q - 1));
        CHECK(predict_splitting(Poly::variable(F, Var::T), Poly::variable(F, Var::T)).ramified);
    }
    auto f2 = FieldCtx::make(2, 1);
    auto lapin = predict_splitting(parse_poly(f2, "t^6+t^3+1"), Poly::variable(f2, Var::T));
    CHECK_FALSE(lapin.ramified);
    CHECK(lapin.f == 9);
    CHECK(lapin.r == 7);
}

TEST_CASE("carlitz_ring construction") {
    for (int q : {3, 5}) {
        auto F = FieldCtx::make(q, 1);
        auto ring = CarlitzRing::make(Poly::variable(F, Var::T), parse_poly(F, "t+1"));
        // X^{q-1} + T at T = -1 is X^{q-1} - 1
        Poly expect = Poly::monomial(F, Var::X, q - 1) - Poly::constant(F, Var::X, 1);
        CHECK(ring->base()->modulus() == expect);
        CHECK(ring->r() == static_cast<std::uint64_t>(q - 1));
        CHECK(ring->f() == 1);
        CHECK(ring->galois_group().size() == static_cast<std::size_t>(q - 1));
    }

    auto f2 = FieldCtx::make(2, 1);
    auto lapin = CarlitzRing::make(parse_poly(f2, "t^6+t^3+1"), Poly::variable(f2, Var::T));
    CHECK(lapin->n() == 63);
    CHECK(lapin->f() == 9);
    CHECK(lapin->r() == 7);
    CHECK(lapin->base()->modulus() == parse_poly(f2, "x^63+x^7+1"));

    CHECK_THROWS_AS(CarlitzRing::make(Poly::variable(f2, Var::T), Poly::variable(f2, Var::T)),
                    Error);
    // deg Q > 1 without the experimental flag
    CHECK_THROWS_AS(CarlitzRing::make(Poly::variable(f2, Var::T), parse_poly(f2, "t^2+t+1")),
                    Error);
}

TEST_CASE("experimental deg Q > 1 ring") {
    auto f2 = FieldCtx::make(2, 1);
    auto ring = CarlitzRing::make(Poly::variable(f2, Var::T), parse_poly(f2, "t^2+t+1"), true);
    // M = T: Phi = X + T, so the base ring is F_4[X]/(X + c), a copy of F_4
    CHECK(ring->base()->ctx()->q() == 4);
    CHECK(ring->n() == 1);
    CHECK(ring->r() == 1);
}

TEST_CASE("galois_apply on M = T is coefficient-wise scaling m(X) -> m(bX)") {
    auto f5 = FieldCtx::make(5, 1);
    auto ring = CarlitzRing::make(Poly::variable(f5, Var::T), parse_poly(f5, "t+1"));
    Rng rng(4);
    for (Fe b = 1; b < 5; ++b) {
        Poly A = Poly::constant(f5, Var::T, b);
        for (int trial = 0; trial < 20; ++trial) {
            Poly x = ring->base()->uniform(rng);
            CHECK(ring->apply(A, x) == x.shift_var_scale(b) % ring->base()->modulus());
        }
    }
    CHECK_THROWS_AS(ring->apply(Poly::zero(f5, Var::T), ring->base()->one()), Error);
}

TEST_CASE("sigma_1 identity and composition sigma_A . sigma_B = sigma_AB") {
    auto f2 = FieldCtx::make(2, 1);
    auto ring = CarlitzRing::make(parse_poly(f2, "t^6+t^3+1"), Poly::variable(f2, Var::T));
    Rng rng(6);
    const auto& G = ring->galois_group();
    Poly one = Poly::constant(f2, Var::T, 1);
    for (int trial = 0; trial < 100; ++trial) {
        Poly x = ring->base()->uniform(rng);
        CHECK(ring->apply(one, x) == x);
        const Poly& A = G[rng.below(G.size())];
        const Poly& B = G[rng.below(G.size())];
        CHECK(ring->apply(A, ring->apply(B, x)) ==
              ring->apply((A * B) % ring->conductor(), x));
        // automorphism: multiplicative and additive
        Poly y = ring->base()->uniform(rng);
        CHECK(ring->apply(A, ring->base()->mul(x, y)) ==
              ring->base()->mul(ring->apply(A, x), ring->apply(A, y)));
        CHECK(ring->apply(A, x + y) == ring->apply(A, x) + ring->apply(A, y));
        // bijectivity via the inverse unit
        CHECK(ring->apply(ring->unit_inverse(A), ring->apply(A, x)) == x);
    }
}

TEST_CASE("prime permutations") {
    auto f5 = FieldCtx::make(5, 1);
    auto ring = CarlitzRing::make(Poly::variable(f5, Var::T), parse_poly(f5, "t+1"));
    // identity for A = 1
    auto id = ring->prime_permutation(Poly::constant(f5, Var::T, 1));
    for (int i = 0; i < 4; ++i) CHECK(id[i] == i);

    // A = 2 sends the idempotent at root a to the one at root a * inv(2) = 3a
    auto p2 = ring->prime_permutation(Poly::constant(f5, Var::T, 2));
    for (int i = 0; i < 4; ++i) {
        Fe root_i = f5->neg(ring->base()->component(i).coeff(0));
        Fe moved = f5->mul(root_i, f5->inv(2));
        int j = p2[i];
        CHECK(f5->neg(ring->base()->component(j).coeff(0)) == moved);
    }

    // transitivity: orbit of component 0 under all units is everything
    auto f2 = FieldCtx::make(2, 1);
    auto lapin = CarlitzRing::make(parse_poly(f2, "t^6+t^3+1"), Poly::variable(f2, Var::T));
    std::set<int> orbit;
    for (const auto& A : lapin->galois_group()) orbit.insert(lapin->prime_permutation(A)[0]);
    CHECK(orbit.size() == 7);

    // homomorphism: pi_AB = pi_A . pi_B
    Rng rng(8);
    const auto& G = lapin->galois_group();
    for (int trial = 0; trial < 50; ++trial) {
        const Poly& A = G[rng.below(G.size())];
        const Poly& B = G[rng.below(G.size())];
        auto pa = lapin->prime_permutation(A);
        auto pb = lapin->prime_permutation(B);
        auto pab = lapin->prime_permutation((A * B) % lapin->conductor());
        for (int i = 0; i < 7; ++i) CHECK(pab[i] == pa[pb[i]]);
    }
}

TEST_CASE("decomposition groups") {
    auto f3 = FieldCtx::make(3, 1);
    auto split = CarlitzRing::make(Poly::variable(f3, Var::T), parse_poly(f3, "t+1"));
    for (int i = 0; i < static_cast<int>(split->r()); ++i) {
        auto D = split->decomposition_group(i);
        REQUIRE(D.size() == 1);
        CHECK(D[0].is_one());
    }

    auto f2 = FieldCtx::make(2, 1);
    auto lapin = CarlitzRing::make(parse_poly(f2, "t^6+t^3+1"), Poly::variable(f2, Var::T));
    auto D0 = lapin->decomposition_group(0);
    CHECK(D0.size() == 9);
    // abelian Galois group: all decomposition groups coincide
    for (int i = 1; i < 7; ++i) CHECK(lapin->decomposition_group(i) == D0);
}

TEST_CASE("additivity and torsion inside rings") {
    for (int q : {2, 3}) {
        auto F = FieldCtx::make(q, 1);
        Rng rng(q * 13);
        for (int trial = 0; trial < 100; ++trial) {
            Poly M = random_T_poly(F, 3, rng).monic();
            if (M.deg() < 1) continue;
            // pick a linear Q coprime to M
            Poly Q = Poly(F, Var::T, {static_cast<Fe>(rng.below(q)), 1});
            if (!(M % Q).is_zero()) {
                auto ring = CarlitzRing::make(M, Q);
                for (int k = 0; k < 5; ++k) {
                    Poly x = ring->base()->uniform(rng), y = ring->base()->uniform(rng);
                    CHECK(carlitz_eval(ring, M, x + y) ==
                          carlitz_eval(ring, M, x) + carlitz_eval(ring, M, y));
                    // F_q-linearity
                    Fe a = static_cast<Fe>(rng.below(q));
                    CHECK(carlitz_eval(ring, M, x * a) == carlitz_eval(ring, M, x) * a);
                }
                // torsion: [M](c, X) = 0 mod every component of Phi_M(c, X)
                BiPoly b(F, carlitz_poly(M).to_bipoly());
                Poly spec = b.specialize(ring->base()->ctx(), ring->t_image());
                for (int i = 0; i < ring->base()->r(); ++i)
                    CHECK((spec % ring->base()->component(i)).is_zero());
            }
        }
    }
}

TEST_CASE("splitting matches factorization for all M deg <= 3, linear Q") {
    for (int q : {2, 3}) {
        auto F = FieldCtx::make(q, 1);
        for (int d = 1; d <= 3; ++d) {
            std::uint64_t count = 1;
            for (int i = 0; i < d; ++i) count *= q;
            for (std::uint64_t code = 0; code < count; ++code) {
                Poly M = Poly::from_code(F, Var::T, code) + Poly::monomial(F, Var::T, d);
                for (Fe q0 = 0; q0 < q; ++q0) {
                    Poly Q(F, Var::T, {q0, 1});
                    if ((M % Q).is_zero()) continue;
                    auto pred = predict_splitting(M, Q);
                    REQUIRE_FALSE(pred.ramified);
                    auto ring = CarlitzRing::make(M, Q);  // construction re-verifies
                    CHECK(ring->f() == pred.f);
                    CHECK(ring->r() == pred.r);
                    CHECK(ring->base()->factorization().squarefree());
                    // constant-field statement: no factor degree exceeds f
                    for (int i = 0; i < ring->base()->r(); ++i)
                        CHECK(ring->base()->component(i).deg() ==
                              static_cast<int>(pred.f));
                }
            }
        }
    }
}

TEST_CASE("subgroup split rings") {
    auto f5 = FieldCtx::make(5, 1);
    auto full = subgroup_split_ring(f5, {1, 2, 3, 4});
    auto viaT = CarlitzRing::make(Poly::variable(f5, Var::T), parse_poly(f5, "t+1"));
    CHECK(full.ring->modulus() == viaT->base()->modulus());

    auto f7 = FieldCtx::make(7, 1);
    auto sub = subgroup_split_ring(f7, {1, 2, 4});
    // (X-1)(X-2)(X-4) = X^3 - 7X^2 + 14X - 8 = X^3 - 1 over F_7
    CHECK(sub.ring->modulus() == parse_poly(f7, "x^3-1"));
    CHECK(sub.ring->r() == 3);
    // transitive on the 3 components
    std::set<int> orbit;
    for (Fe h : sub.subgroup) orbit.insert(sub.prime_permutation(h)[0]);
    CHECK(orbit.size() == 3);
    // Hamming support preserved
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        Poly x = sub.ring->uniform(rng);
        for (Fe h : sub.subgroup) CHECK(sub.ring->weight(sub.apply(h, x)) == sub.ring->weight(x));
    }

    auto trivial = subgroup_split_ring(f7, {1});
    CHECK(trivial.ring->r() == 1);
    CHECK(trivial.ring->modulus().deg() == 1);

    // coset shift
    auto coset = subgroup_split_ring(f7, {1, 2, 4}, 3);
    CHECK(coset.roots == std::vector<Fe>{3, 5, 6});

    CHECK_THROWS_AS(subgroup_split_ring(f7, {1, 2}), Error);   // not closed
    CHECK_THROWS_AS(subgroup_split_ring(f7, {2, 4}), Error);   // no identity
    CHECK_THROWS_AS(subgroup_split_ring(f7, {0, 1}), Error);   // zero
}
