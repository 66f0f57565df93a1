#include <doctest.h>

#include "helpers.hpp"
#include "cent/basis.hpp"
#include "cent/oracle.hpp"

#include <set>

using namespace cent;
using namespace cent::testing;

namespace {

JordanType type32(RingSpec ring = Q()) {
    return JordanType(ring, {{Scalar::one(ring), {{3, 1}, {2, 1}}}});
}

SpanBasis span_of_basis(const JordanType& jt, RingSpec field) {
    BlockIndex idx(jt);
    std::vector<Matrix> mats;
    for (const auto& e : structured_basis(jt)) mats.push_back(materialize(jt, idx, e).to_ring(field));
    return make_span(field, idx.n(), mats);
}

}  // namespace

TEST_CASE("semicirculant basis") {
    auto g3 = semicirculant_basis(Q(), 3, 3);
    REQUIRE(g3.size() == 3);
    CHECK(g3[1] == Matrix::unit(Q(), 3, 3, 1, 2) + Matrix::unit(Q(), 3, 3, 2, 3));
    CHECK(g3[2] == Matrix::identity(Q(), 3));  // G^n = I_n

    // Rectangular: each G^p intertwines J_3(r) and J_2(r).
    auto g32 = semicirculant_basis(Q(), 3, 2);
    REQUIRE(g32.size() == 2);
    Scalar r = Scalar::of_int(Q(), 4);
    Matrix j3 = assemble_matrix(JordanType(Q(), {{r, {{3, 1}}}}));
    Matrix j2 = assemble_matrix(JordanType(Q(), {{r, {{2, 1}}}}));
    for (const auto& g : g32) CHECK(j3 * g == g * j2);
}

TEST_CASE("structured basis counts") {
    CHECK(structured_basis(type32()).size() == 9);
    CHECK(rank_formula(type32()) == 9);

    JordanType single(Q(), {{Scalar::zero(Q()), {{5, 1}}}});
    CHECK(structured_basis(single).size() == 5);

    JordanType scalars(Q(), {{Scalar::zero(Q()), {{1, 2}}}, {Scalar::one(Q()), {{1, 3}}}});
    CHECK(rank_formula(scalars) == 2 * 2 + 3 * 3);
    CHECK(structured_basis(scalars).size() == 13);
}

TEST_CASE("rank formula on mixed multiplicities") {
    JordanType jt(Q(), {{Scalar::zero(Q()), {{2, 2}, {1, 3}}}});
    // m = (2, 5): 4*2 + (25-4)*1 = 29
    CHECK(rank_formula(jt) == 29);
    CHECK(centralizer_nullspace(assemble_matrix(jt)).dim() == 29);
}

TEST_CASE("closed-form products on sizes (3,2)") {
    JordanType jt = type32();
    BlockIndex idx(jt);
    auto prod = multiply_basis(idx, {0, 0, 1, 2}, {0, 1, 0, 2});
    REQUIRE(prod.has_value());
    CHECK(*prod == BasisElement{0, 0, 0, 2});  // F^2(1,2) F^2(2,1) = F^2(1,1)

    JordanType single(Q(), {{Scalar::zero(Q()), {{3, 1}}}});
    BlockIndex sidx(single);
    CHECK(!multiply_basis(sidx, {0, 0, 0, 1}, {0, 0, 0, 1}).has_value());  // level 1+1-3 < 1

    // diagonal top acts as the identity on its row
    for (const auto& e : structured_basis(jt)) {
        auto left = multiply_basis(idx, {0, e.i, e.i, idx.theta(e.i, e.i)}, e);
        REQUIRE(left.has_value());
        CHECK(*left == e);
    }
}

TEST_CASE("mismatched inner blocks or groups annihilate") {
    JordanType jt(Q(), {{Scalar::zero(Q()), {{2, 1}}}, {Scalar::one(Q()), {{2, 1}}}});
    BlockIndex idx(jt);
    CHECK(!multiply_basis(idx, {0, 0, 0, 2}, {1, 0, 0, 2}).has_value());
    BlockIndex idx32{type32()};
    CHECK(!multiply_basis(idx32, {0, 0, 0, 3}, {0, 1, 1, 2}).has_value());
}

TEST_CASE("closure: products stay inside the basis") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        JordanType jt = random_jordan_type(rng, Q(), 8);
        BlockIndex idx(jt);
        auto basis = structured_basis(jt);
        std::set<BasisElement> all(basis.begin(), basis.end());
        for (const auto& x : basis)
            for (const auto& y : basis)
                if (auto p = multiply_basis(idx, x, y)) CHECK(all.count(*p) == 1);
    }
}

TEST_CASE("bilinear products match materialized multiplication") {
    JordanType jt = type32();
    BlockIndex idx(jt);
    auto basis = structured_basis(jt);

    // identity decomposition acts as the two-sided unit
    AlgebraElement one(Q());
    for (int b = 0; b < idx.num_blocks(); ++b)
        one.add({0, b, b, idx.theta(b, b)}, Scalar::one(Q()));
    CHECK(materialize(jt, idx, one) == Matrix::identity(Q(), 5));

    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 10; ++t) {
        AlgebraElement a(Q()), b(Q());
        for (const auto& e : basis) {
            a.add(e, Scalar::of_int(Q(), d(rng)));
            b.add(e, Scalar::of_int(Q(), d(rng)));
        }
        CHECK(multiply_elements(idx, one, b).coeffs() == b.coeffs());
        Matrix lhs = materialize(jt, idx, multiply_elements(idx, a, b));
        CHECK(lhs == materialize(jt, idx, a) * materialize(jt, idx, b));
        // associativity against the materialized route
        AlgebraElement c(Q());
        for (const auto& e : basis) c.add(e, Scalar::of_int(Q(), d(rng)));
        auto ab_c = multiply_elements(idx, multiply_elements(idx, a, b), c);
        auto a_bc = multiply_elements(idx, a, multiply_elements(idx, b, c));
        CHECK(ab_c.coeffs() == a_bc.coeffs());
    }
}

TEST_CASE("associativity on random triples over random types") {
    std::mt19937_64 rng(301);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int t = 0; t < 8; ++t) {
        JordanType jt = random_jordan_type(rng, GF(7), 7);
        BlockIndex idx(jt);
        auto basis = structured_basis(jt);
        AlgebraElement a(GF(7)), b(GF(7)), c(GF(7));
        for (const auto& e : basis) {
            a.add(e, Scalar::of_int(GF(7), d(rng)));
            b.add(e, Scalar::of_int(GF(7), d(rng)));
            c.add(e, Scalar::of_int(GF(7), d(rng)));
        }
        auto ab_c = multiply_elements(idx, multiply_elements(idx, a, b), c);
        auto a_bc = multiply_elements(idx, a, multiply_elements(idx, b, c));
        CHECK(ab_c.coeffs() == a_bc.coeffs());
        CHECK(materialize(jt, idx, ab_c) ==
              materialize(jt, idx, a) * materialize(jt, idx, b) * materialize(jt, idx, c));
    }
}

TEST_CASE("semicirculants multiply like truncated polynomials") {
    // [1,1,0] * [1,1,0] = [1,2,1] in R[x]/(x^3)
    JordanType jt(Q(), {{Scalar::zero(Q()), {{3, 1}}}});
    BlockIndex idx(jt);
    AlgebraElement a(Q());
    a.add({0, 0, 0, 3}, Scalar::one(Q()));  // constant term 1
    a.add({0, 0, 0, 2}, Scalar::one(Q()));  // coefficient of x
    AlgebraElement sq = multiply_elements(idx, a, a);
    CHECK(sq.coeff({0, 0, 0, 3}) == Scalar::of_int(Q(), 1));
    CHECK(sq.coeff({0, 0, 0, 2}) == Scalar::of_int(Q(), 2));
    CHECK(sq.coeff({0, 0, 0, 1}) == Scalar::of_int(Q(), 1));
}

TEST_CASE("decompose reads coordinates exactly") {
    std::mt19937_64 rng(8);
    JordanType jt = type32(Z());
    BlockIndex idx(jt);
    AlgebraElement a(Z());
    std::uniform_int_distribution<int> d(-5, 5);
    for (const auto& e : structured_basis(jt)) a.add(e, Scalar::of_int(Z(), d(rng)));
    auto back = decompose(jt, idx, materialize(jt, idx, a));
    REQUIRE(back.has_value());
    CHECK(back->coeffs() == a.coeffs());
    CHECK(!decompose(jt, idx, Matrix::unit(Z(), 5, 5, 2, 1)).has_value());
}

TEST_CASE("commutation with the assembled matrix") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 15; ++t) {
        JordanType jt = random_jordan_type(rng, Q(), 8);
        BlockIndex idx(jt);
        Matrix c = assemble_matrix(jt);
        for (const auto& e : structured_basis(jt)) {
            Matrix b = materialize(jt, idx, e);
            CHECK(c * b == b * c);
        }
    }
}

TEST_CASE("span equality with the nullspace oracle") {
    std::mt19937_64 rng(123);
    for (int t = 0; t < 12; ++t) {
        for (RingSpec ring : {Q(), GF(11)}) {
            JordanType jt = random_jordan_type(rng, ring, 8);
            SpanBasis oracle = centralizer_nullspace(assemble_matrix(jt));
            CHECK(oracle.dim() == rank_formula(jt));
            CHECK(span_equal(oracle, span_of_basis(jt, ring)));
        }
    }
}

TEST_CASE("radical basis in the basic case") {
    auto rad = radical_basis_basic(type32());
    CHECK(rad.size() == 7);  // 9 - 2 diagonal tops

    JordanType single(Q(), {{Scalar::zero(Q()), {{4, 1}}}});
    auto rad1 = radical_basis_basic(single);
    CHECK(rad1.size() == 3);
    for (const auto& e : rad1) CHECK(e.p < 4);  // strictly upper semicirculants

    CHECK_THROWS_AS(radical_basis_basic(JordanType(Q(), {{Scalar::zero(Q()), {{2, 2}}}})), Error);
    CHECK_THROWS_AS(radical_basis_basic(type32(Z())), Error);
}

TEST_CASE("radical is a nilpotent ideal for sizes (3,2,1)") {
    JordanType jt(Q(), {{Scalar::zero(Q()), {{3, 1}, {2, 1}, {1, 1}}}});
    BlockIndex idx(jt);
    auto rad = radical_basis_basic(jt);
    std::set<BasisElement> rad_set(rad.begin(), rad.end());
    // N * N stays inside N
    for (const auto& x : rad)
        for (const auto& y : rad)
            if (auto p = multiply_basis(idx, x, y)) CHECK(rad_set.count(*p) == 1);
    // N^n = 0: n-fold products vanish
    std::set<BasisElement> power(rad_set);
    for (int k = 1; k < idx.n() && !power.empty(); ++k) {
        std::set<BasisElement> next;
        for (const auto& x : power)
            for (const auto& y : rad)
                if (auto p = multiply_basis(idx, x, y)) next.insert(*p);
        power = std::move(next);
    }
    CHECK(power.empty());
}

TEST_CASE("cartan tables") {
    CHECK(cartan_dims(type32()) == std::vector<std::vector<int>>{{3, 2}, {2, 2}});
    JordanType single(Q(), {{Scalar::zero(Q()), {{4, 1}}}});
    CHECK(cartan_dims(single) == std::vector<std::vector<int>>{{4}});
    JordanType j31(Q(), {{Scalar::zero(Q()), {{3, 1}, {1, 1}}}});
    CHECK(cartan_dims(j31) == std::vector<std::vector<int>>{{3, 1}, {1, 1}});
    JordanType two(Q(), {{Scalar::zero(Q()), {{2, 1}}}, {Scalar::one(Q()), {{1, 1}}}});
    CHECK(cartan_dims(two) == std::vector<std::vector<int>>{{2, 0}, {0, 1}});
}

TEST_CASE("cartan entries equal block-cut dimensions of the oracle span") {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 6; ++t) {
        JordanType jt = random_jordan_type(rng, Q(), 6);
        BlockIndex idx(jt);
        auto table = cartan_dims(jt);
        SpanBasis oracle = centralizer_nullspace(assemble_matrix(jt));
        for (int a = 0; a < idx.num_blocks(); ++a) {
            Matrix fa = idempotent_f(jt, a);
            for (int b = 0; b < idx.num_blocks(); ++b) {
                Matrix fb = idempotent_f(jt, b);
                std::vector<Matrix> cut;
                for (const auto& m : oracle.mats) cut.push_back(fa * m * fb);
                CHECK(make_span(Q(), idx.n(), cut).dim() == table[a][b]);
            }
        }
    }
}

TEST_CASE("quiver of the Auslander algebra family") {
    JordanType jt21(Q(), {{Scalar::zero(Q()), {{2, 1}, {1, 1}}}});
    QuiverReport q21 = gabriel_quiver(jt21);
    CHECK(q21.vertices == 2);
    CHECK(q21.arrows == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(q21.relations_verified);
    // beta alpha = 0 at the first power
    REQUIRE(!q21.relations.empty());
    CHECK(q21.relations.front() == "(beta alpha)^1 = 0");
}

TEST_CASE("quiver of sizes (3,2): two vertices, (beta alpha)^2 = 0") {
    QuiverReport q = gabriel_quiver(type32());
    CHECK(q.vertices == 2);
    CHECK(q.arrows == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    REQUIRE(!q.relations.empty());
    CHECK(q.relations.front() == "(beta alpha)^2 = 0");
    CHECK(q.relations_verified);

    // the identity holds for materialized matrices as well
    BlockIndex idx(type32());
    Matrix alpha = materialize(type32(), idx, BasisElement{0, 0, 1, 2});
    Matrix beta = materialize(type32(), idx, BasisElement{0, 1, 0, 2});
    CHECK((beta * alpha * beta * alpha).is_zero());
    CHECK(!(alpha * beta * alpha * beta).is_zero());
}

TEST_CASE("quiver of the staircase (3,2,1)") {
    JordanType jt(Q(), {{Scalar::zero(Q()), {{3, 1}, {2, 1}, {1, 1}}}});
    QuiverReport q = gabriel_quiver(jt);
    CHECK(q.vertices == 3);
    CHECK(q.arrows == std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(q.relations_verified);
    bool has_zero_rel = false, has_comm_rel = false;
    for (const auto& r : q.relations) {
        has_zero_rel = has_zero_rel || r == "beta_2 alpha_2 = 0";
        has_comm_rel = has_comm_rel || r == "alpha_2 beta_2 = beta_1 alpha_1";
    }
    CHECK(has_zero_rel);
    CHECK(has_comm_rel);
}

TEST_CASE("product decomposition across eigenvalue groups") {
    JordanType two(Q(), {{Scalar::zero(Q()), {{2, 1}}}, {Scalar::one(Q()), {{2, 1}}}});
    auto parts = product_decomposition(two);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second.size_lists() == std::vector<std::vector<int>>{{2}});
    CHECK(rank_formula(parts[0].second) + rank_formula(parts[1].second) == rank_formula(two));

    CHECK(product_decomposition(type32()).size() == 1);

    // M_2 x M_1 from two scalar groups
    JordanType m2m1(Q(), {{Scalar::zero(Q()), {{1, 2}}}, {Scalar::one(Q()), {{1, 1}}}});
    CHECK(rank_formula(m2m1) == 5);
    CHECK(centralizer_nullspace(assemble_matrix(m2m1)).dim() == 5);

    // cross-group products vanish and the bases glue disjointly
    BlockIndex idx(two);
    auto basis = structured_basis(two);
    for (const auto& x : basis)
        for (const auto& y : basis)
            if (x.group != y.group) CHECK(!multiply_basis(idx, x, y).has_value());

    // each group's basis is the group-diagonal embedding of the
    // restricted type's basis
    JordanType multi(Q(), {{Scalar::zero(Q()), {{2, 1}, {1, 1}}}, {Scalar::one(Q()), {{1, 2}}}});
    BlockIndex midx(multi);
    auto parts2 = product_decomposition(multi);
    size_t total = 0;
    for (size_t g = 0; g < parts2.size(); ++g) {
        const JordanType& sub = parts2[g].second;
        BlockIndex sidx(sub);
        for (const auto& e : structured_basis(sub)) {
            Matrix inner = materialize(sub, sidx, e);
            Matrix glued = embed_psi(multi, midx, static_cast<int>(g), inner);
            BasisElement global{static_cast<int>(g), e.i, e.j, e.p};
            CHECK(glued == materialize(multi, midx, global));
            ++total;
        }
    }
    CHECK(total == structured_basis(multi).size());
}
