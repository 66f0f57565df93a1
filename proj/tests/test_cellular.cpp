#include <doctest.h>

#include "helpers.hpp"
#include "cent/cellular.hpp"
#include "cent/oracle.hpp"

using namespace cent;
using namespace cent::testing;

namespace {

JordanType type32(RingSpec ring = Q()) {
    return JordanType(ring, {{Scalar::one(ring), {{3, 1}, {2, 1}}}});
}

}  // namespace

TEST_CASE("cell datum of sizes (3,2)") {
    CellDatum d = build_cell_datum(type32());
    CHECK(d.basis.size() == 9);  // 4 + 4 + 1 over the levels
    CHECK(d.idx.M_size(0, 1) == 2);
    CHECK(d.idx.M_size(0, 2) == 2);
    CHECK(d.idx.M_size(0, 3) == 1);
}

TEST_CASE("cell datum of the full matrix algebra") {
    JordanType jt(Q(), {{Scalar::zero(Q()), {{1, 4}}}});
    CellDatum d = build_cell_datum(jt);
    CHECK(d.basis.size() == 16);
    const GroupIndex& g = d.idx.group(0);
    CHECK(g.sizes.front() == 1);       // single level
    CHECK(d.idx.M_size(0, 1) == 4);    // M(1) = all blocks
    // level-1 elements materialize to matrix units
    for (const auto& e : d.basis) {
        Matrix m = materialize(jt, d.idx, e);
        CHECK(m == Matrix::unit(Q(), 4, 4, e.i + 1, e.j + 1));
    }
}

TEST_CASE("multi-group datum is a disjoint union") {
    JordanType jt(Q(), {{Scalar::zero(Q()), {{2, 1}}}, {Scalar::one(Q()), {{1, 2}}}});
    CellDatum d = build_cell_datum(jt);
    CHECK(d.basis.size() == 2 + 4);
    for (const auto& e : d.basis) {
        int k = d.find(e);
        CHECK(d.basis[d.iota[k]].group == e.group);
    }
}

TEST_CASE("involution swaps indices and reverses products") {
    CellDatum d = build_cell_datum(type32());
    AlgebraElement f12 = AlgebraElement::basis(Q(), {0, 0, 1, 2});
    AlgebraElement img = involution_apply(d, f12);
    CHECK(img.coeff({0, 1, 0, 2}).is_one());

    AlgebraElement one(Q());
    for (int b = 0; b < d.idx.num_blocks(); ++b)
        one.add({0, b, b, d.idx.theta(b, b)}, Scalar::one(Q()));
    CHECK(involution_apply(d, one).coeffs() == one.coeffs());

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < 10; ++t) {
        AlgebraElement a(Q()), b(Q());
        for (const auto& e : d.basis) {
            a.add(e, Scalar::of_int(Q(), c(rng)));
            b.add(e, Scalar::of_int(Q(), c(rng)));
        }
        AlgebraElement lhs = involution_apply(d, multiply_elements(d.idx, a, b));
        AlgebraElement rhs =
            multiply_elements(d.idx, involution_apply(d, b), involution_apply(d, a));
        CHECK(lhs.coeffs() == rhs.coeffs());
    }
}

TEST_CASE("cell product rule") {
    CellDatum d = build_cell_datum(type32());
    // top level: C^3(1,1) C^3(1,1) = C^3(1,1)
    auto top = product_star(d, 0, 3, 0, 0, 3, 0, 0);
    REQUIRE(top.has_value());
    CHECK(*top == BasisElement{0, 0, 0, 3});
    // level drop: C^2(2,1) C^2(1,2) = C^1(2,2)
    auto drop = product_star(d, 0, 2, 1, 0, 2, 0, 1);
    REQUIRE(drop.has_value());
    CHECK(*drop == BasisElement{0, 1, 1, 1});
    // v != i kills the product
    CHECK(!product_star(d, 0, 2, 0, 1, 3, 0, 0).has_value());
    // out-of-membership indices are contract violations
    CHECK_THROWS_AS(product_star(d, 0, 3, 1, 0, 3, 0, 0), Error);
}

TEST_CASE("cell product agrees with the structure constants everywhere") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 15; ++t) {
        JordanType jt = random_jordan_type(rng, Q(), 8);
        CellDatum d = build_cell_datum(jt);
        for (const auto& x : d.basis)
            for (const auto& y : d.basis) {
                if (x.group != y.group) continue;
                auto star = product_star(d, x.group, x.p, x.i, x.j, y.p, y.i, y.j);
                auto direct = multiply_basis(d.idx, x, y);
                CHECK(star == direct);
            }
    }
}

TEST_CASE("cellularity axioms pass over Q, GF(5) and Z") {
    CHECK(check_cellularity(build_cell_datum(type32())).pass());
    JordanType jt21(GF(5), {{Scalar::zero(GF(5)), {{2, 1}, {1, 1}}}});
    CHECK(check_cellularity(build_cell_datum(jt21)).pass());
    CHECK(check_cellularity(build_cell_datum(type32(Z()))).pass());
}

TEST_CASE("corrupted involution fails (C2)") {
    CellDatum d = build_cell_datum(type32());
    int k = d.find({0, 0, 1, 2});
    d.iota[k] = d.find({0, 0, 1, 1});  // wrong target
    CellReport rep = check_cellularity(d);
    CHECK(rep.c1);
    CHECK(!rep.c2);
    CHECK(rep.counterexample.find("(C2)") == 0);
}

TEST_CASE("surviving levels of the cell chain") {
    CellChain c32 = cell_chain_simples(build_cell_datum(type32()));
    CHECK(c32.surviving == std::vector<std::vector<int>>{{2, 3}});
    CHECK(c32.count == 2);

    JordanType full(Q(), {{Scalar::zero(Q()), {{1, 5}}}});
    CellChain cf = cell_chain_simples(build_cell_datum(full));
    CHECK(cf.surviving == std::vector<std::vector<int>>{{1}});
    CHECK(cf.count == 1);

    JordanType multi(Q(), {{Scalar::zero(Q()), {{2, 1}, {1, 1}}}, {Scalar::one(Q()), {{1, 1}}}});
    CHECK(cell_chain_simples(build_cell_datum(multi)).count == 3);
}

TEST_CASE("simple count matches the class count on random types") {
    std::mt19937_64 rng(70);
    for (int t = 0; t < 20; ++t) {
        JordanType jt = random_jordan_type(rng, Q(), 8);
        CellChain chain = cell_chain_simples(build_cell_datum(jt));
        int expected = 0;
        for (const auto& g : jt.groups()) expected += static_cast<int>(g.blocks.size());
        CHECK(chain.count == expected);
    }
}

TEST_CASE("quasi-heredity criterion") {
    QuasiHeredity q32 = is_quasi_hereditary(type32());
    CHECK(!q32.value);
    CHECK(q32.failing_group == 0);

    JordanType jt21(Q(), {{Scalar::zero(Q()), {{2, 1}, {1, 1}}}});
    CHECK(is_quasi_hereditary(jt21).value);

    JordanType jt321(Q(), {{Scalar::zero(Q()), {{3, 1}, {2, 1}, {1, 1}}}});
    CHECK(is_quasi_hereditary(jt321).value);
    CellChain chain = cell_chain_simples(build_cell_datum(jt321));
    CHECK(chain.surviving == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("quasi-heredity matches full survival on random types") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 20; ++t) {
        JordanType jt = random_jordan_type(rng, GF(11), 8);
        QuasiHeredity qh = is_quasi_hereditary(jt);
        CellChain chain = cell_chain_simples(build_cell_datum(jt));
        bool all = true;
        for (size_t g = 0; g < jt.groups().size(); ++g)
            all = all && chain.surviving[g].size() ==
                             static_cast<size_t>(jt.groups()[g].blocks.front().size);
        CHECK(qh.value == all);
    }
}

TEST_CASE("simple count is consistent with the basic radical") {
    // single group, multiplicity one: dim(algebra) - dim(radical) = s
    for (auto sizes : std::vector<std::vector<int>>{{3, 2}, {4, 2, 1}, {5}}) {
        std::vector<BlockClass> blocks;
        for (int s : sizes) blocks.push_back({s, 1});
        JordanType jt(Q(), {{Scalar::zero(Q()), blocks}});
        long dim = rank_formula(jt);
        long rad = static_cast<long>(radical_basis_basic(jt).size());
        CHECK(dim - rad == static_cast<long>(sizes.size()));
        CHECK(cell_chain_simples(build_cell_datum(jt)).count == static_cast<int>(sizes.size()));
    }
}
