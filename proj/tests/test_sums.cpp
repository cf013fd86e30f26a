#include <doctest.h>

#include "qrsid/brute.hpp"
#include "qrsid/catalog.hpp"
#include "qrsid/partitions.hpp"
#include "test_helpers.hpp"

using namespace qrsid;

namespace {

// sum q^(n^2)/(q;q)_n
SumSideSpec rogers_ramanujan_sum() {
    SumComponent c;
    c.quad = QuadForm::zero(1);
    c.quad.matrix[0][0] = rat(1);
    c.unit = QuadForm::zero(1);
    c.subscripts.push_back({rat(1), {{1}, 0}});
    return {1, {c}};
}

const IdentityRecord& record(const std::string& id) {
    const IdentityRecord* r = Catalog::builtin().find(id);
    REQUIRE(r != nullptr);
    return *r;
}

} // namespace

TEST_CASE("first Rogers-Ramanujan sum matches the partition expansion") {
    QSeries s = sum_side_eval(rogers_ramanujan_sum(), {}, rat(6));
    CHECK(s == parse_series("1 + q + q^2 + q^3 + 2*q^4 + 2*q^5 + 3*q^6"));
    CHECK(s == product_partition_expand({{1, 5}, {4, 5}}, 6));
}

TEST_CASE("Euler collapse at u = 0, v = q") {
    const IdentityRecord& r = record("I-11-sym");
    ParamAssignment a{{"u", Monomial::zero()}, {"v", Monomial::q(rat(1))}};
    QSeries s = sum_side_eval(r.sum_side, a, rat(12));
    CHECK(s == poch_inf(Monomial::q(rat(1)), rat(1), rat(12)));
}

TEST_CASE("region with only the origin evaluates to 1") {
    SumComponent c;
    c.quad = QuadForm::zero(2);
    c.unit = QuadForm::zero(2);
    // subscripts i - j >= 0 and j - i >= 0 pin the diagonal; q^(i) kills growth
    c.quad.linear[0] = rat(1);
    c.quad.linear[1] = rat(1);
    c.subscripts.push_back({rat(1), {{1, -1}, 0}});
    c.subscripts.push_back({rat(1), {{-1, 1}, 0}});
    c.subscripts.push_back({rat(1), {{1, 0}, 0}});
    SumSideSpec spec{2, {c}};
    QSeries s = sum_side_eval(spec, {}, rat(4));
    // Diagonal points (t,t) with exponent 2t survive.
    QSeries expect(1, rat(4));
    for (long t = 0; 2 * t <= 4; ++t) {
        QSeries term = poch_finite(Monomial::q(rat(1)), rat(1), t, rat(4) - 2 * t).invert();
        expect = expect + term.shifted(Scalar::one(), rat(2 * t)).restricted(rat(4));
    }
    CHECK(s == expect);

    SumComponent origin_only = c;
    origin_only.quad.linear[0] = rat(0);
    origin_only.quad.linear[1] = rat(0);
    origin_only.subscripts.push_back({rat(1), {{-1, 0}, 0}}); // i <= 0
    SumSideSpec origin_spec{2, {origin_only}};
    CHECK(sum_side_eval(origin_spec, {}, rat(4)) == QSeries::one(rat(4)));
}

TEST_CASE("non-terminating assignments are detected") {
    const IdentityRecord& r = record("I-11-sym");
    ParamAssignment bad{{"u", Monomial::q(rat(1, 2))}, {"v", Monomial::q(rat(1, 2))}};
    try {
        sum_side_eval(r.sum_side, bad, rat(6));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonTerminating);
    }
}

TEST_CASE("fold_params absorbs monomial assignments") {
    const IdentityRecord& r = record("I-11-sym");
    SUBCASE("u = -q gains linear exponent and unit") {
        ParamAssignment a{{"u", Monomial(-Scalar::one(), rat(1))},
                          {"v", Monomial(-Scalar::one(), rat(1))}};
        SumSideSpec folded = fold_params(r.sum_side, a);
        CHECK(folded.components[0].params.empty());
        // q-exponents of the assignment moved into the linear part
        CHECK(folded.components[0].quad.linear[0] == rat(1, 2));
        CHECK(folded.components[0].quad.linear[1] == rat(1, 2));
        // -1 = i^2 folded into the unit form on top of the existing i^(2i+2j)
        CHECK(folded.components[0].unit.linear[0] == rat(4));
        CHECK(folded.components[0].unit.linear[1] == rat(4));
        CHECK(sum_side_eval(folded, {}, rat(10)) == sum_side_eval(r.sum_side, a, rat(10)));
    }
    SUBCASE("u = 1 leaves the spec unchanged") {
        ParamAssignment a{{"u", Monomial::one()}, {"v", Monomial::q(rat(2))}};
        SumSideSpec folded = fold_params(r.sum_side, a);
        CHECK(folded.components[0].quad.linear[0] == r.sum_side.components[0].quad.linear[0]);
        CHECK(folded.components[0].unit.linear[0] == r.sum_side.components[0].unit.linear[0]);
    }
    SUBCASE("u = i q^(1/2) lands on grid 2 and gains i^i") {
        ParamAssignment a{{"u", Monomial(Scalar::i_unit(), rat(1, 2))},
                          {"v", Monomial::q(rat(1))}};
        SumSideSpec folded = fold_params(r.sum_side, a);
        CHECK(folded.components[0].grid == 2);
        CHECK(folded.components[0].unit.linear[0] ==
              r.sum_side.components[0].unit.linear[0] + 1);
        CHECK(sum_side_eval(folded, {}, rat(8)) == sum_side_eval(r.sum_side, a, rat(8)));
    }
}

TEST_CASE("symmetric identity is invariant under swapping u and v") {
    const IdentityRecord& r = record("I-11-sym");
    ParamAssignment a{{"u", Monomial(-Scalar::one(), rat(1))},
                      {"v", Monomial(-Scalar::one(), rat(1, 2))}};
    ParamAssignment swapped{{"u", a.at("v")}, {"v", a.at("u")}};
    CHECK(sum_side_eval(r.sum_side, a, rat(15)) == sum_side_eval(r.sum_side, swapped, rat(15)));
}

TEST_CASE("index (1,2,3) sum sides live on the integer grid") {
    for (const char* id : {"I-123-frac", "I-123-gauss"}) {
        const IdentityRecord& r = record(id);
        for (const auto& a : r.sampling) {
            QSeries s = sum_side_eval(r.sum_side, a, rat(12));
            auto rep = s.integrality_report();
            INFO(id << " at " << render_assignment(a));
            CHECK(rep.is_integer_grid);
        }
    }
}

TEST_CASE("layer evaluator agrees with the boxed oracle on small caps") {
    auto check = [](const char* id, const Rational& cap) {
        const IdentityRecord& r = record(id);
        std::vector<ParamAssignment> assigns =
            r.sampling.empty() ? std::vector<ParamAssignment>{{}} : r.sampling;
        for (const auto& a : assigns) {
            INFO(id << " at " << render_assignment(a));
            CHECK(sum_side_eval(r.sum_side, a, cap) == naive_sum_eval(r.sum_side, a, cap));
        }
    };
    check("I-rr-1", rat(12));
    check("I-11-sym", rat(8));
    check("I-122-b", rat(10));
    check("I-123-gauss", rat(8));
    check("I-11-twoterm-cor-4", rat(8));
}
