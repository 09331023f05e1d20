#include "opcalc/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace opcalc;

namespace {

RingValue random_value(const Ring& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    if (ring.contains_rationals()) {
        std::uniform_int_distribution<int> den(1, 9);
        return ring.from_rational(num(rng), den(rng));
    }
    return ring.from_integer(num(rng));
}

}  // namespace

TEST_CASE("json round trips: polynomial, vector, series, tensor") {
    std::mt19937_64 rng(61);
    for (const Ring& ring : {Ring::rationals(), Ring::integers(), Ring::integers_mod(7)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::uniform_int_distribution<std::size_t> deg(0, 6);
            std::vector<RingValue> coeffs;
            for (std::size_t i = deg(rng); i-- > 0;) coeffs.push_back(random_value(ring, rng));
            Polynomial p(ring, coeffs);
            REQUIRE(poly_from_json(ring, poly_to_json(p)) == p);

            Vector v(ring);
            std::uniform_int_distribution<Index> idx(0, 12);
            for (int t = 0; t < 3; ++t) v.add_term(idx(rng), random_value(ring, rng));
            REQUIRE(vector_from_json(ring, vector_to_json(v)) == v);

            Tensor tensor(ring, 3);
            for (int t = 0; t < 3; ++t)
                tensor.add_term({idx(rng), idx(rng), idx(rng)}, random_value(ring, rng));
            REQUIRE(tensor_from_json(ring, tensor_to_json(tensor)) == tensor);
        }
    }

    Ring q = Ring::rationals();
    NormalSeries s = normalize(Operator::integration(q));
    NormalSeries back = series_from_json(q, series_to_json(s, 6));
    REQUIRE(eq_up_to(s, back, 6));
}

TEST_CASE("json schemas match the documented shapes") {
    Ring q = Ring::rationals();

    Polynomial p = Polynomial::constant(q.one()) -
                   Polynomial::monomial(q, 2, q.from_rational(1, 2));
    REQUIRE(poly_to_json(p).dump() == R"(["1","0","-1/2"])");
    REQUIRE(poly_to_json(Polynomial(q)).dump() == "[]");

    Vector v(q);
    v.add_term(0, q.from_integer(3));
    v.add_term(5, q.from_rational(1, 2));
    REQUIRE(vector_to_json(v).dump() == R"({"coeffs":{"0":"3","5":"1/2"}})");

    REQUIRE(normal_word_to_json(word_nf("xxy")).dump() == R"({"x":2,"y":1})");

    NormalSeries one = NormalSeries::one(q);
    REQUIRE(series_to_json(one, 1).dump() == R"({"coeffs":[["1"],[]],"order":1})");

    ShefferPair pair(PowerSeries::one(q, 2), PowerSeries::identity(q, 2));
    json pj = sheffer_pair_to_json(pair);
    REQUIRE(pj.at("mu").dump() == R"(["1","0","0"])");
    REQUIRE(pj.at("sigma").dump() == R"(["0","1","0"])");
    REQUIRE(pj.at("order") == 2);

    SeriesMatrix m = matrix_normalize(q, 2, [q](std::size_t slot, Index n) {
        std::vector<Vector> out(2, Vector(q));
        out[slot] = Vector::basis(q, n);
        return out;
    });
    json mj = series_matrix_to_json(m, 1);
    REQUIRE(mj.at("k") == 2);
    REQUIRE(mj.at("entries").size() == 4);  // row major
    REQUIRE(mj.at("entries")[0] == series_to_json(NormalSeries::one(q), 1));
    REQUIRE(mj.at("entries")[1] == series_to_json(NormalSeries::zero(q), 1));
}

TEST_CASE("json parse errors surface as ParseError") {
    Ring q = Ring::rationals();
    REQUIRE_THROWS_AS(poly_from_json(q, json::object()), ParseError);
    REQUIRE_THROWS_AS(series_from_json(q, json::array()), ParseError);
    REQUIRE_THROWS_AS(vector_from_json(q, json{{"wrong", 1}}), ParseError);
    REQUIRE_THROWS_AS(poly_from_json(q, json::parse(R"(["1","pear"])")), ParseError);
}
