#include <doctest.h>

#include <sstream>

#include "euclid/trilogic.hpp"

using euclid::Truth;

namespace {

constexpr Truth F = Truth::False;
constexpr Truth T = Truth::True;
constexpr Truth U = Truth::Undetermined;
constexpr Truth kAll[] = {F, T, U};

// Strong Kleene as min/max over the order F < U < T.
int rank(Truth t) { return t == F ? 0 : (t == U ? 1 : 2); }
Truth from_rank(int r) { return r == 0 ? F : (r == 1 ? U : T); }

} // namespace

TEST_CASE("conjunction table")
{
    CHECK(euclid::and3(T, T) == T);
    CHECK(euclid::and3(T, F) == F);
    CHECK(euclid::and3(F, U) == F);
    CHECK(euclid::and3(U, F) == F);
    CHECK(euclid::and3(T, U) == U);
    CHECK(euclid::and3(U, U) == U);
    for (Truth a : kAll)
        for (Truth b : kAll)
            CHECK(euclid::and3(a, b) == from_rank(std::min(rank(a), rank(b))));
}

TEST_CASE("negation and disjunction")
{
    CHECK(euclid::not3(T) == F);
    CHECK(euclid::not3(F) == T);
    CHECK(euclid::not3(U) == U);
    for (Truth a : kAll) {
        CHECK(euclid::not3(euclid::not3(a)) == a);
        for (Truth b : kAll) {
            CHECK(euclid::or3(a, b) == from_rank(std::max(rank(a), rank(b))));
            CHECK(euclid::and3(a, b) == euclid::and3(b, a));
            CHECK(euclid::not3(euclid::and3(a, b)) ==
                  euclid::or3(euclid::not3(a), euclid::not3(b)));
        }
    }
}

TEST_CASE("definite values agree with boolean logic")
{
    for (bool a : {false, true})
        for (bool b : {false, true}) {
            CHECK(euclid::and3(euclid::truth_of(a), euclid::truth_of(b)) == euclid::truth_of(a && b));
            CHECK(euclid::or3(euclid::truth_of(a), euclid::truth_of(b)) == euclid::truth_of(a || b));
        }
    CHECK(euclid::is_definite(T));
    CHECK(euclid::is_definite(F));
    CHECK_FALSE(euclid::is_definite(U));
}

TEST_CASE("names")
{
    std::ostringstream os;
    os << F << ' ' << T << ' ' << U;
    CHECK(os.str() == "false true undetermined");
}
