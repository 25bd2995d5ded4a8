#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gjet/core/gq.hpp"
#include "gjet/core/grade.hpp"
#include "gjet/core/rng.hpp"

#include <vector>

using namespace gjet;

TEST_CASE("koszul sign on graded blocks") {
  CHECK(koszul_sign({odd_grade}, {odd_grade}) == -1);
  CHECK(koszul_sign({even_grade}, {odd_grade}) == 1);
  CHECK(koszul_sign({odd_grade, odd_grade}, {odd_grade}) == 1);
  CHECK(koszul_sign({}, {odd_grade}) == 1);
}

TEST_CASE("koszul sign is multiplicative under concatenation") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    std::vector<Grade> a, b, c;
    for (int k = rng.uniform(0, 4); k-- > 0;) a.push_back(Grade(rng.uniform(0, 1)));
    for (int k = rng.uniform(0, 4); k-- > 0;) b.push_back(Grade(rng.uniform(0, 1)));
    for (int k = rng.uniform(0, 4); k-- > 0;) c.push_back(Grade(rng.uniform(0, 1)));
    std::vector<Grade> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(koszul_sign(ab, c) == koszul_sign(a, c) * koszul_sign(b, c));
    CHECK(koszul_sign(c, ab) == koszul_sign(c, a) * koszul_sign(c, b));
  }
}

TEST_CASE("gaussian rational examples") {
  GQ i = GQ::i();
  CHECK(i * i == GQ(-1));
  CHECK(GQ(rat(1, 2), Rat(1)) + GQ(rat(1, 2), Rat(-1)) == GQ(1));
  CHECK(GQ(Rat(2), Rat(3)).conj() == GQ(Rat(2), Rat(-3)));
  CHECK(to_string(GQ(rat(-1, 2), Rat(1))) == "-1/2+i");
}

TEST_CASE("gaussian rational ring laws") {
  Rng rng(11);
  for (int it = 0; it < 300; ++it) {
    GQ a = rng.small_gq(), b = rng.small_gq(), c = rng.small_gq();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!a.is_zero()) CHECK(a * a.inv() == GQ(1));
  }
}

TEST_CASE("rational parsing round trip") {
  CHECK(parse_rat("3/4") == rat(3, 4));
  CHECK(parse_rat("-7") == rat(-7));
  CHECK(rat_str(rat(-6, 4)) == "-3/2");
  CHECK_THROWS(parse_rat("1/0"));
}
