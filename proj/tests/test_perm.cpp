#include "branchdim/error.hpp"
#include "branchdim/perm.hpp"
#include "doctest.h"

using namespace branchdim;

TEST_CASE("construction and validation") {
  CHECK(Perm(5).is_identity());
  CHECK(Perm(0).is_identity());
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 3}), DomainError);
  const Perm c = Perm::from_cycles(4, {{0, 1, 2, 3}});
  CHECK(c[0] == 1);
  CHECK(c[3] == 0);
  CHECK(c.to_string() == "(0 1 2 3)");
  CHECK(Perm(3).to_string() == "()");
  CHECK_THROWS_AS(Perm::from_cycles(4, {{0, 1}, {1, 2}}), DomainError);
}

TEST_CASE("right action composition") {
  const Perm p = Perm::from_cycles(3, {{0, 1}});
  const Perm q = Perm::from_cycles(3, {{1, 2}});
  // 0 -p-> 1 -q-> 2
  CHECK((p * q)[0] == 2);
  CHECK((q * p)[0] == 1);
  CHECK((p * p.inverse()).is_identity());
  Perm r = p;
  r *= q;
  CHECK(r == p * q);
}

TEST_CASE("order, pow, commutator and conjugate") {
  const Perm c = Perm::from_cycles(6, {{0, 1, 2, 3}, {4, 5}});
  CHECK(c.order() == 4);
  CHECK(c.pow(4).is_identity());
  CHECK(c.pow(-1) == c.inverse());
  CHECK(c.pow(0).is_identity());
  CHECK(c.first_moved() == 0);
  CHECK(Perm(4).first_moved() == 4);
  const Perm x = Perm::from_cycles(3, {{0, 1}});
  const Perm y = Perm::from_cycles(3, {{1, 2}});
  CHECK(commutator(x, y) == x.inverse() * y.inverse() * x * y);
  CHECK(conjugate(x, y) == y.inverse() * x * y);
  CHECK(conjugate(x, y) == Perm::from_cycles(3, {{0, 2}}));
}
