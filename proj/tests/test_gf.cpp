#include "cubicbasis/gf.hpp"

#include <vector>

#include "doctest.h"

using cubic::Error;
using cubic::errc;
using cubic::FElem;
using cubic::Field;

namespace {

std::vector<Field> small_fields() {
  return {Field::make(2),    Field::make(2, 2), Field::make(2, 3),
          Field::make(2, 4), Field::make(3),    Field::make(3, 2),
          Field::make(3, 3), Field::make(3, 4), Field::make(5),
          Field::make(5, 2), Field::make(7),    Field::make(7, 2)};
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  Field f = Field::make(5);
  CHECK(f.order() == 5);
  CHECK(f.add(f.from_int(2), f.from_int(4)) == f.from_int(1));
  CHECK(f.mul(f.from_int(2), f.from_int(4)) == f.from_int(3));
  CHECK(f.sub(f.from_int(1), f.from_int(3)) == f.from_int(3));
  CHECK(f.neg(f.from_int(2)) == f.from_int(3));
  CHECK(f.inv(f.from_int(3)) == f.from_int(2));
  CHECK(f.div(f.from_int(1), f.from_int(2)) == f.from_int(3));
  CHECK(f.pow(f.from_int(2), 4) == f.one());
  CHECK(f.from_int(-1) == f.from_int(4));
}

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS_AS(Field::make(4), Error);
  CHECK_THROWS_AS(Field::make(1), Error);
  CHECK_THROWS_AS(Field::make(0), Error);
  // t^2 + 1 = (t + 1)^2 over GF(2)
  CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), Error);
  CHECK_NOTHROW(Field::make(2, 2, {1, 1, 1}));
  try {
    Field::make(2, 2, {1, 0, 1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::reducible_modulus);
  }
}

TEST_CASE("largest machine-word primes are accepted") {
  Field f = Field::make(2147483647);  // 2^31 - 1
  CHECK(f.mul(f.from_int(2147483646), f.from_int(2147483646)) == f.one());
  CHECK_THROWS_AS(Field::make(2147483648ULL), Error);
}

TEST_CASE("modulus selection is deterministic") {
  Field a = Field::make(3, 2);
  Field b = Field::make(3, 2);
  CHECK(a.modulus() == b.modulus());
  CHECK(a.modulus().size() == 3);
  CHECK(a.modulus().back() == 1);
  CHECK(a == b);
}

TEST_CASE("every nonzero element is invertible") {
  for (const Field& f : small_fields()) {
    CAPTURE(f.p());
    CAPTURE(f.n());
    for (std::uint64_t i = 1; i < f.order(); ++i) {
      FElem a = f.elem_at(i);
      CHECK(f.mul(a, f.inv(a)) == f.one());
    }
  }
}

TEST_CASE("enumeration is a bijection") {
  for (const Field& f : small_fields())
    for (std::uint64_t i = 0; i < f.order(); ++i)
      CHECK(f.index_of(f.elem_at(i)) == i);
}

TEST_CASE("frobenius is a field automorphism with exact inverse") {
  for (const Field& f : small_fields()) {
    CAPTURE(f.p());
    CAPTURE(f.n());
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      FElem a = f.elem_at(i);
      CHECK(f.frob(a) == f.pow(a, f.p()));
      CHECK(f.frob_root(f.frob(a)) == a);
      CHECK(f.frob(f.frob_root(a)) == a);
      for (std::uint64_t j = 0; j < f.order(); ++j) {
        FElem b = f.elem_at(j);
        CHECK(f.frob(f.mul(a, b)) == f.mul(f.frob(a), f.frob(b)));
        CHECK(f.frob(f.add(a, b)) == f.add(f.frob(a), f.frob(b)));
      }
    }
  }
}

TEST_CASE("squares and square roots") {
  Field f5 = Field::make(5);
  CHECK(f5.is_square(f5.from_int(0)));
  CHECK(f5.is_square(f5.from_int(1)));
  CHECK(f5.is_square(f5.from_int(4)));
  CHECK(!f5.is_square(f5.from_int(2)));
  CHECK(!f5.is_square(f5.from_int(3)));

  for (const Field& f : small_fields()) {
    std::uint64_t square_count = 0;
    for (std::uint64_t i = 0; i < f.order(); ++i) {
      FElem a = f.elem_at(i);
      if (f.is_square(a)) {
        ++square_count;
        FElem r = f.sqrt(a);
        CHECK(f.mul(r, r) == a);
      }
    }
    // char 2: squaring is bijective; odd: (q-1)/2 nonzero squares plus 0
    std::uint64_t expect = f.p() == 2 ? f.order() : (f.order() - 1) / 2 + 1;
    CHECK(square_count == expect);
  }
}

TEST_CASE("extension generator satisfies the modulus") {
  Field f = Field::make(3, 2, {2, 2, 1});  // t^2 + 2t + 2
  FElem t = f.gen();
  FElem lhs = f.add(f.mul(t, t), f.add(f.mul(f.from_int(2), t), f.from_int(2)));
  CHECK(f.is_zero(lhs));
  CHECK(f.order() == 9);
}
