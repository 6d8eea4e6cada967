#pragma once

#include "doctest.h"

#include "cubicbasis/factor.hpp"
#include "cubicbasis/ratfunc.hpp"

// Checks that the expression throws cubic::Error with the given code.
#define CHECK_ERRC(expr, expected)                        \
  do {                                                    \
    bool thrown_ = false;                                 \
    try {                                                 \
      (void)(expr);                                       \
    } catch (const cubic::Error& e_) {                    \
      thrown_ = true;                                     \
      CHECK(e_.code() == (expected));                     \
    }                                                     \
    CHECK_MESSAGE(thrown_, "expected a throw: " #expr);   \
  } while (0)

namespace cubic::testutil {

inline Poly nonzero_poly(const Field& f, int max_degree, Rng& rng) {
  for (;;) {
    Poly p = random_poly(f, max_degree, rng);
    if (!p.is_zero()) return p;
  }
}

inline RatFn random_ratfn(const Field& f, int max_degree, Rng& rng) {
  return RatFn(random_poly(f, max_degree, rng),
               nonzero_poly(f, max_degree, rng));
}

inline RatFn nonzero_ratfn(const Field& f, int max_degree, Rng& rng) {
  for (;;) {
    RatFn r = random_ratfn(f, max_degree, rng);
    if (!r.is_zero()) return r;
  }
}

}  // namespace cubic::testutil
