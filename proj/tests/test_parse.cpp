#include "cubicbasis/parse.hpp"

#include "cubicbasis/pipeline.hpp"
#include "helpers.hpp"

using namespace cubic;

TEST_CASE("field specifications") {
  FieldSpec s = parse_field_spec("5");
  CHECK(s.p == 5);
  CHECK(s.n == 1);
  s = parse_field_spec("3^4");
  CHECK(s.p == 3);
  CHECK(s.n == 4);
  CHECK_ERRC(parse_field_spec(""), errc::parse_error);
  CHECK_ERRC(parse_field_spec("abc"), errc::parse_error);
  CHECK_ERRC(parse_field_spec("5^"), errc::parse_error);
  CHECK_ERRC(parse_field_spec("5^0"), errc::parse_error);
  // composite p is caught at field construction
  CHECK_ERRC(make_field(parse_field_spec("9")), errc::non_prime_p);

  CHECK(parse_modulus_list("2,2,1") == std::vector<std::uint64_t>{2, 2, 1});
  CHECK_ERRC(parse_modulus_list("2,,1"), errc::parse_error);
  FieldSpec m = parse_field_spec("3^2");
  m.modulus = {2, 2, 1};
  Field f9 = make_field(m);
  CHECK(f9.order() == 9);
  CHECK(f9.modulus() == std::vector<std::uint64_t>{2, 2, 1});
}

TEST_CASE("rational function expressions") {
  Field f = Field::make(5);
  Poly x = Poly::x(f);
  CHECK(parse_ratfn("1/x", f) == RatFn(Poly::one(f), x));
  CHECK(parse_ratfn("x^2+2*x+1", f) == RatFn(Poly::from_ints(f, {1, 1}).pow(2)));
  CHECK(parse_ratfn("(x+1)^-2", f) ==
        RatFn(Poly::one(f), Poly::from_ints(f, {1, 1}).pow(2)));
  CHECK(parse_ratfn("2^3", f) == RatFn(Poly::from_ints(f, {3})));  // 8 mod 5
  // precedence: ^ before * and /, * before +
  CHECK(parse_ratfn("1+2*x^2", f) == RatFn(Poly::from_ints(f, {1, 0, 2})));
  CHECK(parse_ratfn("(1+2*x)^2", f) == RatFn(Poly::from_ints(f, {1, 2}).pow(2)));
  CHECK(parse_ratfn("-x", f) == -RatFn(x));
  CHECK(parse_ratfn(" ( x + 1 ) / x ", f) ==
        RatFn(Poly::from_ints(f, {1, 1}), x));

  CHECK_ERRC(parse_ratfn("", f), errc::parse_error);
  CHECK_ERRC(parse_ratfn("x/", f), errc::parse_error);
  CHECK_ERRC(parse_ratfn("x)", f), errc::parse_error);
  CHECK_ERRC(parse_ratfn("y", f), errc::parse_error);
  CHECK_ERRC(parse_ratfn("t", f), errc::parse_error);  // no generator over GF(5)
  CHECK_ERRC(parse_ratfn("1/(x-x)", f), errc::division_by_zero);

  Field f9 = Field::make(3, 2);
  RatFn t = parse_ratfn("t", f9);
  CHECK(t == RatFn(Poly::constant(f9, f9.gen())));
  CHECK(parse_ratfn("t^2+t*x", f9).num().degree() == 1);
}

TEST_CASE("general cubic coefficient lists") {
  Field f = Field::make(5);
  auto c = parse_cubic_coeffs("0,2*x^2,x", f);
  CHECK(c[0].is_zero());
  CHECK(c[1] == RatFn(Poly::from_ints(f, {0, 0, 2})));
  CHECK(c[2] == RatFn(Poly::x(f)));
  CHECK_ERRC(parse_cubic_coeffs("1,2", f), errc::parse_error);
  CHECK_ERRC(parse_cubic_coeffs("1,2,3,4", f), errc::parse_error);
}

TEST_CASE("reduction of a general cubic to the standard coefficient") {
  Field f = Field::make(5);
  Poly x = Poly::x(f);
  RatFn zero = RatFn::zero(f);
  // already depressed with c = -3: a = -d
  RatFn a = reduce_general_cubic(zero, RatFn(Poly::from_ints(f, {-3})), RatFn(x));
  CHECK(a == -RatFn(x));
  // c = -3x^2: scale u = x, a = -d/x^3
  RatFn a2 = reduce_general_cubic(zero, RatFn(Poly::from_ints(f, {0, 0, -3})),
                                  RatFn(x.pow(5)));
  CHECK(a2 == -RatFn(x * x));
  // the reduced job defines the same extension as the original cubic
  JobSpec job;
  job.field = f;
  job.mode = JobSpec::Mode::general_cubic;
  job.cubic = {zero, RatFn(Poly::from_ints(f, {-3})), RatFn(x)};
  Report rep = run_pipeline(job);
  CHECK(rep.verdicts.ok());
  CHECK(rep.normalized_coeff == -RatFn(x));
  JobSpec direct;
  direct.field = f;
  direct.coeff = -RatFn(x);
  Report rep2 = run_pipeline(direct);
  CHECK(rep.params.report.disc == rep2.params.report.disc);
  CHECK(rep.params.report.index == rep2.params.report.index);

  // pure cubics are a different animal
  CHECK_ERRC(reduce_general_cubic(zero, zero, RatFn(x)), errc::pure_cubic);
  // -c/3 must be a square
  CHECK_ERRC(reduce_general_cubic(zero, RatFn(Poly::from_ints(f, {0, -3})), RatFn(x)),
             errc::not_reducible_here);
  // zero discriminant: not a field
  CHECK_ERRC(reduce_general_cubic(zero, RatFn(Poly::from_ints(f, {-3})),
                                  RatFn(Poly::from_ints(f, {2}))),
             errc::reducible_cubic);
  // a depressed cubic with a rational root
  CHECK_ERRC(reduce_general_cubic(zero, RatFn(Poly::from_ints(f, {-1})), zero),
             errc::reducible_cubic);

  // characteristic 2 cannot depress a nonzero quadratic term
  Field f2 = Field::make(2);
  CHECK_ERRC(reduce_general_cubic(RatFn(Poly::x(f2)), RatFn::one(f2),
                                  RatFn::one(f2)),
             errc::not_reducible_here);
  // with b = 0 it reduces fine: c = 1 = 1^2 * (-3)
  RatFn a3 = reduce_general_cubic(RatFn::zero(f2), RatFn::one(f2),
                                  RatFn(Poly::x(f2)));
  CHECK(a3 == RatFn(Poly::x(f2)));
}

TEST_CASE("pipeline mode and characteristic cross-checks") {
  Field f3 = Field::make(3);
  JobSpec j1;
  j1.field = f3;
  j1.mode = JobSpec::Mode::coeff_a;
  j1.coeff = RatFn(Poly::x(f3));
  CHECK_ERRC(run_pipeline(j1), errc::usage_error);

  Field f5 = Field::make(5);
  JobSpec j2;
  j2.field = f5;
  j2.mode = JobSpec::Mode::coeff_b;
  j2.coeff = RatFn(Poly::x(f5));
  CHECK_ERRC(run_pipeline(j2), errc::usage_error);
}

TEST_CASE("pipeline end-to-end on the worked instances") {
  struct Case {
    std::uint64_t p;
    JobSpec::Mode mode;
    const char* coeff;
    const char* disc;
    const char* index;
  };
  const Case cases[] = {
      {5, JobSpec::Mode::coeff_a, "1/x", "x^2+x^4", "x"},
      {3, JobSpec::Mode::coeff_b, "1/x", "x^3", "1"},
      {3, JobSpec::Mode::coeff_b, "x", "x", "x"},
      {2, JobSpec::Mode::coeff_a, "x", "x^2", "1"},
  };
  for (const Case& c : cases) {
    JobSpec job;
    job.field = Field::make(c.p);
    job.mode = c.mode;
    job.coeff = parse_ratfn(c.coeff, job.field);
    job.level = VerifyLevel::full;
    Report rep = run_pipeline(job);
    CHECK(rep.verdicts.ok());
    CHECK(rep.params.report.disc.generator(job.field) ==
          parse_ratfn(c.disc, job.field).num());
    CHECK(rep.params.report.index.generator(job.field) ==
          parse_ratfn(c.index, job.field).num());
  }
}

TEST_CASE("pipeline paranoid level checks the reduction chain") {
  Field f3 = Field::make(3);
  JobSpec job;
  job.field = f3;
  job.mode = JobSpec::Mode::coeff_b;
  job.coeff = parse_ratfn("1/x^3", f3);
  job.level = VerifyLevel::paranoid;
  Report rep = run_pipeline(job);
  CHECK(rep.verdicts.ok());
  REQUIRE(rep.reduction3.has_value());
  CHECK(!rep.reduction3->trace.empty());
  CHECK(!rep.verdicts.model_chain.empty());
  for (bool good : rep.verdicts.model_chain) CHECK(good);
}
