#include <doctest.h>

#include "smooth/errors.hpp"
#include "smooth/exact.hpp"

using namespace smooth;

namespace {

std::vector<long> generated(const Basis& b, long limit) {
  SmoothStream s(b, XValue::integer(limit));
  std::vector<long> out;
  while (auto v = s.next()) out.push_back(v->get_si());
  return out;
}

}  // namespace

TEST_CASE("floor_log") {
  CHECK(floor_log(2, mpz_class(1000)) == 9);
  CHECK(floor_log(3, mpz_class(1)) == 0);
  CHECK(floor_log(3, XValue::power_of_ten(100)) == 209);
  CHECK(floor_log(2, mpz_class(1024)) == 10);
  CHECK(floor_log(2, mpz_class(1023)) == 9);
  CHECK(floor_log(10, XValue::power_of_ten(1000)) == 1000);
  CHECK(floor_log(10, XValue::integer(mpz_class("999999999999999999999"))) == 20);
  CHECK(floor_log(97, mpz_class(97 * 97)) == 2);
  CHECK(floor_log(3, XValue::integer(100), 9) == 2);
  CHECK(floor_log(2, XValue::parse("11/10")) == 0);
  CHECK_THROWS_AS(floor_log(2, XValue::integer(10), 11), DivisorExceedsX);
}

TEST_CASE("floor_log agrees with the search reference") {
  mpz_class y = 1;
  for (int i = 0; i < 400; ++i) {
    y = y * 7 + i;
    for (long base : {2L, 3L, 10L, 63L, 64L, 1000L}) {
      CHECK(floor_log(base, y) == floor_log_by_search(base, y));
    }
  }
}

TEST_CASE("count_smooth") {
  CHECK(count_smooth(validate_basis({2, 3}), XValue::integer(100)) == 20);
  CHECK(count_smooth(validate_basis({2, 3, 5}), XValue::integer(1000)) == 86);
  CHECK(count_smooth(validate_basis({2, 3}), XValue::integer(1)) == 1);
  CHECK(count_smooth(validate_basis({2, 3}), XValue::parse("11/10")) == 1);
  CHECK(count_smooth(validate_basis({2, 3}), XValue::parse("1e6")) == 142);
  CHECK(count_smooth(validate_basis({2, 3, 5, 7}), XValue::parse("1e3")) == 141);
  CHECK(count_smooth(validate_basis({2}), XValue::integer(8)) == 4);
  CHECK(count_smooth(validate_basis({2, 3, 4}, Validation::Relaxed), XValue::integer(16)) == 14);
}

TEST_CASE("generate_smooth") {
  CHECK(generated(validate_basis({2, 3}), 27) ==
        std::vector<long>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 27});
  CHECK(generated(validate_basis({2, 3, 5}), 10) == std::vector<long>{1, 2, 3, 4, 5, 6, 8, 9, 10});
  CHECK(generated(validate_basis({2}), 16) == std::vector<long>{1, 2, 4, 8, 16});
  // 4 = 2^2 arises twice under a dependent basis but is yielded once.
  CHECK(generated(validate_basis({2, 3, 4}, Validation::Relaxed), 9) ==
        std::vector<long>{1, 2, 3, 4, 6, 8, 9});
  SmoothStream s = generate_smooth(validate_basis({2, 3}), XValue::integer(1));
  CHECK(s.next() == mpz_class(1));
  CHECK_FALSE(s.next().has_value());
}

TEST_CASE("count_squares_exact") {
  CHECK(count_squares_exact(2, 3, XValue::integer(100)) == 7);
  CHECK(count_squares_exact(2, 3, XValue::integer(1)) == 1);
  CHECK(count_squares_exact(2, 3, XValue::integer(10000)) == 11);
  CHECK(count_squares_exact(2, 3, XValue::power_of_ten(100)) == 226);
}
