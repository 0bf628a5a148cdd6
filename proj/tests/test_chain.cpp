#include <doctest.h>

#include <stdexcept>

#include "mvdual/chain.hpp"
#include "oracles.hpp"

using namespace mvdual;

TEST_CASE("chain implication") {
  CHECK(imp(ChainValue(5, 5), ChainValue(3, 5)) == ChainValue(3, 5)); // 1 -> x = x
  CHECK(imp(ChainValue(3, 5), ChainValue(1, 5)) == ChainValue(3, 5));
  CHECK(imp(ChainValue(0, 3), ChainValue(2, 3)) == ChainValue(3, 3)); // 0 -> x = 1

  for (int n = 1; n <= 8; ++n)
    for (int x = 0; x <= n; ++x)
      for (int y = 0; y <= n; ++y)
        CHECK(imp(ChainValue(x, n), ChainValue(y, n)).num == oracles::chain_imp(x, y, n));

  CHECK_THROWS_AS(imp(ChainValue(1, 2), ChainValue(1, 3)), std::invalid_argument);
}

TEST_CASE("chain negation is an involution") {
  CHECK(neg(ChainValue(0, 4)) == ChainValue(4, 4));
  CHECK(neg(ChainValue(2, 4)) == ChainValue(2, 4)); // midpoint fixed
  CHECK(neg(ChainValue(1, 3)) == ChainValue(2, 3));
  for (int n = 1; n <= 8; ++n)
    for (int x = 0; x <= n; ++x)
      CHECK(neg(neg(ChainValue(x, n))) == ChainValue(x, n));
}

TEST_CASE("the four Wajsberg identities hold on every chain up to n=12") {
  for (int n = 1; n <= 12; ++n) {
    const ChainValue one(n, n);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        const ChainValue x(a, n), y(b, n);
        CHECK(imp(one, x) == x);
        CHECK(imp(imp(x, y), y) == imp(imp(y, x), x));
        CHECK(imp(imp(neg(y), neg(x)), imp(x, y)) == one);
        for (int c = 0; c <= n; ++c) {
          const ChainValue z(c, n);
          CHECK(imp(imp(x, y), imp(imp(y, z), imp(x, z))) == one);
        }
      }
  }
}

TEST_CASE("sigma closed form") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(sigma(n, ChainValue(k, n)).is_one());
    for (int j = 1; j <= n; ++j) CHECK(sigma(j, ChainValue(0, n)).is_zero());
  }

  // Post-definition oracle at n=2: 1/2 corresponds to the monotone tuple
  // (0,1) in 2^[2], and sigma_i(f) is the constant tuple at f(i).
  const int f[2] = {0, 1};
  CHECK(sigma(1, ChainValue(1, 2)).num == f[0] * 2);
  CHECK(sigma(2, ChainValue(1, 2)).num == f[1] * 2);

  CHECK_THROWS_AS(sigma(0, ChainValue(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(sigma(3, ChainValue(1, 2)), std::invalid_argument);
}

TEST_CASE("sigma is monotone in the argument and Boolean-valued") {
  for (int n = 1; n <= 9; ++n)
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        const ChainValue v = sigma(j, ChainValue(k, n));
        CHECK((v.is_zero() || v.is_one()));
        if (k < n) CHECK(leq(v, sigma(j, ChainValue(k + 1, n))));
      }
}

TEST_CASE("subchain embedding") {
  CHECK(embed(ChainValue(1, 2), 6) == ChainValue(3, 6));
  CHECK(embed(ChainValue(2, 3), 6) == ChainValue(4, 6));
  for (int t = 1; t <= 6; ++t) {
    CHECK(embed(ChainValue(0, t), 12) == ChainValue(0, 12));
    CHECK(embed(ChainValue(t, t), 12) == ChainValue(12, 12));
  }
  CHECK_THROWS_AS(embed(ChainValue(1, 2), 3), std::invalid_argument);

  // injective homomorphism for imp and neg, every divisor pair up to 12
  for (int n = 1; n <= 12; ++n)
    for (int t = 1; t <= n; ++t) {
      if (n % t != 0) continue;
      for (int a = 0; a <= t; ++a) {
        CHECK(neg(embed(ChainValue(a, t), n)) == embed(neg(ChainValue(a, t)), n));
        for (int b = 0; b <= t; ++b) {
          if (a != b) CHECK(!(embed(ChainValue(a, t), n) == embed(ChainValue(b, t), n)));
          CHECK(imp(embed(ChainValue(a, t), n), embed(ChainValue(b, t), n)) ==
                embed(imp(ChainValue(a, t), ChainValue(b, t)), n));
        }
      }
    }
}

TEST_CASE("chain value text form") {
  CHECK(to_string(ChainValue(2, 5)) == "2/5");
  CHECK(parse_chain_value("2/5") == ChainValue(2, 5));
  CHECK_THROWS_AS(parse_chain_value("2:5"), std::invalid_argument);
  CHECK_THROWS_AS(ChainValue(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(ChainValue(-1, 3), std::invalid_argument);
}
