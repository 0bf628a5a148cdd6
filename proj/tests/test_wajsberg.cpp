#include <doctest.h>

#include <set>
#include <stdexcept>

#include "mvdual/wajsberg.hpp"
#include "oracles.hpp"

using namespace mvdual;

namespace {

// desk-scale family: chains and products of chains, |A| <= 8
std::vector<WajsbergAlgebra> small_algebras() {
  return {
      lukasiewicz_chain(1),                                          // L_2
      lukasiewicz_chain(2),                                          // L_3
      lukasiewicz_chain(3),                                          // L_4
      lukasiewicz_chain(7),                                          // L_8
      direct_product(lukasiewicz_chain(1), lukasiewicz_chain(1)),    // L_2 x L_2
      direct_product(lukasiewicz_chain(1), lukasiewicz_chain(2)),    // L_2 x L_3
      direct_product(lukasiewicz_chain(1), lukasiewicz_chain(3)),    // L_2 x L_4
      direct_product(lukasiewicz_chain(1),
                     direct_product(lukasiewicz_chain(1), lukasiewicz_chain(1))), // L_2^3
  };
}

std::vector<int> mutated(const WajsbergAlgebra& a, int x, int y, int value) {
  std::vector<int> imp(static_cast<std::size_t>(a.size()) * a.size());
  for (int u = 0; u < a.size(); ++u)
    for (int v = 0; v < a.size(); ++v) imp[static_cast<std::size_t>(u) * a.size() + v] = a.imp(u, v);
  imp[static_cast<std::size_t>(x) * a.size() + y] = value;
  return imp;
}

std::vector<int> neg_table(const WajsbergAlgebra& a) {
  std::vector<int> neg(static_cast<std::size_t>(a.size()));
  for (int x = 0; x < a.size(); ++x) neg[static_cast<std::size_t>(x)] = a.neg(x);
  return neg;
}

} // namespace

TEST_CASE("check_axioms accepts the chains and products") {
  for (int n = 1; n <= 12; ++n) CHECK(check_axioms(lukasiewicz_chain(n)).empty());
  for (const auto& a : small_algebras()) CHECK(check_axioms(a).empty());
}

TEST_CASE("check_axioms reports identity 1 with a witness") {
  const WajsbergAlgebra l4 = lukasiewicz_chain(3);
  // force imp(top, 1) = 2
  WajsbergAlgebra broken(4, mutated(l4, 3, 1, 2), neg_table(l4), 3);
  const auto violations = check_axioms(broken);
  REQUIRE(!violations.empty());
  bool found = false;
  for (const auto& v : violations)
    if (v.identity == 1 && v.witness[0] == 1) found = true;
  CHECK(found);
  CHECK(violations.front().describe().find("identity") == 0);
}

TEST_CASE("every single-entry perturbation of L_4 violates an identity") {
  const WajsbergAlgebra l4 = lukasiewicz_chain(3);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int wrong = 0; wrong < 4; ++wrong) {
        if (wrong == l4.imp(x, y)) continue;
        WajsbergAlgebra mutant(4, mutated(l4, x, y, wrong), neg_table(l4), 3);
        CHECK(!check_axioms(mutant).empty());
      }
}

TEST_CASE("check_axioms rejects malformed tables") {
  CHECK_THROWS_AS(WajsbergAlgebra(2, {0, 1, 1}, {1, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(WajsbergAlgebra(2, {0, 1, 1, 5}, {1, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(WajsbergAlgebra(2, {0, 1, 1, 1}, {1, 0}, 2), std::invalid_argument);
}

TEST_CASE("sampled axiom checking still finds violations") {
  const WajsbergAlgebra l4 = lukasiewicz_chain(3);
  // break associativity-style identity 2 somewhere in the interior
  WajsbergAlgebra mutant(4, mutated(l4, 1, 2, 0), neg_table(l4), 3);
  AxiomCheckOptions options;
  options.exhaustive_triple_limit = 0; // force sampling
  options.sample_count = 20'000;
  options.seed = 1;
  const auto violations = check_axioms(mutant, options);
  CHECK(!violations.empty());
}

TEST_CASE("derived operations match the truncated arithmetic") {
  const WajsbergAlgebra l4 = lukasiewicz_chain(3);
  CHECK(l4.odot(2, 2) == 1);  // 2/3 (.) 2/3 = 1/3
  CHECK(l4.power(1, 2) == 0); // (1/3)^2 = 0

  for (int n = 1; n <= 9; ++n) {
    const WajsbergAlgebra chain = lukasiewicz_chain(n);
    for (int x = 0; x <= n; ++x) {
      CHECK(chain.join(x, x) == x);
      CHECK(chain.odot(x, chain.top()) == x);
      for (int y = 0; y <= n; ++y) {
        CHECK(chain.odot(x, y) == oracles::chain_odot(x, y, n));
        CHECK(chain.oplus(x, y) == oracles::chain_oplus(x, y, n));
        CHECK(chain.join(x, y) == std::max(x, y));
        CHECK(chain.meet(x, y) == std::min(x, y));
        CHECK(chain.leq(x, y) == (x <= y));
      }
    }
  }
}

TEST_CASE("boolean skeleton") {
  for (int n = 1; n <= 8; ++n) {
    const BooleanSkeleton& s = boolean_skeleton(lukasiewicz_chain(n));
    CHECK(s.elements == std::vector<int>{0, n}); // only the endpoints are idempotent
    CHECK(s.algebra.atom_count() == 1);
  }

  const WajsbergAlgebra prod = direct_product(lukasiewicz_chain(1), lukasiewicz_chain(2));
  const BooleanSkeleton& s = boolean_skeleton(prod);
  CHECK(s.elements.size() == 4);
  CHECK(s.algebra.atom_count() == 2);
  CHECK(s.contains(prod.top()));
  CHECK(s.contains(prod.bottom()));
  CHECK(s.to_bool(prod.top()) == s.algebra.top());
  CHECK(s.to_bool(prod.bottom()) == s.algebra.bottom());
  for (int e : s.elements) CHECK(s.from_bool(s.to_bool(e)) == e);
}

TEST_CASE("implicative filters match the brute-force enumeration") {
  CHECK(implicative_filters(lukasiewicz_chain(3)).size() == 2);
  CHECK(implicative_filters(direct_product(lukasiewicz_chain(1), lukasiewicz_chain(1))).size() == 4);

  for (const auto& a : small_algebras()) {
    std::set<std::set<int>> computed;
    for (const ImplicativeFilter& f : implicative_filters(a))
      computed.insert(oracles::upset(a, f.generator));
    const auto brute = oracles::brute_force_implicative_filters(a);
    CHECK(computed == std::set<std::set<int>>(brute.begin(), brute.end()));
    CHECK(computed.count(oracles::upset(a, a.top())));    // {1}
    CHECK(computed.count(oracles::upset(a, a.bottom()))); // all of A
  }
}

TEST_CASE("prime filters are the lattice-prime filters") {
  for (int n = 1; n <= 7; ++n) {
    const auto primes = prime_filters(lukasiewicz_chain(n));
    REQUIRE(primes.size() == 1);
    CHECK(primes[0].generator == lukasiewicz_chain(n).top());
  }
  CHECK(prime_filters(direct_product(lukasiewicz_chain(1), lukasiewicz_chain(2))).size() == 2);

  for (const auto& a : small_algebras()) {
    std::set<std::set<int>> computed;
    for (const ImplicativeFilter& p : prime_filters(a)) {
      const auto up = oracles::upset(a, p.generator);
      CHECK(up.size() != static_cast<std::size_t>(a.size())); // improper never returned
      computed.insert(up);
    }
    std::set<std::set<int>> expected;
    for (const auto& f : oracles::brute_force_implicative_filters(a))
      if (oracles::is_lattice_prime(a, f)) expected.insert(f);
    CHECK(computed == expected);
  }
}

TEST_CASE("quotients") {
  const WajsbergAlgebra prod = direct_product(lukasiewicz_chain(1), lukasiewicz_chain(2));

  // by {top}: isomorphic to the algebra itself
  const QuotientAlgebra trivial = quotient(prod, ImplicativeFilter{prod.top()});
  CHECK(trivial.algebra.size() == prod.size());
  for (int x = 0; x < prod.size(); ++x)
    for (int y = 0; y < prod.size(); ++y)
      CHECK(trivial.projection[static_cast<std::size_t>(prod.imp(x, y))] ==
            trivial.algebra.imp(trivial.projection[static_cast<std::size_t>(x)],
                                trivial.projection[static_cast<std::size_t>(y)]));

  // by the prime over the first factor: isomorphic to L_2
  // element x + 2*y; the prime with quotient L_2 is generated by (1,0) = 1
  const QuotientAlgebra l2 = quotient(prod, ImplicativeFilter{1});
  CHECK(l2.algebra.size() == 2);
  CHECK(check_axioms(l2.algebra).empty());

  CHECK_THROWS_AS(quotient(prod, ImplicativeFilter{prod.bottom()}), std::invalid_argument);
  CHECK_THROWS_AS(quotient(prod, ImplicativeFilter{2}), std::invalid_argument); // not idempotent
}

TEST_CASE("chi_d classifies primes by quotient size") {
  for (int n : {1, 2, 3, 4, 6}) {
    const WajsbergAlgebra chain = lukasiewicz_chain(n);
    CHECK(chi_d(chain, n, n).size() == prime_filters(chain).size());
    for (int d = 1; d < n; ++d)
      if (n % d == 0) CHECK(chi_d(chain, n, d).empty());
  }
  CHECK(chi_d(lukasiewicz_chain(2), 2, 1).empty()); // chi_1(L_3) = empty

  // partition over divisors
  for (const auto& a : small_algebras()) {
    if (!is_n_plus_1_valued(a, 6)) continue;
    std::size_t total = 0;
    for (int d : {1, 2, 3, 6}) total += chi_d(a, 6, d).size();
    CHECK(total == prime_filters(a).size());
  }

  // L_3 is not 3-valued: its prime quotient is L_3 and 2 does not divide 3
  CHECK(!is_n_plus_1_valued(lukasiewicz_chain(2), 3));
  CHECK_THROWS_AS(chi_d(lukasiewicz_chain(2), 3, 3), std::invalid_argument);
}

TEST_CASE("sigma_op through the prime quotients") {
  const WajsbergAlgebra l3 = lukasiewicz_chain(2);
  CHECK(sigma_op(l3, 2, 1, 1) == 0); // sigma_1(1/2) = 0
  CHECK(sigma_op(l3, 2, 2, 1) == 2); // sigma_2(1/2) = 1

  for (const auto& a : small_algebras()) {
    const int n = 6;
    if (!is_n_plus_1_valued(a, n)) continue;
    const BooleanSkeleton& skeleton = boolean_skeleton(a);
    for (int j = 1; j <= n; ++j) {
      CHECK(sigma_op(a, n, j, a.top()) == a.top());
      CHECK(sigma_op(a, n, j, a.bottom()) == a.bottom());
      for (int x = 0; x < a.size(); ++x)
        CHECK(skeleton.contains(sigma_op(a, n, j, x))); // always idempotent
    }
  }
}

TEST_CASE("x_d and y_d") {
  const WajsbergAlgebra l3 = lukasiewicz_chain(2);
  CHECK(find_xd(l3, 2, 2) == 1);  // [x]_P = 1/2
  CHECK(build_yd(l3, 2, 2) == 1); // 1/2 v ~(1/2) = 1/2
  CHECK(build_yd(l3, 2, 1) == l3.top()); // chi_1 empty
  CHECK_THROWS_AS(find_xd(l3, 2, 1), std::invalid_argument);

  // Remark-3 bound: every projection of x v ~(x^{d-1}) is >= (d-1)/d
  for (const auto& a : small_algebras()) {
    if (!is_n_plus_1_valued(a, 6)) continue;
    const PrimeDecomposition& dec = prime_decomposition(a);
    for (int d : {1, 2, 3, 6})
      for (int x = 0; x < a.size(); ++x) {
        const int bound_elem = a.join(x, a.neg(a.power(x, d - 1)));
        for (const auto& factor : dec.factors)
          CHECK(factor.rank[bound_elem] * d >= (d - 1) * factor.chain_len);
      }
  }

  // for every hom g onto a chain, g(y_d) >= (d-1)/d
  for (const auto& a : small_algebras()) {
    if (!is_n_plus_1_valued(a, 6)) continue;
    const PrimeDecomposition& dec = prime_decomposition(a);
    for (int d : {1, 2, 3, 6}) {
      const int yd = build_yd(a, 6, d);
      for (const auto& factor : dec.factors)
        CHECK(factor.rank[yd] * d >= (d - 1) * factor.chain_len);
    }
  }
}

TEST_CASE("the joint prime profile is injective") {
  for (const auto& a : small_algebras()) {
    const PrimeDecomposition& dec = prime_decomposition(a);
    std::set<std::vector<int>> profiles;
    for (int x = 0; x < a.size(); ++x) profiles.insert(dec.profile(x));
    CHECK(profiles.size() == static_cast<std::size_t>(a.size()));
    for (int x = 0; x < a.size(); ++x) CHECK(dec.element_of(dec.profile(x)) == x);
  }
}
