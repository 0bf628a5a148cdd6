#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "mvdual/duality.hpp"
#include "mvdual/stone.hpp"

using namespace mvdual;

namespace {

FilterMap six_element_object() {
  const BoolAlg b2(2);
  FilterMap object{b2, 2, {}};
  object.h.emplace(1, Filter{b2.atom(0)});
  object.h.emplace(2, Filter{b2.top()});
  return object;
}

FilterMap trivial_object(const BoolAlg& base, int n) {
  FilterMap object{base, n, {}};
  for (int d : DivisorSet::of(n).divisors) object.h.emplace(d, Filter{base.top()});
  return object;
}

} // namespace

TEST_CASE("space_of unfolds the filters into closed point sets") {
  const ValuedBooleanSpace space = space_of(six_element_object());
  CHECK(space.point_count == 2);
  CHECK(space.h_top.at(2) == space.all_points()); // h(2) = {1}
  CHECK(space.h_top.at(1) == 0b01);               // only the ultrafilter at atom 0

  // trivial filters cover the whole space
  const ValuedBooleanSpace full = space_of(trivial_object(BoolAlg(3), 4));
  for (const auto& [d, points] : full.h_top) CHECK(points == full.all_points());

  // delta is order-reversing: h(1) is the larger filter, its set is smaller
  CHECK((space.h_top.at(1) & ~space.h_top.at(2)) == 0);
  CHECK(space.h_top.at(1) != space.h_top.at(2));
}

TEST_CASE("the closed sets intersect along gcd") {
  for (int n : {2, 4, 6})
    for (int m = 1; m <= 2; ++m)
      for (const FilterMap& object : enumerate_objects(BoolAlg(m), n)) {
        const ValuedBooleanSpace space = space_of(object);
        CHECK(space.h_top.at(n) == space.all_points());
        for (int d : DivisorSet::of(n).divisors)
          for (int r : DivisorSet::of(n).divisors)
            CHECK(space.h_top.at(std::gcd(d, r)) == (space.h_top.at(d) & space.h_top.at(r)));
      }
}

TEST_CASE("psi translates tuples into valued maps") {
  const FilterMap object = six_element_object();

  // constants map to constant functions
  for (int k = 0; k <= 2; ++k) {
    const ValuedMap f = psi(object, constant_tuple(object.base, 2, k));
    for (int p = 0; p < 2; ++p) CHECK(f.at(p) == ChainValue(k, 2));
  }

  // g = (0, {a}): value 1/2 at the a-point, 0 at the other
  MonotoneTuple g;
  g.entries = {object.base.bottom(), object.base.atom(0)};
  const ValuedMap f = psi(object, g);
  CHECK(f.at(0) == ChainValue(1, 2));
  CHECK(f.at(1) == ChainValue(0, 2));

  // tuples outside M are rejected
  MonotoneTuple outside;
  outside.entries = {object.base.bottom(), object.base.atom(1)};
  CHECK_THROWS_AS(psi(object, outside), std::invalid_argument);
}

TEST_CASE("psi_inverse reconstructs the tuple") {
  const FilterMap object = six_element_object();

  // constant 0 pulls back to the bottom tuple
  const ValuedMap zero{2, {0, 0}};
  CHECK(psi_inverse(object, zero) == constant_tuple(object.base, 2, 0));

  // the n=2, m=1 worked example: f = 1/2 everywhere gives c_1
  const FilterMap single = trivial_object(BoolAlg(1), 2);
  FilterMap post{BoolAlg(1), 2, {}};
  post.h.emplace(1, Filter{BoolAlg(1).bottom()});
  post.h.emplace(2, Filter{BoolAlg(1).top()});
  const ValuedMap half{2, {1}};
  CHECK(psi_inverse(post, half) == constant_tuple(BoolAlg(1), 2, 1));

  // an invariant violation names the point and divisor
  CHECK_THROWS_WITH_AS(static_cast<void>(psi_inverse(single, half)),
                       doctest::Contains("point=0,d=1"), std::invalid_argument);
}

TEST_CASE("psi is a bijective homomorphism onto the valued maps") {
  for (int n : {2, 3, 4, 6})
    for (int m = 1; m <= 2; ++m)
      for (const FilterMap& object : enumerate_objects(BoolAlg(m), n)) {
        const MAlgebra algebra = build_M(object);
        const ValuedBooleanSpace space = space_of(object);
        const std::vector<ValuedMap> maps = all_valued_maps(space);

        // counts agree, psi is injective, and psi_inverse is a two-sided inverse
        CHECK(maps.size() == static_cast<std::size_t>(algebra.size()));
        std::set<std::vector<int>> images;
        for (int pos = 0; pos < algebra.size(); ++pos) {
          const MonotoneTuple g = algebra.tuple_of(pos);
          const ValuedMap f = psi(object, g);
          CHECK(check_valued_map(space, f).all_ok());
          CHECK(psi_inverse(object, f) == g);
          images.insert(f.numerators);
        }
        CHECK(images.size() == static_cast<std::size_t>(algebra.size()));
        for (const ValuedMap& f : maps) CHECK(psi(object, psi_inverse(object, f)) == f);

        // Wajsberg homomorphism: imp and neg become pointwise chain operations
        const WajsbergAlgebra& ambient = algebra.ambient().algebra();
        for (int x = 0; x < algebra.size(); ++x) {
          const int ax = algebra.ambient_of_pos(x);
          const ValuedMap fx = psi(object, algebra.tuple_of(x));
          const ValuedMap fneg =
              psi(object, algebra.ambient().tuple_at(ambient.neg(ax)));
          for (int p = 0; p < space.point_count; ++p) CHECK(fneg.at(p) == neg(fx.at(p)));
          for (int y = 0; y < algebra.size(); ++y) {
            const int ay = algebra.ambient_of_pos(y);
            const ValuedMap fy = psi(object, algebra.tuple_of(y));
            const ValuedMap fimp =
                psi(object, algebra.ambient().tuple_at(ambient.imp(ax, ay)));
            for (int p = 0; p < space.point_count; ++p)
              CHECK(fimp.at(p) == imp(fx.at(p), fy.at(p)));
          }
        }
      }
}

TEST_CASE("the space of functor_B_obj has one point per skeleton atom") {
  const std::vector<WajsbergAlgebra> algebras = {
      lukasiewicz_chain(2),
      direct_product(lukasiewicz_chain(1), lukasiewicz_chain(2)),
      direct_product(lukasiewicz_chain(1), lukasiewicz_chain(1)),
  };
  for (const WajsbergAlgebra& a : algebras) {
    const ValuedBooleanSpace space = space_of(functor_B_obj(a, 6));
    CHECK(space.point_count == boolean_skeleton(a).algebra.atom_count());
    CHECK(space.point_count == static_cast<int>(prime_filters(a).size()));
  }
}

TEST_CASE("valued map text form") {
  const ValuedMap f{2, {1, 0}};
  CHECK(to_string(f) == "0: 1/2\n1: 0/2\n");
  CHECK(parse_valued_map("0: 1/2\n1: 0/2\n", 2, 2) == f);
  CHECK_THROWS_AS(parse_valued_map("0: 1/2\n", 2, 2), std::invalid_argument); // missing point
  CHECK_THROWS_AS(parse_valued_map("0: 1/3\n1: 0/3\n", 2, 2), std::invalid_argument);
}
