#include <doctest.h>

#include <sstream>

#include "mvdual/formats.hpp"

using namespace mvdual;

TEST_CASE("wajsberg interchange format") {
  const WajsbergAlgebra original = direct_product(lukasiewicz_chain(1), lukasiewicz_chain(2));
  std::stringstream buffer;
  write_wajsberg(buffer, original);
  CHECK(read_wajsberg(buffer) == original);

  const std::string l3 =
      "wajsberg size=3 top=2\n"
      "neg: 2 1 0\n"
      "imp:\n"
      "2 2 2\n"
      "1 2 2\n"
      "0 1 2\n";
  std::istringstream in(l3);
  CHECK(read_wajsberg(in) == lukasiewicz_chain(2));

  std::istringstream bad_header("algebra size=2 top=1");
  CHECK_THROWS_AS(read_wajsberg(bad_header), ParseError);
  std::istringstream truncated("wajsberg size=2 top=1\nneg: 1 0\nimp:\n1 1\n0");
  CHECK_THROWS_AS(read_wajsberg(truncated), ParseError);
  std::istringstream out_of_range("wajsberg size=2 top=1\nneg: 1 0\nimp:\n1 1\n0 7");
  CHECK_THROWS_AS(read_wajsberg(out_of_range), ParseError);
}

TEST_CASE("pair interchange format") {
  const std::string text =
      "pair n=2 atoms=2\n"
      "h 1 = {0}\n"
      "h 2 = {0,1}\n";
  std::istringstream in(text);
  const FilterMap object = read_pair(in);
  CHECK(object.n == 2);
  CHECK(object.base.atom_count() == 2);
  CHECK(object.at(1).generator == object.base.atom(0));
  CHECK(object.at(2).generator == object.base.top());

  std::stringstream buffer;
  write_pair(buffer, object);
  CHECK(read_pair(buffer) == object);

  std::istringstream non_divisor("pair n=4 atoms=1\nh 3 = {0}\n");
  CHECK_THROWS_AS(read_pair(non_divisor), ParseError);
  std::istringstream missing("pair n=4 atoms=1\nh 4 = {0}\n");
  CHECK_THROWS_AS(read_pair(missing), ParseError);
  std::istringstream duplicate("pair n=2 atoms=1\nh 1 = {0}\nh 1 = {}\nh 2 = {0}\n");
  CHECK_THROWS_AS(read_pair(duplicate), ParseError);
}

TEST_CASE("monotone tuple text form") {
  const BoolAlg b2(2);
  MonotoneTuple f;
  f.entries = {b2.bottom(), b2.atom(0), b2.top()};
  CHECK(to_string(f) == "[{},{0},{0,1}]");
  CHECK(parse_monotone_tuple("[{},{0},{0,1}]", 2) == f);
  CHECK_THROWS_AS(parse_monotone_tuple("{},{0}", 2), ParseError);
  CHECK_THROWS_AS(parse_monotone_tuple("[{0}", 2), ParseError);
}
