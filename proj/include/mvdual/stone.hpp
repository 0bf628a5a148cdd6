#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mvdual/chain.hpp"
#include "mvdual/pairs.hpp"

namespace mvdual {

/** Finite (n+1)-valued Boolean space: the ultrafilters of a finite Boolean
    algebra (a discrete space, one point per atom) with a closed set per
    divisor of n. h_top(n) is the whole space and h_top is a
    meet-homomorphism: h_top(gcd(d,r)) = h_top(d) intersect h_top(r). */
struct ValuedBooleanSpace {
  int n = 1;
  int point_count = 0;
  std::map<int, std::uint64_t> h_top; // divisor -> point mask

  std::uint64_t all_points() const { return (std::uint64_t{1} << point_count) - 1; }
};

/** A function from the points into L_{n+1}, subject to f(h_top(d)) within
    L_{d+1}: at every point of h_top(d) the numerator is a multiple of n/d. */
struct ValuedMap {
  int n = 1;
  std::vector<int> numerators; // point -> k, value k/n

  ChainValue at(int point) const { return {numerators[static_cast<std::size_t>(point)], n}; }

  friend bool operator==(const ValuedMap&, const ValuedMap&) = default;
};

/// Points = ultrafilters of the base; h_top(d) = the Stone set of h(d)'s generator.
ValuedBooleanSpace space_of(const FilterMap& object);

/// Empty report iff f satisfies the L_{d+1} restriction on every h_top(d).
Report check_valued_map(const ValuedBooleanSpace& space, const ValuedMap& f);

/** The translation of Remark 5: value 1 on s(g(1)), k/n on
    s(g(n-k+1)) \ s(g(n-k)), 0 off s(g(n)). Requires g in M(B,h). */
ValuedMap psi(const FilterMap& object, const MonotoneTuple& g);

/** Inverse translation: the tuple (a_1, ..., a_n) with s(a_j) = f^{-1}(A_j),
    A_j = {(n-j+1)/n, ..., 1}. Requires the ValuedMap invariant; errors naming
    the offending point and divisor otherwise. */
MonotoneTuple psi_inverse(const FilterMap& object, const ValuedMap& f);

/// Every function satisfying the invariant, in lexicographic point order.
std::vector<ValuedMap> all_valued_maps(const ValuedBooleanSpace& space);

std::string to_string(const ValuedMap& f); // one line per point: "<point>: k/n"
ValuedMap parse_valued_map(const std::string& text, int n, int point_count);

} // namespace mvdual
