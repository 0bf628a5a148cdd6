#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mvdual/pairs.hpp"
#include "mvdual/wajsberg.hpp"

namespace mvdual {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Algebra interchange format:
//   wajsberg size=<s> top=<t>
//   neg: <s entries>
//   imp:
//   <s rows of s entries>
WajsbergAlgebra read_wajsberg(std::istream& in);
void write_wajsberg(std::ostream& out, const WajsbergAlgebra& a);
WajsbergAlgebra load_wajsberg(const std::string& path);

// Pair format:
//   pair n=<n> atoms=<m>
//   h <d> = <generator atom set>     (one line per divisor, ascending)
FilterMap read_pair(std::istream& in);
void write_pair(std::ostream& out, const FilterMap& object);
FilterMap load_pair(const std::string& path);

// Monotone tuples as "[{0},{0,1}]".
std::string to_string(const MonotoneTuple& f);
MonotoneTuple parse_monotone_tuple(const std::string& text, int atom_count);

} // namespace mvdual
