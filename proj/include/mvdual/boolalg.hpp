#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mvdual {

/** Element of a finite Boolean algebra, encoded as the set of atoms below it.
    `atom_count` identifies the ambient algebra; elements of different
    algebras never combine. */
struct BoolElem {
  std::uint64_t atoms = 0;
  int atom_count = 0;

  friend bool operator==(const BoolElem&, const BoolElem&) = default;
};

/** A finite Boolean algebra given by its atom count m; the carrier is the
    powerset of {0, ..., m-1}, size 2^m. */
class BoolAlg {
public:
  explicit BoolAlg(int atom_count);

  int atom_count() const { return atom_count_; }
  std::uint64_t universe() const { return (std::uint64_t{1} << atom_count_) - 1; }
  std::uint64_t element_count() const { return std::uint64_t{1} << atom_count_; }

  BoolElem bottom() const { return {0, atom_count_}; }
  BoolElem top() const { return {universe(), atom_count_}; }
  BoolElem atom(int i) const;
  BoolElem element(std::uint64_t atom_mask) const;

  std::vector<BoolElem> elements() const; // all 2^m, by ascending mask

  friend bool operator==(const BoolAlg&, const BoolAlg&) = default;

private:
  int atom_count_;
};

BoolElem meet(BoolElem x, BoolElem y);
BoolElem join(BoolElem x, BoolElem y);
BoolElem complement(BoolElem x);
BoolElem imp(BoolElem x, BoolElem y); // complement(x) join y
bool leq(BoolElem x, BoolElem y);

/** A filter of a finite Boolean algebra, stored by its generator: the set
    {x : x >= generator}. Every filter of a finite Boolean algebra is
    principal. Generator = top gives the trivial filter {1}; generator =
    bottom gives the improper filter (all of B). */
struct Filter {
  BoolElem generator;

  bool contains(BoolElem x) const { return leq(generator, x); }
  bool is_trivial() const;  // {1}
  bool is_improper() const; // all of B

  friend bool operator==(const Filter&, const Filter&) = default;
};

/// Join in the filter lattice: generated by the meet of the generators.
Filter filter_join(const Filter& f, const Filter& g);

/// The maximal proper filters: one per atom.
std::vector<Filter> ultrafilters(const BoolAlg& algebra);

/** Stone basis set s(a) = { ultrafilters containing a }, as a bitmask of
    ultrafilter indices (ultrafilter i = the one generated by atom i). */
std::uint64_t stone_basis(BoolElem a);

std::string to_string(BoolElem x); // sorted atom list, e.g. "{0,2}"
BoolElem parse_bool_elem(const std::string& text, int atom_count);

} // namespace mvdual
