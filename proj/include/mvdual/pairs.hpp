#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mvdual/boolalg.hpp"
#include "mvdual/report.hpp"
#include "mvdual/wajsberg.hpp"

namespace mvdual {

/// The positive divisors of n, ascending. Closed under gcd, contains 1 and n.
struct DivisorSet {
  int n = 1;
  std::vector<int> divisors;

  static DivisorSet of(int n);
  bool contains(int d) const;
};

/** An object <B, h> of the category B^{n+1}: a Boolean algebra together with
    a filter of B for each divisor of n. The object laws are h(n) = {1} and
    h(gcd(d,r)) = h(d) v h(r); see check_object. */
struct FilterMap {
  BoolAlg base{1};
  int n = 1;
  std::map<int, Filter> h; // divisor -> filter

  const Filter& at(int d) const;

  friend bool operator==(const FilterMap&, const FilterMap&) = default;
};

/** Element of B^[n]: a monotone n-tuple f(1) <= ... <= f(n) of Boolean
    elements. Entries are stored 0-based; operator()(i) is 1-based to match
    the block formulas. */
struct MonotoneTuple {
  std::vector<BoolElem> entries;

  int size() const { return static_cast<int>(entries.size()); }
  const BoolElem& operator()(int i) const { return entries[static_cast<std::size_t>(i) - 1]; }
  BoolElem& operator()(int i) { return entries[static_cast<std::size_t>(i) - 1]; }
  bool is_monotone() const;

  friend bool operator==(const MonotoneTuple&, const MonotoneTuple&) = default;
};

/// c_k: the constant chain element, 1 exactly on indices i >= n+1-k.
MonotoneTuple constant_tuple(const BoolAlg& base, int n, int k);
/// Tuple with every entry equal to a.
MonotoneTuple diagonal_tuple(const BoolAlg& base, int n, BoolElem a);

// Theorem-1 operations on monotone tuples.
MonotoneTuple tuple_imp(const MonotoneTuple& f, const MonotoneTuple& g);
MonotoneTuple tuple_neg(const MonotoneTuple& f);

/** q_{d,j}: the block of divisor d containing position j, i.e. the least q
    with 1 <= q <= d and j <= q*n/d. */
int q_index(int d, int j, int n);

/// xi_{d,q}(f) = f(q*n/d) -> f((q-1)*n/d + 1): tests constancy on block q.
BoolElem xi(int d, int q, const MonotoneTuple& f);

/** B^[n] materialized as a Wajsberg algebra. Element indices are canonical:
    each atom contributes an independent digit v in 0..n (the number of
    positions containing that atom), and the index is the little-endian
    mixed-radix value of the digit vector. */
class BnAlgebra {
public:
  BnAlgebra(BoolAlg base, int n);

  const BoolAlg& base() const { return base_; }
  int n() const { return n_; }
  int size() const { return algebra_.size(); }
  const WajsbergAlgebra& algebra() const { return algebra_; }

  MonotoneTuple tuple_at(int index) const;
  int index_of(const MonotoneTuple& f) const; // errors on non-monotone input
  int constant(int k) const;                  // index of c_k

private:
  BoolAlg base_;
  int n_;
  WajsbergAlgebra algebra_;
};

/// Theorem-1 construction (free function form of the BnAlgebra constructor).
BnAlgebra build_Bn(const BoolAlg& base, int n);

/// Empty report iff both B^{n+1} object laws hold; lists violated pairs (d,r).
Report check_object(const FilterMap& object);

/// xi-membership of f in M(B,h); on failure reports the first violated (d,q).
struct MembershipFailure {
  int d = 0;
  int q = 0;
};
bool in_M(const FilterMap& object, const MonotoneTuple& f, MembershipFailure* failure = nullptr);

/** The subalgebra M(B,h) of B^[n]: tuples whose every xi_{d,q} value lies in
    h(d). Closure under the operations and presence of the constants are
    re-verified at construction. The full operation tables of the subalgebra
    are materialized lazily; membership queries only need the ambient algebra. */
class MAlgebra {
public:
  MAlgebra(FilterMap object, std::shared_ptr<const BnAlgebra> ambient);

  const FilterMap& object() const { return object_; }
  const BnAlgebra& ambient() const { return *ambient_; }
  std::shared_ptr<const BnAlgebra> ambient_ptr() const { return ambient_; }

  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; } // ambient indices, ascending
  bool contains_ambient(int ambient_index) const;
  int pos_of_ambient(int ambient_index) const; // member position, or -1
  int ambient_of_pos(int pos) const { return members_[static_cast<std::size_t>(pos)]; }

  MonotoneTuple tuple_of(int pos) const;
  int pos_of_tuple(const MonotoneTuple& f) const; // -1 when not a member

  /// Operation tables re-indexed to member positions (computed on first use).
  const WajsbergAlgebra& algebra() const;

private:
  FilterMap object_;
  std::shared_ptr<const BnAlgebra> ambient_;
  std::vector<int> members_;
  std::vector<int> pos_of_; // ambient index -> member position or -1
  struct LazyTable;
  std::shared_ptr<LazyTable> table_;
};

MAlgebra build_M(const FilterMap& object);
MAlgebra build_M(const FilterMap& object, std::shared_ptr<const BnAlgebra> ambient);

} // namespace mvdual
