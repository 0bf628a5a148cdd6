#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mvdual/boolalg.hpp"

namespace mvdual {

/** A finite Wajsberg algebra given by operation tables. Elements are indices
    0..size-1; `imp` and `neg` are total tables and `top` is the constant 1.
    Derived operations (lattice, MV sum/product, powers) are computed from the
    tables. Construction validates table shape only; use check_axioms for the
    four defining identities.

    Copies are cheap and share both the tables and the lazily computed
    derived structures (prime decomposition, Boolean skeleton, y_d elements),
    which are filled at most once per algebra. */
class WajsbergAlgebra {
public:
  WajsbergAlgebra(int size, std::vector<int> imp_table, std::vector<int> neg_table, int top);

  int size() const { return data_->size; }
  int top() const { return data_->top; }
  int bottom() const { return data_->neg[data_->top]; }

  int imp(int x, int y) const { return data_->imp[static_cast<std::size_t>(x) * data_->size + y]; }
  int neg(int x) const { return data_->neg[x]; }

  // x v y = (x -> y) -> y,  x ^ y = ~(~x v ~y)
  int join(int x, int y) const { return imp(imp(x, y), y); }
  int meet(int x, int y) const { return neg(join(neg(x), neg(y))); }
  // x (+) y = ~y -> x,  x (.) y = ~(x -> ~y)
  int oplus(int x, int y) const { return imp(neg(y), x); }
  int odot(int x, int y) const { return neg(imp(x, neg(y))); }
  int power(int x, int m) const; // x^0 = 1, x^m = x^{m-1} (.) x

  bool leq(int x, int y) const { return imp(x, y) == top(); }
  bool is_idempotent(int x) const { return odot(x, x) == x; }

  /// Identity of tables, top and size (not isomorphism).
  friend bool operator==(const WajsbergAlgebra& a, const WajsbergAlgebra& b) {
    return a.data_ == b.data_ ||
           (a.data_->size == b.data_->size && a.data_->top == b.data_->top &&
            a.data_->imp == b.data_->imp && a.data_->neg == b.data_->neg);
  }

  struct Cache;
  Cache& cache() const { return *cache_; }

private:
  struct Data {
    int size;
    std::vector<int> imp;
    std::vector<int> neg;
    int top;
  };
  std::shared_ptr<const Data> data_;
  std::shared_ptr<Cache> cache_;
};

/// The chain L_{n+1} as tables; element k is the value k/n, top = n.
WajsbergAlgebra lukasiewicz_chain(int n);

/// Direct product; element index = x + a.size() * y for (x, y).
WajsbergAlgebra direct_product(const WajsbergAlgebra& a, const WajsbergAlgebra& b);
WajsbergAlgebra direct_product(const std::vector<WajsbergAlgebra>& factors);

// ---------------------------------------------------------------------------
// Axiom checking

struct AxiomViolation {
  int identity = 0;            // 1..4 as in the Wajsberg axioms
  std::array<int, 3> witness;  // unused slots = -1
  std::string describe() const;
};

struct AxiomCheckOptions {
  // Identity 2 is cubic; above this bound it is checked on `sample_count`
  // seeded random triples instead of exhaustively. The other identities are
  // at most quadratic and always checked exhaustively.
  std::uint64_t exhaustive_triple_limit = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t sample_count = 1'000'000;
  std::uint64_t seed = 0;
};

/// Empty result iff the four Wajsberg identities hold on all checked tuples.
std::vector<AxiomViolation> check_axioms(const WajsbergAlgebra& a);
std::vector<AxiomViolation> check_axioms(const WajsbergAlgebra& a, const AxiomCheckOptions& options);

// ---------------------------------------------------------------------------
// Filters, quotients, prime structure

/** An implicative filter, stored by its generator: the set {x : x >= g}.
    In a finite Wajsberg algebra every implicative filter is of this shape
    with g idempotent (the meet of a finite odot-closed lattice filter is a
    member and forces g (.) g = g). */
struct ImplicativeFilter {
  int generator = 0;

  friend bool operator==(const ImplicativeFilter&, const ImplicativeFilter&) = default;
};

std::vector<ImplicativeFilter> implicative_filters(const WajsbergAlgebra& a);

/// Prime = proper with totally ordered quotient. Sorted by generator index.
std::vector<ImplicativeFilter> prime_filters(const WajsbergAlgebra& a);

struct QuotientAlgebra {
  WajsbergAlgebra algebra;
  std::vector<int> projection; // element of A -> element of the quotient
};

/// A / F for proper F; classes of x == y iff x->y, y->x in F.
QuotientAlgebra quotient(const WajsbergAlgebra& a, ImplicativeFilter f);

/** The decomposition of a finite Wajsberg algebra into its prime-quotient
    chains: one factor per prime filter, each a chain L_{c+1} recorded by its
    length c and the rank of every element's class. The joint rank profile is
    injective, and for a valid algebra bijective onto the full product. */
struct PrimeDecomposition {
  struct Factor {
    ImplicativeFilter filter;
    int chain_len;            // quotient is L_{chain_len + 1}
    std::vector<int> rank;    // element -> 0..chain_len
  };
  std::vector<Factor> factors;

  std::vector<int> profile(int x) const;
  /// Element with the given rank profile, or -1.
  int element_of(const std::vector<int>& profile) const;

  // mixed-radix lookup: profile -> Sum profile[i] * stride[i] -> element
  std::vector<std::uint64_t> strides;
  std::vector<int> element_by_key;
};

const PrimeDecomposition& prime_decomposition(const WajsbergAlgebra& a);

/// True iff every prime quotient chain length divides n.
bool is_n_plus_1_valued(const WajsbergAlgebra& a, int n);

/// The primes whose quotient is exactly L_{d+1}; errors if A is not (n+1)-valued.
std::vector<ImplicativeFilter> chi_d(const WajsbergAlgebra& a, int n, int d);

/** sigma_op(A, n, j, x): the unique element whose class in every prime
    quotient (identified with a subchain of L_{n+1}) is sigma(j, [x]_P).
    Always idempotent. */
int sigma_op(const WajsbergAlgebra& a, int n, int j, int x);

/** An element x_d with [x_d]_P = (d-1)/d for every P in chi_d(A); the witness
    with the lowest element index. Errors when chi_d(A) is empty. */
int find_xd(const WajsbergAlgebra& a, int n, int d);

/// y_d = top when chi_d(A) is empty, else x_d v ~(x_d^{d-1}). Cached per (A, n).
int build_yd(const WajsbergAlgebra& a, int n, int d);

// ---------------------------------------------------------------------------
// Boolean skeleton

/** B(A) = {x : x (.) x = x}, the maximal Boolean subalgebra, together with
    the isomorphism onto the powerset algebra over its atoms. */
struct BooleanSkeleton {
  BoolAlg algebra;           // powerset algebra over the skeleton atoms
  std::vector<int> elements; // idempotent element indices, ascending
  std::vector<int> atoms;    // element index of each skeleton atom, ascending

  BoolElem to_bool(int element) const;  // idempotent -> atom mask
  int from_bool(BoolElem mask) const;   // atom mask -> element index
  bool contains(int element) const;

  std::vector<int> atom_mask_of; // element -> mask, -1 entries for non-members
};

const BooleanSkeleton& boolean_skeleton(const WajsbergAlgebra& a);

} // namespace mvdual
