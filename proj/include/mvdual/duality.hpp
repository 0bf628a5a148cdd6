#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvdual/pairs.hpp"
#include "mvdual/report.hpp"
#include "mvdual/wajsberg.hpp"

namespace mvdual {

/// Homomorphism of Wajsberg algebras, as an element index map.
struct WMorphism {
  WajsbergAlgebra source;
  WajsbergAlgebra target;
  std::vector<int> map;

  int operator()(int x) const { return map[static_cast<std::size_t>(x)]; }
  bool is_homomorphism() const; // preserves imp, neg, top on all inputs
};

WMorphism identity_morphism(const WajsbergAlgebra& a);
WMorphism compose(const WMorphism& outer, const WMorphism& inner);

/** Morphism of B^{n+1}: a Boolean homomorphism theta with
    h1(d) <= theta^{-1}(h2(d)) for every divisor d. A Boolean homomorphism
    between powerset algebras is stored by its dual point map: target atom
    b is below theta(x) iff point_map[b] is an atom of x. */
struct PairMorphism {
  FilterMap source;
  FilterMap target;
  std::vector<int> point_map; // target atom -> source atom

  BoolElem apply(BoolElem x) const;
  bool filter_condition_holds() const; // apply(gen_src(d)) >= gen_tgt(d) for all d
};

PairMorphism identity_pair_morphism(const FilterMap& object);
PairMorphism compose(const PairMorphism& outer, const PairMorphism& inner);

// ---------------------------------------------------------------------------
// The functor B : W^{n+1} -> B^{n+1}

/** Object part: <B(A), h_A> with h_A(d) = P_d intersect B(A), where P_d is
    the intersection of the primes whose quotient chain embeds in L_{d+1}
    (the improper filter when no prime qualifies). The result satisfies the
    object laws; this is re-verified at construction. */
FilterMap functor_B_obj(const WajsbergAlgebra& a, int n);

/// Morphism part: restriction of g to the Boolean skeletons.
PairMorphism functor_B_mor(const WMorphism& g, int n);

// ---------------------------------------------------------------------------
// The functor M : B^{n+1} -> W^{n+1}

MAlgebra functor_M_obj(const FilterMap& object); // = build_M

/// Morphism part: f -> theta o f, entrywise. Well-definedness re-checked.
WMorphism functor_M_mor(const PairMorphism& theta, const MAlgebra& source, const MAlgebra& target);
WMorphism functor_M_mor(const PairMorphism& theta);

// ---------------------------------------------------------------------------
// Theorem 2: the isomorphism phi : A -> M(B(A), h_A)

/// phi(x) = (sigma_1(x), ..., sigma_n(x)) under the skeleton identification.
MonotoneTuple phi(const WajsbergAlgebra& a, int n, int x);

/** The inverse construction: z = Vee_i (f(i) ^ a_i) with
    a_i = Wedge_d y_d^(q_{d,i}-1). Requires f in M(B(A), h_A); errors naming
    the violated (d, q) otherwise. */
int phi_inverse(const WajsbergAlgebra& a, int n, const MonotoneTuple& f);

/// phi as an explicit WMorphism onto M (element -> member position).
WMorphism phi_morphism(const WajsbergAlgebra& a, int n, const MAlgebra& m);

// ---------------------------------------------------------------------------
// Theorem 3: <B, h> is isomorphic to <B(M(B,h)), h_{M(B,h)}>

struct Theorem3Witness {
  Report report;
  std::vector<int> mu;        // element of B (mask) -> member position in M
  std::vector<int> psi1;      // ultrafilter of B (atom) -> skeleton atom of M
  std::vector<int> psi2_gen;  // skeleton atom of M -> generator of the matching prime of M
};

/** Verifies mu : a -> constant tuple a is a Boolean isomorphism of B onto
    B(M(B,h)) with mu^{-1}(h_{M(B,h)}(d)) = h(d), and realizes the prime
    correspondences psi_1, psi_2 (psi_2(Q) = {x : x^n in Q}). */
Theorem3Witness theorem3_check(const FilterMap& object);
Theorem3Witness theorem3_check(const MAlgebra& m);

// ---------------------------------------------------------------------------
// Hom-sets and natural equivalence

/** All W-homomorphisms source -> target, enumerated through the prime
    decompositions (a hom into a chain is a prime projection followed by the
    unique subchain embedding; homs into a product are tuples of such). When
    the hom-set exceeds `cap`, a fixed-seed random subset of `samples` maps
    is returned instead. */
std::vector<WMorphism> enumerate_homs(const WajsbergAlgebra& source,
                                      const WajsbergAlgebra& target,
                                      std::uint64_t cap = 10'000,
                                      std::uint64_t samples = 100,
                                      std::uint64_t seed = 0);

std::uint64_t hom_count(const WajsbergAlgebra& source, const WajsbergAlgebra& target);

/// Explicit isomorphism via matching prime-quotient chain multisets, if any.
std::optional<WMorphism> find_isomorphism(const WajsbergAlgebra& a, const WajsbergAlgebra& b);

struct EquivalenceSamples {
  int n = 1;
  std::vector<std::pair<std::string, WajsbergAlgebra>> algebras;
  std::vector<std::pair<std::string, FilterMap>> objects;
  std::uint64_t hom_cap = 10'000;
  std::uint64_t hom_samples = 100;
  std::uint64_t seed = 0;
};

/** Sample family used by the verification suite: all products of chains
    L_{d+1} (d | n) up to max_algebra_size elements, and all valid <B, h>
    with at most max_atoms atoms. */
EquivalenceSamples default_samples(int n, int max_algebra_size = 40, int max_atoms = 2);

/// All valid generator maps h for the given base and n, by exhaustive search.
std::vector<FilterMap> enumerate_objects(const BoolAlg& base, int n);

/** Verifies, over the samples: the Theorem 2 round-trip on every algebra,
    the Theorem 3 object isomorphism on every <B,h>, and commutation of the
    naturality squares phi o g = M(B(g)) o phi on every enumerated hom. */
Report equivalence_suite(const EquivalenceSamples& samples);

} // namespace mvdual
