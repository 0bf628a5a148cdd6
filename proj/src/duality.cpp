#include "mvdual/duality.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mvdual {

// ---------------------------------------------------------------------------
// Morphisms

bool WMorphism::is_homomorphism() const {
  if (map.size() != static_cast<std::size_t>(source.size())) return false;
  for (int v : map)
    if (v < 0 || v >= target.size()) return false;
  if (map[static_cast<std::size_t>(source.top())] != target.top()) return false;
  for (int x = 0; x < source.size(); ++x) {
    if (map[static_cast<std::size_t>(source.neg(x))] != target.neg(map[static_cast<std::size_t>(x)]))
      return false;
    for (int y = 0; y < source.size(); ++y)
      if (map[static_cast<std::size_t>(source.imp(x, y))] !=
          target.imp(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
        return false;
  }
  return true;
}

WMorphism identity_morphism(const WajsbergAlgebra& a) {
  std::vector<int> map(static_cast<std::size_t>(a.size()));
  std::iota(map.begin(), map.end(), 0);
  return {a, a, std::move(map)};
}

WMorphism compose(const WMorphism& outer, const WMorphism& inner) {
  if (!(inner.target == outer.source))
    throw std::invalid_argument("morphisms are not composable");
  std::vector<int> map(inner.map.size());
  for (std::size_t x = 0; x < inner.map.size(); ++x)
    map[x] = outer.map[static_cast<std::size_t>(inner.map[x])];
  return {inner.source, outer.target, std::move(map)};
}

BoolElem PairMorphism::apply(BoolElem x) const {
  if (x.atom_count != source.base.atom_count())
    throw std::invalid_argument("element belongs to a different algebra");
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < point_map.size(); ++b)
    if (x.atoms >> point_map[b] & 1) mask |= std::uint64_t{1} << b;
  return target.base.element(mask);
}

bool PairMorphism::filter_condition_holds() const {
  for (const auto& [d, filter] : source.h)
    if (!leq(target.at(d).generator, apply(filter.generator))) return false;
  return true;
}

PairMorphism identity_pair_morphism(const FilterMap& object) {
  std::vector<int> point_map(static_cast<std::size_t>(object.base.atom_count()));
  std::iota(point_map.begin(), point_map.end(), 0);
  return {object, object, std::move(point_map)};
}

PairMorphism compose(const PairMorphism& outer, const PairMorphism& inner) {
  if (!(inner.target == outer.source))
    throw std::invalid_argument("pair morphisms are not composable");
  std::vector<int> point_map(outer.point_map.size());
  for (std::size_t b = 0; b < outer.point_map.size(); ++b)
    point_map[b] = inner.point_map[static_cast<std::size_t>(outer.point_map[b])];
  return {inner.source, outer.target, std::move(point_map)};
}

// ---------------------------------------------------------------------------
// Functor B

FilterMap functor_B_obj(const WajsbergAlgebra& a, int n) {
  if (!is_n_plus_1_valued(a, n))
    throw std::invalid_argument("algebra is not (n+1)-valued for n=" + std::to_string(n));
  const PrimeDecomposition& dec = prime_decomposition(a);
  const BooleanSkeleton& skeleton = boolean_skeleton(a);

  FilterMap out{skeleton.algebra, n, {}};
  for (int d : DivisorSet::of(n).divisors) {
    // P_d = intersection of the primes whose quotient embeds in L_{d+1};
    // the generators are idempotent, so the intersection generator stays in B(A)
    int generator = a.bottom();
    for (const auto& factor : dec.factors)
      if (d % factor.chain_len == 0) generator = a.join(generator, factor.filter.generator);
    out.h.emplace(d, Filter{skeleton.to_bool(generator)});
  }

  if (!check_object(out).all_ok())
    throw std::runtime_error("functor_B_obj produced an invalid B^{n+1} object");
  return out;
}

namespace {

// Restriction of g to the skeletons, with the B-images of the endpoints
// already computed (the hot path recomputes neither).
PairMorphism skeleton_restriction(const WMorphism& g, FilterMap source_obj,
                                  FilterMap target_obj) {
  const BooleanSkeleton& src = boolean_skeleton(g.source);
  const BooleanSkeleton& tgt = boolean_skeleton(g.target);

  // dual point map: g sends the source atoms to a partition of the target top
  std::vector<int> point_map(tgt.atoms.size());
  for (std::size_t b = 0; b < tgt.atoms.size(); ++b) {
    int found = -1;
    for (std::size_t atom = 0; atom < src.atoms.size(); ++atom)
      if (g.target.leq(tgt.atoms[b], g.map[static_cast<std::size_t>(src.atoms[atom])])) {
        if (found >= 0)
          throw std::runtime_error("skeleton image of the source atoms is not a partition");
        found = static_cast<int>(atom);
      }
    if (found < 0)
      throw std::runtime_error("skeleton image of the source atoms is not a partition");
    point_map[b] = found;
  }

  PairMorphism theta{std::move(source_obj), std::move(target_obj), std::move(point_map)};
  for (int e : src.elements)
    if (!(theta.apply(src.to_bool(e)) == tgt.to_bool(g.map[static_cast<std::size_t>(e)])))
      throw std::runtime_error("restriction of g to the skeletons is not Boolean");
  if (!theta.filter_condition_holds())
    throw std::runtime_error("restriction of g violates the filter condition");
  return theta;
}

} // namespace

PairMorphism functor_B_mor(const WMorphism& g, int n) {
  if (!g.is_homomorphism())
    throw std::invalid_argument("functor_B_mor requires a W-homomorphism");
  return skeleton_restriction(g, functor_B_obj(g.source, n), functor_B_obj(g.target, n));
}

// ---------------------------------------------------------------------------
// Functor M

MAlgebra functor_M_obj(const FilterMap& object) { return build_M(object); }

WMorphism functor_M_mor(const PairMorphism& theta, const MAlgebra& source,
                        const MAlgebra& target) {
  if (!(theta.source == source.object()) || !(theta.target == target.object()))
    throw std::invalid_argument("morphism endpoints do not match the given algebras");
  if (!theta.filter_condition_holds())
    throw std::invalid_argument("pair morphism violates the filter condition");

  std::vector<int> map(static_cast<std::size_t>(source.size()));
  for (int pos = 0; pos < source.size(); ++pos) {
    MonotoneTuple f = source.tuple_of(pos);
    for (BoolElem& entry : f.entries) entry = theta.apply(entry);
    const int image = target.pos_of_tuple(f);
    if (image < 0)
      throw std::runtime_error("image tuple violates a xi-condition of the target object");
    map[static_cast<std::size_t>(pos)] = image;
  }
  return {source.algebra(), target.algebra(), std::move(map)};
}

WMorphism functor_M_mor(const PairMorphism& theta) {
  return functor_M_mor(theta, build_M(theta.source), build_M(theta.target));
}

// ---------------------------------------------------------------------------
// Theorem 2

MonotoneTuple phi(const WajsbergAlgebra& a, int n, int x) {
  const BooleanSkeleton& skeleton = boolean_skeleton(a);
  MonotoneTuple out;
  out.entries.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.entries.push_back(skeleton.to_bool(sigma_op(a, n, i, x)));
  return out;
}

int phi_inverse(const WajsbergAlgebra& a, int n, const MonotoneTuple& f) {
  const FilterMap h_a = functor_B_obj(a, n);
  MembershipFailure failure;
  if (!in_M(h_a, f, &failure))
    throw std::invalid_argument("tuple lies outside M(B(A),h_A): xi(d=" +
                                std::to_string(failure.d) + ",q=" + std::to_string(failure.q) +
                                ") is not in h(d)");
  const BooleanSkeleton& skeleton = boolean_skeleton(a);
  const std::vector<int> divisors = DivisorSet::of(n).divisors;

  int z = a.bottom();
  for (int i = 1; i <= n; ++i) {
    int a_i = a.top();
    for (int d : divisors)
      a_i = a.meet(a_i, a.power(build_yd(a, n, d), q_index(d, i, n) - 1));
    z = a.join(z, a.meet(skeleton.from_bool(f(i)), a_i));
  }
  return z;
}

WMorphism phi_morphism(const WajsbergAlgebra& a, int n, const MAlgebra& m) {
  std::vector<int> map(static_cast<std::size_t>(a.size()));
  for (int x = 0; x < a.size(); ++x) {
    const int pos = m.pos_of_tuple(phi(a, n, x));
    if (pos < 0) throw std::runtime_error("phi image is not a member of M(B(A),h_A)");
    map[static_cast<std::size_t>(x)] = pos;
  }
  return {a, m.algebra(), std::move(map)};
}

// ---------------------------------------------------------------------------
// Theorem 3

namespace {

std::string object_id(const FilterMap& object) {
  std::ostringstream out;
  out << "n" << object.n << ":m" << object.base.atom_count();
  for (const auto& [d, filter] : object.h) out << ",h" << d << "=" << to_string(filter.generator);
  return out.str();
}

} // namespace

Theorem3Witness theorem3_check(const FilterMap& object) { return theorem3_check(build_M(object)); }

Theorem3Witness theorem3_check(const MAlgebra& m) {
  Theorem3Witness witness;
  Report& report = witness.report;
  const FilterMap& object = m.object();
  const std::string id = object_id(object);
  const BoolAlg& base = object.base;
  const int n = object.n;
  const WajsbergAlgebra& malg = m.algebra();

  // mu: a -> the constant tuple at a; constants always satisfy the xi-conditions
  witness.mu.assign(base.element_count(), -1);
  bool mu_total = true;
  for (std::uint64_t mask = 0; mask < base.element_count(); ++mask) {
    const int pos = m.pos_of_tuple(diagonal_tuple(base, n, base.element(mask)));
    witness.mu[mask] = pos;
    if (pos < 0) mu_total = false;
  }
  report.add(mu_total, "theorem3.mu-total", id);
  if (!mu_total) return witness;

  // B(M(B,h)) must be exactly the constant tuples
  const BooleanSkeleton& skeleton = boolean_skeleton(malg);
  bool constants = skeleton.elements.size() == base.element_count();
  if (constants)
    for (std::uint64_t mask = 0; mask < base.element_count(); ++mask)
      if (!skeleton.contains(witness.mu[mask])) constants = false;
  report.add(constants, "theorem3.skeleton-constants", id);
  if (!constants) return witness;

  bool boolean_iso = true;
  for (std::uint64_t x = 0; x < base.element_count(); ++x) {
    const BoolElem ex = base.element(x);
    if (witness.mu[x ^ base.universe()] != malg.neg(witness.mu[x])) boolean_iso = false;
    for (std::uint64_t y = 0; y < base.element_count(); ++y) {
      const BoolElem ey = base.element(y);
      if (witness.mu[meet(ex, ey).atoms] != malg.meet(witness.mu[x], witness.mu[y]) ||
          witness.mu[join(ex, ey).atoms] != malg.join(witness.mu[x], witness.mu[y]))
        boolean_iso = false;
    }
  }
  report.add(boolean_iso, "theorem3.mu-boolean-iso", id);

  // mu^{-1}(h_{M(B,h)}(d)) = h(d)
  const FilterMap h_m = functor_B_obj(malg, n);
  for (int d : DivisorSet::of(n).divisors) {
    const int generator_elem = skeleton.from_bool(h_m.at(d).generator);
    const MonotoneTuple generator_tuple = m.tuple_of(generator_elem);
    const BoolElem pulled_back = generator_tuple(1); // constant tuple: any entry
    const bool ok = pulled_back == object.at(d).generator;
    report.add(ok, "theorem3.h-pullback", id + ",d=" + std::to_string(d),
               ok ? "" : "mu^{-1}(h_M(" + std::to_string(d) + ")) is generated by " +
                             to_string(pulled_back) + " instead of " +
                             to_string(object.at(d).generator));
  }

  // psi_1: ultrafilters of B -> ultrafilters of B(M), through mu
  witness.psi1.assign(static_cast<std::size_t>(base.atom_count()), -1);
  bool psi1_ok = true;
  for (int i = 0; i < base.atom_count(); ++i) {
    const int image = witness.mu[base.atom(i).atoms];
    const BoolElem mask = skeleton.to_bool(image);
    if (std::popcount(mask.atoms) == 1)
      witness.psi1[static_cast<std::size_t>(i)] = std::countr_zero(mask.atoms);
    else
      psi1_ok = false;
  }
  report.add(psi1_ok, "theorem3.psi1-atoms", id);

  // psi_2(Q) = {x : x^n in Q} must enumerate the primes of M(B,h)
  const std::vector<ImplicativeFilter> primes = prime_filters(malg);
  witness.psi2_gen.assign(static_cast<std::size_t>(skeleton.algebra.atom_count()), -1);
  bool psi2_prime = true;
  bool psi2_inverse = true;
  std::vector<int> matched;
  for (int j = 0; j < skeleton.algebra.atom_count(); ++j) {
    std::vector<bool> member(static_cast<std::size_t>(malg.size()));
    for (int x = 0; x < malg.size(); ++x) {
      const BoolElem power_mask = skeleton.to_bool(malg.power(x, n));
      member[static_cast<std::size_t>(x)] = (power_mask.atoms >> j) & 1;
    }
    int found = -1;
    for (const ImplicativeFilter& p : primes) {
      bool equal = true;
      for (int x = 0; x < malg.size() && equal; ++x)
        if (member[static_cast<std::size_t>(x)] != malg.leq(p.generator, x)) equal = false;
      if (equal) {
        found = p.generator;
        break;
      }
    }
    if (found < 0) {
      psi2_prime = false;
      continue;
    }
    witness.psi2_gen[static_cast<std::size_t>(j)] = found;
    matched.push_back(found);

    // psi_2^{-1}(P) = P intersect B(M): the skeleton part of the prime is Q
    for (int e : skeleton.elements) {
      const bool in_p = malg.leq(found, e);
      const bool in_q = (skeleton.to_bool(e).atoms >> j) & 1;
      if (in_p != in_q) psi2_inverse = false;
    }
  }
  std::sort(matched.begin(), matched.end());
  const bool psi2_bijective =
      matched.size() == primes.size() &&
      std::adjacent_find(matched.begin(), matched.end()) == matched.end();
  report.add(psi2_prime, "theorem3.psi2-prime", id);
  report.add(psi2_bijective, "theorem3.psi2-bijective", id);
  report.add(psi2_inverse, "theorem3.psi2-inverse", id);

  return witness;
}

// ---------------------------------------------------------------------------
// Hom-sets

namespace {

struct HomFrame {
  const PrimeDecomposition* source_dec;
  const PrimeDecomposition* target_dec;
  std::vector<std::vector<int>> candidates; // target factor -> compatible source factors
};

HomFrame hom_frame(const WajsbergAlgebra& source, const WajsbergAlgebra& target) {
  HomFrame frame{&prime_decomposition(source), &prime_decomposition(target), {}};
  frame.candidates.resize(frame.target_dec->factors.size());
  for (std::size_t j = 0; j < frame.target_dec->factors.size(); ++j) {
    const int cj = frame.target_dec->factors[j].chain_len;
    for (std::size_t i = 0; i < frame.source_dec->factors.size(); ++i)
      if (cj % frame.source_dec->factors[i].chain_len == 0)
        frame.candidates[j].push_back(static_cast<int>(i));
  }
  return frame;
}

WMorphism assemble_hom(const WajsbergAlgebra& source, const WajsbergAlgebra& target,
                       const HomFrame& frame, const std::vector<int>& choice) {
  std::vector<int> map(static_cast<std::size_t>(source.size()));
  std::vector<int> profile(frame.target_dec->factors.size());
  for (int x = 0; x < source.size(); ++x) {
    for (std::size_t j = 0; j < profile.size(); ++j) {
      const auto& src_factor =
          frame.source_dec->factors[static_cast<std::size_t>(choice[j])];
      const int cj = frame.target_dec->factors[j].chain_len;
      profile[j] = src_factor.rank[x] * (cj / src_factor.chain_len);
    }
    const int y = frame.target_dec->element_of(profile);
    if (y < 0) throw std::runtime_error("hom assembly failed: profile not realized");
    map[static_cast<std::size_t>(x)] = y;
  }
  return {source, target, std::move(map)};
}

} // namespace

std::uint64_t hom_count(const WajsbergAlgebra& source, const WajsbergAlgebra& target) {
  const HomFrame frame = hom_frame(source, target);
  std::uint64_t count = 1;
  for (const auto& options : frame.candidates) {
    count *= options.size();
    if (count == 0) return 0;
  }
  return count;
}

std::vector<WMorphism> enumerate_homs(const WajsbergAlgebra& source,
                                      const WajsbergAlgebra& target, std::uint64_t cap,
                                      std::uint64_t samples, std::uint64_t seed) {
  const HomFrame frame = hom_frame(source, target);
  const std::uint64_t total = hom_count(source, target);
  std::vector<WMorphism> out;
  if (total == 0) return out;

  if (total <= cap) {
    std::vector<std::size_t> odometer(frame.candidates.size(), 0);
    while (true) {
      std::vector<int> choice(frame.candidates.size());
      for (std::size_t j = 0; j < choice.size(); ++j)
        choice[j] = frame.candidates[j][odometer[j]];
      out.push_back(assemble_hom(source, target, frame, choice));
      std::size_t j = 0;
      while (j < odometer.size() && ++odometer[j] == frame.candidates[j].size()) {
        odometer[j] = 0;
        ++j;
      }
      if (j == odometer.size()) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < samples; ++k) {
      std::vector<int> choice(frame.candidates.size());
      for (std::size_t j = 0; j < choice.size(); ++j) {
        std::uniform_int_distribution<std::size_t> pick(0, frame.candidates[j].size() - 1);
        choice[j] = frame.candidates[j][pick(rng)];
      }
      out.push_back(assemble_hom(source, target, frame, choice));
    }
  }
  return out;
}

std::optional<WMorphism> find_isomorphism(const WajsbergAlgebra& a, const WajsbergAlgebra& b) {
  const PrimeDecomposition& dec_a = prime_decomposition(a);
  const PrimeDecomposition& dec_b = prime_decomposition(b);
  if (dec_a.factors.size() != dec_b.factors.size()) return std::nullopt;

  std::vector<std::size_t> order_a(dec_a.factors.size()), order_b(dec_b.factors.size());
  std::iota(order_a.begin(), order_a.end(), 0);
  std::iota(order_b.begin(), order_b.end(), 0);
  auto by_len = [](const PrimeDecomposition& dec) {
    return [&dec](std::size_t lhs, std::size_t rhs) {
      return dec.factors[lhs].chain_len < dec.factors[rhs].chain_len;
    };
  };
  std::sort(order_a.begin(), order_a.end(), by_len(dec_a));
  std::sort(order_b.begin(), order_b.end(), by_len(dec_b));
  for (std::size_t k = 0; k < order_a.size(); ++k)
    if (dec_a.factors[order_a[k]].chain_len != dec_b.factors[order_b[k]].chain_len)
      return std::nullopt;

  std::vector<int> map(static_cast<std::size_t>(a.size()));
  std::vector<int> profile(dec_b.factors.size());
  for (int x = 0; x < a.size(); ++x) {
    for (std::size_t k = 0; k < order_a.size(); ++k)
      profile[order_b[k]] = dec_a.factors[order_a[k]].rank[x];
    map[static_cast<std::size_t>(x)] = dec_b.element_of(profile);
  }
  return WMorphism{a, b, std::move(map)};
}

// ---------------------------------------------------------------------------
// Natural equivalence

std::vector<FilterMap> enumerate_objects(const BoolAlg& base, int n) {
  const std::vector<int> divisors = DivisorSet::of(n).divisors;
  std::vector<FilterMap> out;
  std::vector<std::uint64_t> masks(divisors.size(), 0);
  while (true) {
    FilterMap object{base, n, {}};
    for (std::size_t i = 0; i < divisors.size(); ++i)
      object.h.emplace(divisors[i], Filter{base.element(masks[i])});
    if (check_object(object).all_ok()) out.push_back(std::move(object));
    std::size_t i = 0;
    while (i < masks.size() && ++masks[i] == base.element_count()) {
      masks[i] = 0;
      ++i;
    }
    if (i == masks.size()) break;
  }
  return out;
}

EquivalenceSamples default_samples(int n, int max_algebra_size, int max_atoms) {
  EquivalenceSamples samples;
  samples.n = n;

  const std::vector<int> divisors = DivisorSet::of(n).divisors;
  std::vector<int> stack;
  auto emit = [&]() {
    std::vector<WajsbergAlgebra> chains;
    std::string name;
    for (int d : stack) {
      chains.push_back(lukasiewicz_chain(d));
      name += (name.empty() ? "L" : "xL") + std::to_string(d + 1);
    }
    samples.algebras.emplace_back(name, direct_product(chains));
  };
  // nondecreasing divisor tuples with product of chain sizes within the bound
  auto rec = [&](auto&& self, std::size_t min_index, int size) -> void {
    if (!stack.empty()) emit();
    for (std::size_t i = min_index; i < divisors.size(); ++i) {
      const int next = size * (divisors[i] + 1);
      if (next > max_algebra_size) continue;
      stack.push_back(divisors[i]);
      self(self, i, next);
      stack.pop_back();
    }
  };
  rec(rec, 0, 1);

  for (int m = 1; m <= max_atoms; ++m)
    for (FilterMap& object : enumerate_objects(BoolAlg(m), n)) {
      const std::string id = object_id(object);
      samples.algebras.emplace_back("M(" + id + ")", build_M(object).algebra());
      samples.objects.emplace_back(id, std::move(object));
    }
  return samples;
}

Report equivalence_suite(const EquivalenceSamples& samples) {
  Report report;
  const int n = samples.n;

  struct Prepared {
    std::string name;
    const WajsbergAlgebra* algebra;
    std::vector<MonotoneTuple> phi_tuples;
  };
  std::vector<Prepared> prepared;

  for (const auto& [name, algebra] : samples.algebras) {
    try {
      const FilterMap h_a = functor_B_obj(algebra, n);
      const MAlgebra m = build_M(h_a);

      std::vector<MonotoneTuple> tuples;
      std::vector<int> positions;
      tuples.reserve(static_cast<std::size_t>(algebra.size()));
      for (int x = 0; x < algebra.size(); ++x) {
        tuples.push_back(phi(algebra, n, x));
        positions.push_back(m.pos_of_tuple(tuples.back()));
      }

      bool in_m = true;
      for (int pos : positions)
        if (pos < 0) in_m = false;
      report.add(in_m, "theorem2.phi-in-M", name);
      if (!in_m) continue;

      std::vector<int> sorted = positions;
      std::sort(sorted.begin(), sorted.end());
      const bool injective =
          std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      report.add(injective, "theorem2.phi-injective", name);
      const bool bijective = injective && algebra.size() == m.size();
      report.add(bijective, "theorem2.phi-bijective", name,
                 bijective ? "" : "sizes " + std::to_string(algebra.size()) + " vs " +
                                      std::to_string(m.size()));

      const WMorphism morphism{algebra, m.algebra(), positions};
      report.add(morphism.is_homomorphism(), "theorem2.phi-homomorphism", name);

      bool inverse_left = true; // phi_inverse o phi = id on A
      for (int x = 0; x < algebra.size(); ++x)
        if (phi_inverse(algebra, n, tuples[static_cast<std::size_t>(x)]) != x)
          inverse_left = false;
      report.add(inverse_left, "theorem2.phi-inverse-left", name);

      bool inverse_right = true; // phi o phi_inverse = id on M
      for (int pos = 0; pos < m.size(); ++pos) {
        const MonotoneTuple f = m.tuple_of(pos);
        if (!(phi(algebra, n, phi_inverse(algebra, n, f)) == f)) inverse_right = false;
      }
      report.add(inverse_right, "theorem2.phi-inverse-right", name);

      prepared.push_back({name, &algebra, std::move(tuples)});
    } catch (const std::exception& error) {
      report.add(false, "theorem2.roundtrip", name, error.what());
    }
  }

  for (const auto& [name, object] : samples.objects) {
    try {
      report.merge(theorem3_check(object).report);
    } catch (const std::exception& error) {
      report.add(false, "theorem3.object", name, error.what());
    }
  }

  for (const Prepared& from : prepared)
    for (const Prepared& to : prepared) {
      const std::string subject = from.name + "->" + to.name;
      try {
        const FilterMap from_obj = functor_B_obj(*from.algebra, n);
        const FilterMap to_obj = functor_B_obj(*to.algebra, n);
        const std::vector<WMorphism> homs = enumerate_homs(
            *from.algebra, *to.algebra, samples.hom_cap, samples.hom_samples, samples.seed);
        bool commute = true;
        std::string detail = "homs=" + std::to_string(homs.size());
        for (std::size_t k = 0; k < homs.size() && commute; ++k) {
          const PairMorphism theta = skeleton_restriction(homs[k], from_obj, to_obj);
          for (int x = 0; x < from.algebra->size() && commute; ++x) {
            MonotoneTuple mapped = from.phi_tuples[static_cast<std::size_t>(x)];
            for (BoolElem& entry : mapped.entries) entry = theta.apply(entry);
            const MonotoneTuple& direct =
                to.phi_tuples[static_cast<std::size_t>(homs[k].map[static_cast<std::size_t>(x)])];
            if (!(mapped == direct)) {
              commute = false;
              detail = "square fails for hom #" + std::to_string(k) + " at x=" +
                       std::to_string(x);
            }
          }
        }
        report.add(commute, "naturality.square", subject, detail);
      } catch (const std::exception& error) {
        report.add(false, "naturality.square", subject, error.what());
      }
    }

  return report;
}

} // namespace mvdual
