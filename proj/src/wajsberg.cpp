#include "mvdual/wajsberg.hpp"

#include "mvdual/chain.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mvdual {

struct WajsbergAlgebra::Cache {
  std::mutex mutex;
  std::optional<PrimeDecomposition> decomposition;
  std::optional<BooleanSkeleton> skeleton;
  std::map<int, std::map<int, int>> yd; // n -> divisor -> y_d
};

WajsbergAlgebra::WajsbergAlgebra(int size, std::vector<int> imp_table, std::vector<int> neg_table,
                                 int top) {
  if (size < 1) throw std::invalid_argument("algebra size must be positive");
  if (imp_table.size() != static_cast<std::size_t>(size) * size)
    throw std::invalid_argument("imp table must have size*size entries");
  if (neg_table.size() != static_cast<std::size_t>(size))
    throw std::invalid_argument("neg table must have size entries");
  if (top < 0 || top >= size) throw std::invalid_argument("top element out of range");
  auto in_range = [size](int v) { return v >= 0 && v < size; };
  if (!std::all_of(imp_table.begin(), imp_table.end(), in_range) ||
      !std::all_of(neg_table.begin(), neg_table.end(), in_range))
    throw std::invalid_argument("operation table entry out of range");
  data_ = std::make_shared<const Data>(Data{size, std::move(imp_table), std::move(neg_table), top});
  cache_ = std::make_shared<Cache>();
}

int WajsbergAlgebra::power(int x, int m) const {
  if (m < 0) throw std::invalid_argument("negative power");
  int acc = top();
  for (int i = 0; i < m; ++i) acc = odot(acc, x);
  return acc;
}

WajsbergAlgebra lukasiewicz_chain(int n) {
  if (n < 1) throw std::invalid_argument("chain parameter must be positive");
  const int size = n + 1;
  std::vector<int> imp(static_cast<std::size_t>(size) * size);
  std::vector<int> neg(size);
  for (int x = 0; x <= n; ++x) {
    neg[x] = n - x;
    for (int y = 0; y <= n; ++y) imp[static_cast<std::size_t>(x) * size + y] = std::min(n, n - x + y);
  }
  return {size, std::move(imp), std::move(neg), n};
}

WajsbergAlgebra direct_product(const WajsbergAlgebra& a, const WajsbergAlgebra& b) {
  const int sa = a.size(), sb = b.size();
  const int size = sa * sb;
  std::vector<int> imp(static_cast<std::size_t>(size) * size);
  std::vector<int> neg(size);
  auto pack = [sa](int x, int y) { return x + sa * y; };
  for (int x = 0; x < sa; ++x)
    for (int y = 0; y < sb; ++y) {
      neg[pack(x, y)] = pack(a.neg(x), b.neg(y));
      for (int u = 0; u < sa; ++u)
        for (int v = 0; v < sb; ++v)
          imp[static_cast<std::size_t>(pack(x, y)) * size + pack(u, v)] =
              pack(a.imp(x, u), b.imp(y, v));
    }
  return {size, std::move(imp), std::move(neg), pack(a.top(), b.top())};
}

WajsbergAlgebra direct_product(const std::vector<WajsbergAlgebra>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  WajsbergAlgebra acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = direct_product(acc, factors[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Axiom checking

std::string AxiomViolation::describe() const {
  std::string out = "identity " + std::to_string(identity) + " fails at (x=" +
                    std::to_string(witness[0]);
  if (witness[1] >= 0) out += ", y=" + std::to_string(witness[1]);
  if (witness[2] >= 0) out += ", z=" + std::to_string(witness[2]);
  return out + ")";
}

namespace {

constexpr std::size_t kMaxViolations = 1000; // emptiness semantics unaffected

bool room(const std::vector<AxiomViolation>& v) { return v.size() < kMaxViolations; }

} // namespace

std::vector<AxiomViolation> check_axioms(const WajsbergAlgebra& a) {
  return check_axioms(a, AxiomCheckOptions{});
}

std::vector<AxiomViolation> check_axioms(const WajsbergAlgebra& a,
                                         const AxiomCheckOptions& options) {
  std::vector<AxiomViolation> out;
  const int s = a.size();
  const int top = a.top();

  for (int x = 0; x < s && room(out); ++x)
    if (a.imp(top, x) != x) out.push_back({1, {x, -1, -1}});

  for (int x = 0; x < s && room(out); ++x)
    for (int y = 0; y < s && room(out); ++y) {
      if (a.imp(a.imp(x, y), y) != a.imp(a.imp(y, x), x)) out.push_back({3, {x, y, -1}});
      if (a.imp(a.imp(a.neg(y), a.neg(x)), a.imp(x, y)) != top) out.push_back({4, {x, y, -1}});
    }

  auto id2 = [&](int x, int y, int z) {
    return a.imp(a.imp(x, y), a.imp(a.imp(y, z), a.imp(x, z))) == top;
  };
  const std::uint64_t triples = static_cast<std::uint64_t>(s) * s * s;
  if (triples <= options.exhaustive_triple_limit) {
    for (int x = 0; x < s && room(out); ++x)
      for (int y = 0; y < s && room(out); ++y)
        for (int z = 0; z < s && room(out); ++z)
          if (!id2(x, y, z)) out.push_back({2, {x, y, z}});
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> pick(0, s - 1);
    for (std::uint64_t i = 0; i < options.sample_count && room(out); ++i) {
      const int x = pick(rng), y = pick(rng), z = pick(rng);
      if (!id2(x, y, z)) out.push_back({2, {x, y, z}});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Filters and quotients

std::vector<ImplicativeFilter> implicative_filters(const WajsbergAlgebra& a) {
  std::vector<ImplicativeFilter> out;
  for (int x = 0; x < a.size(); ++x)
    if (a.is_idempotent(x)) out.push_back({x});
  return out;
}

QuotientAlgebra quotient(const WajsbergAlgebra& a, ImplicativeFilter f) {
  const int g = f.generator;
  if (g < 0 || g >= a.size() || !a.is_idempotent(g))
    throw std::invalid_argument("filter generator must be an idempotent element");
  if (g == a.bottom() && a.size() > 1)
    throw std::invalid_argument("quotient by the improper filter is disallowed");

  const int s = a.size();
  auto congruent = [&](int x, int y) { return a.leq(g, a.imp(x, y)) && a.leq(g, a.imp(y, x)); };

  std::vector<int> class_of(s, -1);
  std::vector<int> reps;
  for (int x = 0; x < s; ++x) {
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (congruent(x, reps[c])) {
        class_of[x] = static_cast<int>(c);
        break;
      }
    if (class_of[x] < 0) {
      class_of[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  }

  const int qs = static_cast<int>(reps.size());
  std::vector<int> imp(static_cast<std::size_t>(qs) * qs);
  std::vector<int> neg(qs);
  for (int cx = 0; cx < qs; ++cx) {
    neg[cx] = class_of[a.neg(reps[cx])];
    for (int cy = 0; cy < qs; ++cy)
      imp[static_cast<std::size_t>(cx) * qs + cy] = class_of[a.imp(reps[cx], reps[cy])];
  }
  QuotientAlgebra q{WajsbergAlgebra(qs, std::move(imp), std::move(neg), class_of[a.top()]),
                    std::move(class_of)};

  // projection must be a homomorphism; a failure means the filter does not
  // induce a congruence, i.e. the input tables are not a Wajsberg algebra
  for (int x = 0; x < s; ++x) {
    if (q.projection[a.neg(x)] != q.algebra.neg(q.projection[x]))
      throw std::runtime_error("quotient projection does not preserve neg");
    for (int y = 0; y < s; ++y)
      if (q.projection[a.imp(x, y)] != q.algebra.imp(q.projection[x], q.projection[y]))
        throw std::runtime_error("quotient projection does not preserve imp");
  }
  return q;
}

namespace {

bool totally_ordered(const WajsbergAlgebra& a) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = x + 1; y < a.size(); ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) return false;
  return true;
}

PrimeDecomposition compute_decomposition(const WajsbergAlgebra& a) {
  PrimeDecomposition out;
  for (const ImplicativeFilter& f : implicative_filters(a)) {
    if (f.generator == a.bottom() && a.size() > 1) continue; // improper
    if (a.size() == 1) continue;                             // trivial algebra has no primes
    QuotientAlgebra q = quotient(a, f);
    if (!totally_ordered(q.algebra)) continue;

    PrimeDecomposition::Factor factor;
    factor.filter = f;
    factor.chain_len = q.algebra.size() - 1;
    // rank of a class = how many classes lie strictly below it
    std::vector<int> class_rank(q.algebra.size(), 0);
    for (int c = 0; c < q.algebra.size(); ++c)
      for (int c2 = 0; c2 < q.algebra.size(); ++c2)
        if (c2 != c && q.algebra.leq(c2, c)) ++class_rank[c];
    factor.rank.resize(a.size());
    for (int x = 0; x < a.size(); ++x) factor.rank[x] = class_rank[q.projection[x]];
    out.factors.push_back(std::move(factor));
  }

  std::uint64_t radix = 1;
  out.strides.resize(out.factors.size());
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    out.strides[i] = radix;
    radix *= static_cast<std::uint64_t>(out.factors[i].chain_len) + 1;
  }
  if (radix != static_cast<std::uint64_t>(a.size()))
    throw std::runtime_error("subdirect decomposition failure: prime quotient profile is not "
                             "a bijection onto the product of chains");
  out.element_by_key.assign(radix, -1);
  for (int x = 0; x < a.size(); ++x) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < out.factors.size(); ++i)
      key += static_cast<std::uint64_t>(out.factors[i].rank[x]) * out.strides[i];
    if (out.element_by_key[key] != -1)
      throw std::runtime_error("subdirect decomposition failure: two elements share a profile");
    out.element_by_key[key] = x;
  }
  return out;
}

} // namespace

std::vector<int> PrimeDecomposition::profile(int x) const {
  std::vector<int> out(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) out[i] = factors[i].rank[x];
  return out;
}

int PrimeDecomposition::element_of(const std::vector<int>& profile) const {
  if (profile.size() != factors.size()) return -1;
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (profile[i] < 0 || profile[i] > factors[i].chain_len) return -1;
    key += static_cast<std::uint64_t>(profile[i]) * strides[i];
  }
  return element_by_key[key];
}

const PrimeDecomposition& prime_decomposition(const WajsbergAlgebra& a) {
  auto& cache = a.cache();
  std::lock_guard lock(cache.mutex);
  if (!cache.decomposition) cache.decomposition.emplace(compute_decomposition(a));
  return *cache.decomposition;
}

std::vector<ImplicativeFilter> prime_filters(const WajsbergAlgebra& a) {
  std::vector<ImplicativeFilter> out;
  for (const auto& factor : prime_decomposition(a).factors) out.push_back(factor.filter);
  return out;
}

bool is_n_plus_1_valued(const WajsbergAlgebra& a, int n) {
  if (n < 1) return false;
  for (const auto& factor : prime_decomposition(a).factors)
    if (n % factor.chain_len != 0) return false;
  return true;
}

std::vector<ImplicativeFilter> chi_d(const WajsbergAlgebra& a, int n, int d) {
  if (d < 1 || n % d != 0)
    throw std::invalid_argument(std::to_string(d) + " is not a divisor of " + std::to_string(n));
  std::vector<ImplicativeFilter> out;
  for (const auto& factor : prime_decomposition(a).factors) {
    if (n % factor.chain_len != 0)
      throw std::invalid_argument("algebra is not (n+1)-valued for n=" + std::to_string(n) +
                                  ": a prime quotient is the chain L_" +
                                  std::to_string(factor.chain_len + 1));
    if (factor.chain_len == d) out.push_back(factor.filter);
  }
  return out;
}

int sigma_op(const WajsbergAlgebra& a, int n, int j, int x) {
  if (j < 1 || j > n)
    throw std::invalid_argument("sigma index " + std::to_string(j) + " outside 1.." +
                                std::to_string(n));
  if (x < 0 || x >= a.size()) throw std::invalid_argument("element index out of range");
  const PrimeDecomposition& dec = prime_decomposition(a);
  std::vector<int> target(dec.factors.size());
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    const int c = dec.factors[i].chain_len;
    if (n % c != 0)
      throw std::invalid_argument("algebra is not (n+1)-valued for n=" + std::to_string(n));
    // [x]_P embedded in L_{n+1} is rank * n/c; sigma_j of it is 0 or 1
    const ChainValue value = sigma(j, ChainValue(dec.factors[i].rank[x] * (n / c), n));
    target[i] = value.is_one() ? c : 0;
  }
  const int result = dec.element_of(target);
  if (result < 0)
    throw std::runtime_error("sigma profile is not realized: subdirect decomposition failure");
  return result;
}

int find_xd(const WajsbergAlgebra& a, int n, int d) {
  if (d < 1 || n % d != 0)
    throw std::invalid_argument(std::to_string(d) + " is not a divisor of " + std::to_string(n));
  const PrimeDecomposition& dec = prime_decomposition(a);
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    if (n % dec.factors[i].chain_len != 0)
      throw std::invalid_argument("algebra is not (n+1)-valued for n=" + std::to_string(n));
    if (dec.factors[i].chain_len == d) targets.push_back(i);
  }
  if (targets.empty())
    throw std::invalid_argument("chi_" + std::to_string(d) + " is empty: no witness x_d exists");
  for (int x = 0; x < a.size(); ++x) {
    bool hit = true;
    for (std::size_t i : targets)
      if (dec.factors[i].rank[x] != d - 1) {
        hit = false;
        break;
      }
    if (hit) return x;
  }
  throw std::runtime_error("no x_d witness found: input is not an (n+1)-valued algebra");
}

int build_yd(const WajsbergAlgebra& a, int n, int d) {
  if (d < 1 || n < 1 || n % d != 0)
    throw std::invalid_argument(std::to_string(d) + " is not a divisor of " + std::to_string(n));
  {
    std::lock_guard lock(a.cache().mutex);
    auto by_n = a.cache().yd.find(n);
    if (by_n != a.cache().yd.end()) {
      auto it = by_n->second.find(d);
      if (it != by_n->second.end()) return it->second;
    }
  }
  int value;
  if (chi_d(a, n, d).empty()) {
    value = a.top();
  } else {
    const int xd = find_xd(a, n, d);
    value = a.join(xd, a.neg(a.power(xd, d - 1)));
  }
  std::lock_guard lock(a.cache().mutex);
  a.cache().yd[n][d] = value;
  return value;
}

// ---------------------------------------------------------------------------
// Boolean skeleton

BoolElem BooleanSkeleton::to_bool(int element) const {
  if (element < 0 || element >= static_cast<int>(atom_mask_of.size()) ||
      atom_mask_of[element] < 0)
    throw std::invalid_argument("element is not in the Boolean skeleton");
  return {static_cast<std::uint64_t>(atom_mask_of[element]), algebra.atom_count()};
}

int BooleanSkeleton::from_bool(BoolElem mask) const {
  if (mask.atom_count != algebra.atom_count())
    throw std::invalid_argument("mask belongs to a different Boolean algebra");
  for (int e : elements)
    if (static_cast<std::uint64_t>(atom_mask_of[e]) == mask.atoms) return e;
  throw std::invalid_argument("mask has no preimage in the skeleton");
}

bool BooleanSkeleton::contains(int element) const {
  return element >= 0 && element < static_cast<int>(atom_mask_of.size()) &&
         atom_mask_of[element] >= 0;
}

namespace {

BooleanSkeleton compute_skeleton(const WajsbergAlgebra& a) {
  std::vector<int> elements;
  for (int x = 0; x < a.size(); ++x)
    if (a.is_idempotent(x)) elements.push_back(x);

  const int bottom = a.bottom();
  std::vector<int> atoms;
  for (int e : elements) {
    if (e == bottom) continue;
    bool minimal = true;
    for (int e2 : elements)
      if (e2 != bottom && e2 != e && a.leq(e2, e)) {
        minimal = false;
        break;
      }
    if (minimal) atoms.push_back(e);
  }

  if (atoms.empty())
    throw std::invalid_argument("trivial algebra has an empty skeleton atom set");
  if (elements.size() != (std::size_t{1} << atoms.size()))
    throw std::runtime_error("idempotents do not form a Boolean algebra (corrupt tables)");

  BooleanSkeleton out{BoolAlg(static_cast<int>(atoms.size())), elements, atoms, {}};
  out.atom_mask_of.assign(a.size(), -1);
  std::vector<bool> seen(std::size_t{1} << atoms.size(), false);
  for (int e : elements) {
    int mask = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (a.leq(atoms[i], e)) mask |= 1 << i;
    if (seen[static_cast<std::size_t>(mask)])
      throw std::runtime_error("idempotents do not form a Boolean algebra (corrupt tables)");
    seen[static_cast<std::size_t>(mask)] = true;
    out.atom_mask_of[e] = mask;
  }

  // the atom-mask map must be an isomorphism of the Boolean structure
  for (int e1 : elements)
    for (int e2 : elements) {
      if (out.atom_mask_of[a.meet(e1, e2)] != (out.atom_mask_of[e1] & out.atom_mask_of[e2]) ||
          out.atom_mask_of[a.join(e1, e2)] != (out.atom_mask_of[e1] | out.atom_mask_of[e2]))
        throw std::runtime_error("skeleton lattice structure is not Boolean (corrupt tables)");
    }
  for (int e : elements)
    if (out.atom_mask_of[a.neg(e)] !=
        (~out.atom_mask_of[e] & static_cast<int>(out.algebra.universe())))
      throw std::runtime_error("skeleton negation is not Boolean complement (corrupt tables)");

  return out;
}

} // namespace

const BooleanSkeleton& boolean_skeleton(const WajsbergAlgebra& a) {
  auto& cache = a.cache();
  std::lock_guard lock(cache.mutex);
  if (!cache.skeleton) cache.skeleton.emplace(compute_skeleton(a));
  return *cache.skeleton;
}

} // namespace mvdual
