#include "mvdual/pairs.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace mvdual {

DivisorSet DivisorSet::of(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  DivisorSet out{n, {}};
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.divisors.push_back(d);
  return out;
}

bool DivisorSet::contains(int d) const { return d >= 1 && n % d == 0; }

const Filter& FilterMap::at(int d) const {
  auto it = h.find(d);
  if (it == h.end())
    throw std::invalid_argument("no filter assigned to divisor " + std::to_string(d));
  return it->second;
}

bool MonotoneTuple::is_monotone() const {
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (!leq(entries[i - 1], entries[i])) return false;
  return true;
}

MonotoneTuple constant_tuple(const BoolAlg& base, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("constant index outside 0..n");
  MonotoneTuple f;
  f.entries.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) f.entries.push_back(i >= n + 1 - k ? base.top() : base.bottom());
  return f;
}

MonotoneTuple diagonal_tuple(const BoolAlg& base, int n, BoolElem a) {
  if (a.atom_count != base.atom_count())
    throw std::invalid_argument("element belongs to a different algebra");
  MonotoneTuple f;
  f.entries.assign(static_cast<std::size_t>(n), a);
  return f;
}

MonotoneTuple tuple_imp(const MonotoneTuple& f, const MonotoneTuple& g) {
  const int n = f.size();
  if (g.size() != n) throw std::invalid_argument("tuples of different length");
  MonotoneTuple out;
  out.entries.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    BoolElem acc = imp(f(1), g(k)); // i = 1 term
    for (int i = 2; i <= n - k + 1; ++i) acc = meet(acc, imp(f(i), g(i + k - 1)));
    out.entries.push_back(acc);
  }
  return out;
}

MonotoneTuple tuple_neg(const MonotoneTuple& f) {
  const int n = f.size();
  MonotoneTuple out;
  out.entries.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out.entries.push_back(complement(f(n + 1 - k)));
  return out;
}

int q_index(int d, int j, int n) {
  if (n < 1 || d < 1 || n % d != 0)
    throw std::invalid_argument(std::to_string(d) + " is not a divisor of " + std::to_string(n));
  if (j < 1 || j > n) throw std::invalid_argument("position outside 1..n");
  return (j * d + n - 1) / n; // least q with j <= q*n/d
}

BoolElem xi(int d, int q, const MonotoneTuple& f) {
  const int n = f.size();
  if (n < 1 || d < 1 || n % d != 0)
    throw std::invalid_argument(std::to_string(d) + " is not a divisor of " + std::to_string(n));
  if (q < 1 || q > d) throw std::invalid_argument("block index outside 1..d");
  const int width = n / d;
  return imp(f(q * width), f((q - 1) * width + 1));
}

// ---------------------------------------------------------------------------
// B^[n]

namespace {

// digit of an index: digits[i] = number of positions containing atom i
std::vector<int> digits_of(int index, int m, int n) {
  std::vector<int> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    out[static_cast<std::size_t>(i)] = index % (n + 1);
    index /= n + 1;
  }
  return out;
}

MonotoneTuple tuple_from_digits(const BoolAlg& base, int n, const std::vector<int>& digits) {
  MonotoneTuple f;
  f.entries.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::uint64_t mask = 0;
    for (int a = 0; a < base.atom_count(); ++a)
      if (i >= n + 1 - digits[static_cast<std::size_t>(a)]) mask |= std::uint64_t{1} << a;
    f.entries.push_back(base.element(mask));
  }
  return f;
}

WajsbergAlgebra build_bn_tables(const BoolAlg& base, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const int m = base.atom_count();
  std::uint64_t size64 = 1;
  for (int i = 0; i < m; ++i) size64 *= static_cast<std::uint64_t>(n) + 1;
  if (size64 > 4096) // the operation tables are materialized in full
    throw std::invalid_argument("B^[n] carrier too large to materialize: (n+1)^m = " +
                                std::to_string(size64));
  const int size = static_cast<int>(size64);

  std::vector<MonotoneTuple> tuples;
  tuples.reserve(static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x)
    tuples.push_back(tuple_from_digits(base, n, digits_of(x, m, n)));

  auto index_of_digits = [&](const std::vector<int>& digits) {
    int index = 0;
    for (int i = m - 1; i >= 0; --i) index = index * (n + 1) + digits[static_cast<std::size_t>(i)];
    return index;
  };
  auto index_of_tuple = [&](const MonotoneTuple& f) {
    std::vector<int> digits(static_cast<std::size_t>(m), 0);
    for (int i = 1; i <= n; ++i)
      for (int a = 0; a < m; ++a)
        if (f(i).atoms >> a & 1) ++digits[static_cast<std::size_t>(a)];
    return index_of_digits(digits);
  };

  std::vector<int> imp_table(static_cast<std::size_t>(size) * size);
  std::vector<int> neg_table(size);
  for (int x = 0; x < size; ++x) {
    neg_table[x] = index_of_tuple(tuple_neg(tuples[static_cast<std::size_t>(x)]));
    for (int y = 0; y < size; ++y)
      imp_table[static_cast<std::size_t>(x) * size + y] =
          index_of_tuple(tuple_imp(tuples[static_cast<std::size_t>(x)],
                                   tuples[static_cast<std::size_t>(y)]));
  }
  return {size, std::move(imp_table), std::move(neg_table), size - 1};
}

} // namespace

BnAlgebra::BnAlgebra(BoolAlg base, int n)
    : base_(base), n_(n), algebra_(build_bn_tables(base, n)) {}

MonotoneTuple BnAlgebra::tuple_at(int index) const {
  if (index < 0 || index >= size()) throw std::invalid_argument("element index out of range");
  return tuple_from_digits(base_, n_, digits_of(index, base_.atom_count(), n_));
}

int BnAlgebra::index_of(const MonotoneTuple& f) const {
  if (f.size() != n_) throw std::invalid_argument("tuple length differs from n");
  for (const BoolElem& e : f.entries)
    if (e.atom_count != base_.atom_count())
      throw std::invalid_argument("tuple entries belong to a different algebra");
  if (!f.is_monotone()) throw std::invalid_argument("tuple is not monotone");
  std::vector<int> digits(static_cast<std::size_t>(base_.atom_count()), 0);
  for (int i = 1; i <= n_; ++i)
    for (int a = 0; a < base_.atom_count(); ++a)
      if (f(i).atoms >> a & 1) ++digits[static_cast<std::size_t>(a)];
  int index = 0;
  for (int i = base_.atom_count() - 1; i >= 0; --i)
    index = index * (n_ + 1) + digits[static_cast<std::size_t>(i)];
  return index;
}

int BnAlgebra::constant(int k) const {
  if (k < 0 || k > n_) throw std::invalid_argument("constant index outside 0..n");
  int index = 0;
  for (int i = 0; i < base_.atom_count(); ++i) index = index * (n_ + 1) + k;
  return index;
}

BnAlgebra build_Bn(const BoolAlg& base, int n) { return {base, n}; }

// ---------------------------------------------------------------------------
// Objects <B, h> and M(B, h)

Report check_object(const FilterMap& object) {
  Report report;
  const DivisorSet div = DivisorSet::of(object.n);

  for (const auto& [d, filter] : object.h) {
    if (!div.contains(d))
      throw std::invalid_argument("h is defined on " + std::to_string(d) +
                                  ", which does not divide " + std::to_string(object.n));
    if (filter.generator.atom_count != object.base.atom_count())
      throw std::invalid_argument("filter generator belongs to a different algebra");
  }
  for (int d : div.divisors)
    if (!object.h.count(d))
      throw std::invalid_argument("h is missing divisor " + std::to_string(d));

  report.add(object.at(object.n).is_trivial(), "object.h-n-trivial", "d=" + std::to_string(object.n),
             object.at(object.n).is_trivial()
                 ? ""
                 : "h(n) = " + to_string(object.at(object.n).generator) + " but must be {1}");
  for (int d : div.divisors)
    for (int r : div.divisors) {
      if (d > r) continue;
      const int g = std::gcd(d, r);
      const Filter joined = filter_join(object.at(d), object.at(r));
      const bool ok = object.at(g) == joined;
      report.add(ok, "object.gcd-law", "(d=" + std::to_string(d) + ",r=" + std::to_string(r) + ")",
                 ok ? ""
                    : "h(" + std::to_string(g) + ") generated by " +
                          to_string(object.at(g).generator) + " but h(d) v h(r) is generated by " +
                          to_string(joined.generator));
    }
  return report;
}

bool in_M(const FilterMap& object, const MonotoneTuple& f, MembershipFailure* failure) {
  const int n = object.n;
  if (f.size() != n) throw std::invalid_argument("tuple length differs from n");
  for (int d : DivisorSet::of(n).divisors) {
    const Filter& filter = object.at(d);
    for (int q = 1; q <= d; ++q)
      if (!filter.contains(xi(d, q, f))) {
        if (failure) *failure = {d, q};
        return false;
      }
  }
  return true;
}

struct MAlgebra::LazyTable {
  std::mutex mutex;
  std::optional<WajsbergAlgebra> table;
};

MAlgebra::MAlgebra(FilterMap object, std::shared_ptr<const BnAlgebra> ambient)
    : object_(std::move(object)), ambient_(std::move(ambient)),
      table_(std::make_shared<LazyTable>()) {
  if (object_.base != ambient_->base() || object_.n != ambient_->n())
    throw std::invalid_argument("object and ambient algebra disagree on base or n");
  Report object_report = check_object(object_);
  if (!object_report.all_ok()) {
    std::string detail;
    for (const auto& line : object_report.lines())
      if (!line.ok) {
        detail = line.law + " " + line.subject;
        break;
      }
    throw std::invalid_argument("not a B^{n+1} object: " + detail);
  }

  pos_of_.assign(static_cast<std::size_t>(ambient_->size()), -1);
  for (int x = 0; x < ambient_->size(); ++x)
    if (in_M(object_, ambient_->tuple_at(x))) {
      pos_of_[static_cast<std::size_t>(x)] = static_cast<int>(members_.size());
      members_.push_back(x);
    }

  // Corollary-1 obligations, re-verified: closure under neg and imp, plus the
  // chain of constants.
  const WajsbergAlgebra& ambient_alg = ambient_->algebra();
  for (int x : members_) {
    if (pos_of_[static_cast<std::size_t>(ambient_alg.neg(x))] < 0)
      throw std::runtime_error("M(B,h) is not closed under negation");
    for (int y : members_)
      if (pos_of_[static_cast<std::size_t>(ambient_alg.imp(x, y))] < 0)
        throw std::runtime_error("M(B,h) is not closed under implication");
  }
  for (int k = 0; k <= object_.n; ++k)
    if (pos_of_[static_cast<std::size_t>(ambient_->constant(k))] < 0)
      throw std::runtime_error("M(B,h) is missing the constant c_" + std::to_string(k));
}

bool MAlgebra::contains_ambient(int ambient_index) const {
  return pos_of_ambient(ambient_index) >= 0;
}

int MAlgebra::pos_of_ambient(int ambient_index) const {
  if (ambient_index < 0 || ambient_index >= ambient_->size()) return -1;
  return pos_of_[static_cast<std::size_t>(ambient_index)];
}

MonotoneTuple MAlgebra::tuple_of(int pos) const {
  if (pos < 0 || pos >= size()) throw std::invalid_argument("member position out of range");
  return ambient_->tuple_at(members_[static_cast<std::size_t>(pos)]);
}

int MAlgebra::pos_of_tuple(const MonotoneTuple& f) const {
  return pos_of_ambient(ambient_->index_of(f));
}

const WajsbergAlgebra& MAlgebra::algebra() const {
  std::lock_guard lock(table_->mutex);
  if (!table_->table) {
    const WajsbergAlgebra& ambient_alg = ambient_->algebra();
    const int s = size();
    std::vector<int> imp_table(static_cast<std::size_t>(s) * s);
    std::vector<int> neg_table(static_cast<std::size_t>(s));
    for (int x = 0; x < s; ++x) {
      neg_table[static_cast<std::size_t>(x)] =
          pos_of_[static_cast<std::size_t>(ambient_alg.neg(members_[static_cast<std::size_t>(x)]))];
      for (int y = 0; y < s; ++y)
        imp_table[static_cast<std::size_t>(x) * s + y] = pos_of_[static_cast<std::size_t>(
            ambient_alg.imp(members_[static_cast<std::size_t>(x)], members_[static_cast<std::size_t>(y)]))];
    }
    table_->table.emplace(s, std::move(imp_table), std::move(neg_table),
                          pos_of_[static_cast<std::size_t>(ambient_alg.top())]);
  }
  return *table_->table;
}

MAlgebra build_M(const FilterMap& object) {
  return {object, std::make_shared<BnAlgebra>(object.base, object.n)};
}

MAlgebra build_M(const FilterMap& object, std::shared_ptr<const BnAlgebra> ambient) {
  return {object, std::move(ambient)};
}

} // namespace mvdual
