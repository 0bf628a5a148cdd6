#include "mvdual/stone.hpp"

#include <sstream>
#include <stdexcept>

namespace mvdual {

ValuedBooleanSpace space_of(const FilterMap& object) {
  if (!check_object(object).all_ok())
    throw std::invalid_argument("space_of requires a valid B^{n+1} object");
  ValuedBooleanSpace space{object.n, object.base.atom_count(), {}};
  // delta(h(d)) = intersection of the basis sets over the filter = s(generator)
  for (const auto& [d, filter] : object.h) space.h_top.emplace(d, stone_basis(filter.generator));
  return space;
}

Report check_valued_map(const ValuedBooleanSpace& space, const ValuedMap& f) {
  if (f.n != space.n) throw std::invalid_argument("valued map and space disagree on n");
  if (f.numerators.size() != static_cast<std::size_t>(space.point_count))
    throw std::invalid_argument("valued map defined on the wrong number of points");
  for (int value : f.numerators)
    if (value < 0 || value > space.n)
      throw std::invalid_argument("valued map numerator outside 0..n");

  Report report;
  for (const auto& [d, points] : space.h_top) {
    const int step = space.n / d; // L_{d+1} inside L_{n+1} = multiples of n/d
    for (int p = 0; p < space.point_count; ++p) {
      if (!(points >> p & 1)) continue;
      const bool ok = f.numerators[static_cast<std::size_t>(p)] % step == 0;
      report.add(ok, "valued-map.divisor-restriction",
                 "point=" + std::to_string(p) + ",d=" + std::to_string(d),
                 ok ? ""
                    : "value " + to_string(f.at(p)) + " is not in L_" + std::to_string(d + 1));
    }
  }
  return report;
}

ValuedMap psi(const FilterMap& object, const MonotoneTuple& g) {
  MembershipFailure failure;
  if (!in_M(object, g, &failure))
    throw std::invalid_argument("tuple lies outside M(B,h): xi(d=" + std::to_string(failure.d) +
                                ",q=" + std::to_string(failure.q) + ") is not in h(d)");
  const int n = object.n;
  ValuedMap out{n, std::vector<int>(static_cast<std::size_t>(object.base.atom_count()), 0)};
  for (int p = 0; p < object.base.atom_count(); ++p) {
    const auto in_s = [&](int i) { return (stone_basis(g(i)) >> p & 1) != 0; };
    int numerator = 0;
    if (in_s(1)) {
      numerator = n;
    } else if (!in_s(n)) {
      numerator = 0;
    } else {
      for (int k = 1; k <= n - 1; ++k)
        if (in_s(n - k + 1) && !in_s(n - k)) {
          numerator = k;
          break;
        }
    }
    out.numerators[static_cast<std::size_t>(p)] = numerator;
  }
  if (!check_valued_map(space_of(object), out).all_ok())
    throw std::runtime_error("psi image violates the valued-map invariant");
  return out;
}

MonotoneTuple psi_inverse(const FilterMap& object, const ValuedMap& f) {
  const ValuedBooleanSpace space = space_of(object);
  const Report invariant = check_valued_map(space, f);
  if (!invariant.all_ok()) {
    for (const auto& line : invariant.lines())
      if (!line.ok)
        throw std::invalid_argument("not a valued map for this space: " + line.subject + " (" +
                                    line.detail + ")");
  }

  const int n = object.n;
  MonotoneTuple tuple;
  tuple.entries.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    // s(a_j) = f^{-1}(A_j) with A_j = {(n-j+1)/n, ..., 1}
    std::uint64_t mask = 0;
    for (int p = 0; p < space.point_count; ++p)
      if (f.numerators[static_cast<std::size_t>(p)] >= n - j + 1) mask |= std::uint64_t{1} << p;
    tuple.entries.push_back(object.base.element(mask));
  }

  if (!tuple.is_monotone())
    throw std::runtime_error("psi_inverse produced a non-monotone tuple");
  MembershipFailure failure;
  if (!in_M(object, tuple, &failure))
    throw std::runtime_error("psi_inverse image violates xi(d=" + std::to_string(failure.d) +
                             ",q=" + std::to_string(failure.q) + ")");
  return tuple;
}

std::vector<ValuedMap> all_valued_maps(const ValuedBooleanSpace& space) {
  const int n = space.n;
  std::vector<std::vector<int>> allowed(static_cast<std::size_t>(space.point_count));
  for (int p = 0; p < space.point_count; ++p)
    for (int k = 0; k <= n; ++k) {
      bool ok = true;
      for (const auto& [d, points] : space.h_top)
        if ((points >> p & 1) && k % (n / d) != 0) ok = false;
      if (ok) allowed[static_cast<std::size_t>(p)].push_back(k);
    }

  std::vector<ValuedMap> out;
  std::vector<std::size_t> odometer(static_cast<std::size_t>(space.point_count), 0);
  while (true) {
    ValuedMap f{n, std::vector<int>(static_cast<std::size_t>(space.point_count))};
    for (int p = 0; p < space.point_count; ++p)
      f.numerators[static_cast<std::size_t>(p)] =
          allowed[static_cast<std::size_t>(p)][odometer[static_cast<std::size_t>(p)]];
    out.push_back(std::move(f));
    int p = space.point_count - 1; // last point varies fastest: lexicographic order
    while (p >= 0 && ++odometer[static_cast<std::size_t>(p)] == allowed[static_cast<std::size_t>(p)].size()) {
      odometer[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
  }
  return out;
}

std::string to_string(const ValuedMap& f) {
  std::ostringstream out;
  for (std::size_t p = 0; p < f.numerators.size(); ++p)
    out << p << ": " << f.numerators[p] << "/" << f.n << "\n";
  return out.str();
}

ValuedMap parse_valued_map(const std::string& text, int n, int point_count) {
  ValuedMap out{n, std::vector<int>(static_cast<std::size_t>(point_count), -1)};
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("expected '<point>: k/n', got '" + line + "'");
    const int point = std::stoi(line.substr(0, colon));
    if (point < 0 || point >= point_count)
      throw std::invalid_argument("point index out of range in '" + line + "'");
    const ChainValue value = parse_chain_value(line.substr(colon + 1));
    if (value.den != n) throw std::invalid_argument("value denominator differs from n");
    out.numerators[static_cast<std::size_t>(point)] = value.num;
  }
  for (int v : out.numerators)
    if (v < 0) throw std::invalid_argument("valued map is missing a point");
  return out;
}

} // namespace mvdual
