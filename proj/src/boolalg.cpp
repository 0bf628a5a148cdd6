#include "mvdual/boolalg.hpp"

#include <stdexcept>

namespace mvdual {

namespace {

constexpr int kMaxAtoms = 20; // powerset carriers are enumerated; keep them sane

void require_same_algebra(BoolElem x, BoolElem y) {
  if (x.atom_count != y.atom_count)
    throw std::invalid_argument("boolean elements from algebras with " +
                                std::to_string(x.atom_count) + " and " +
                                std::to_string(y.atom_count) + " atoms");
}

} // namespace

BoolAlg::BoolAlg(int atom_count) : atom_count_(atom_count) {
  if (atom_count < 1 || atom_count > kMaxAtoms)
    throw std::invalid_argument("atom count must be in 1.." + std::to_string(kMaxAtoms));
}

BoolElem BoolAlg::atom(int i) const {
  if (i < 0 || i >= atom_count_) throw std::invalid_argument("atom index out of range");
  return {std::uint64_t{1} << i, atom_count_};
}

BoolElem BoolAlg::element(std::uint64_t atom_mask) const {
  if (atom_mask & ~universe()) throw std::invalid_argument("atom mask outside the algebra");
  return {atom_mask, atom_count_};
}

std::vector<BoolElem> BoolAlg::elements() const {
  std::vector<BoolElem> out;
  out.reserve(element_count());
  for (std::uint64_t mask = 0; mask <= universe(); ++mask) out.push_back({mask, atom_count_});
  return out;
}

BoolElem meet(BoolElem x, BoolElem y) {
  require_same_algebra(x, y);
  return {x.atoms & y.atoms, x.atom_count};
}

BoolElem join(BoolElem x, BoolElem y) {
  require_same_algebra(x, y);
  return {x.atoms | y.atoms, x.atom_count};
}

BoolElem complement(BoolElem x) {
  const std::uint64_t universe = (std::uint64_t{1} << x.atom_count) - 1;
  return {~x.atoms & universe, x.atom_count};
}

BoolElem imp(BoolElem x, BoolElem y) { return join(complement(x), y); }

bool leq(BoolElem x, BoolElem y) {
  require_same_algebra(x, y);
  return (x.atoms & ~y.atoms) == 0;
}

bool Filter::is_trivial() const {
  return generator.atoms == (std::uint64_t{1} << generator.atom_count) - 1;
}

bool Filter::is_improper() const { return generator.atoms == 0; }

Filter filter_join(const Filter& f, const Filter& g) { return {meet(f.generator, g.generator)}; }

std::vector<Filter> ultrafilters(const BoolAlg& algebra) {
  std::vector<Filter> out;
  out.reserve(algebra.atom_count());
  for (int i = 0; i < algebra.atom_count(); ++i) out.push_back({algebra.atom(i)});
  return out;
}

std::uint64_t stone_basis(BoolElem a) {
  // The ultrafilter at atom i contains a iff i is an atom of a.
  return a.atoms;
}

std::string to_string(BoolElem x) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < x.atom_count; ++i) {
    if (x.atoms >> i & 1) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

BoolElem parse_bool_elem(const std::string& text, int atom_count) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw std::invalid_argument("expected atom set like {0,2}, got '" + text + "'");
  BoolElem out{0, atom_count};
  std::string body = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find(',', pos);
    if (next == std::string::npos) next = body.size();
    const std::string item = body.substr(pos, next - pos);
    int atom = -1;
    try {
      atom = std::stoi(item);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad atom index '" + item + "'");
    }
    if (atom < 0 || atom >= atom_count)
      throw std::invalid_argument("atom index " + item + " outside 0.." +
                                  std::to_string(atom_count - 1));
    out.atoms |= std::uint64_t{1} << atom;
    pos = next + 1;
  }
  return out;
}

} // namespace mvdual
