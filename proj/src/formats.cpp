#include "mvdual/formats.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mvdual {

namespace {

std::string next_token(std::istream& in, const char* expected) {
  std::string token;
  if (!(in >> token)) throw ParseError(std::string("unexpected end of input, expected ") + expected);
  return token;
}

int keyed_int(std::istream& in, const std::string& key) {
  const std::string token = next_token(in, (key + "=<int>").c_str());
  if (token.rfind(key + "=", 0) != 0)
    throw ParseError("expected " + key + "=<int>, got '" + token + "'");
  try {
    return std::stoi(token.substr(key.size() + 1));
  } catch (const std::logic_error&) {
    throw ParseError("bad integer in '" + token + "'");
  }
}

int plain_int(std::istream& in, const char* context) {
  int value;
  if (!(in >> value)) throw ParseError(std::string("expected integer in ") + context);
  return value;
}

} // namespace

WajsbergAlgebra read_wajsberg(std::istream& in) {
  if (next_token(in, "'wajsberg'") != "wajsberg")
    throw ParseError("algebra file must start with 'wajsberg'");
  const int size = keyed_int(in, "size");
  const int top = keyed_int(in, "top");
  if (size < 1) throw ParseError("size must be positive");

  if (next_token(in, "'neg:'") != "neg:") throw ParseError("expected 'neg:' section");
  std::vector<int> neg(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) neg[static_cast<std::size_t>(i)] = plain_int(in, "neg table");

  if (next_token(in, "'imp:'") != "imp:") throw ParseError("expected 'imp:' section");
  std::vector<int> imp(static_cast<std::size_t>(size) * size);
  for (std::size_t i = 0; i < imp.size(); ++i) imp[i] = plain_int(in, "imp table");

  try {
    return {size, std::move(imp), std::move(neg), top};
  } catch (const std::invalid_argument& error) {
    throw ParseError(error.what());
  }
}

void write_wajsberg(std::ostream& out, const WajsbergAlgebra& a) {
  out << "wajsberg size=" << a.size() << " top=" << a.top() << "\n";
  out << "neg:";
  for (int x = 0; x < a.size(); ++x) out << ' ' << a.neg(x);
  out << "\nimp:\n";
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) out << (y ? " " : "") << a.imp(x, y);
    out << "\n";
  }
}

WajsbergAlgebra load_wajsberg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file: " + path);
  return read_wajsberg(in);
}

FilterMap read_pair(std::istream& in) {
  if (next_token(in, "'pair'") != "pair") throw ParseError("pair file must start with 'pair'");
  const int n = keyed_int(in, "n");
  const int atoms = keyed_int(in, "atoms");
  if (n < 1) throw ParseError("n must be positive");

  FilterMap object;
  try {
    object = FilterMap{BoolAlg(atoms), n, {}};
  } catch (const std::invalid_argument& error) {
    throw ParseError(error.what());
  }

  std::string token;
  while (in >> token) {
    if (token != "h") throw ParseError("expected 'h <d> = <atom set>', got '" + token + "'");
    const int d = plain_int(in, "divisor");
    if (d < 1 || n % d != 0)
      throw ParseError("h is defined on " + std::to_string(d) + ", which does not divide " +
                       std::to_string(n));
    if (next_token(in, "'='") != "=") throw ParseError("expected '=' after divisor");
    const std::string set_text = next_token(in, "generator atom set");
    BoolElem generator;
    try {
      generator = parse_bool_elem(set_text, atoms);
    } catch (const std::invalid_argument& error) {
      throw ParseError(error.what());
    }
    if (!object.h.emplace(d, Filter{generator}).second)
      throw ParseError("duplicate filter for divisor " + std::to_string(d));
  }
  for (int d : DivisorSet::of(n).divisors)
    if (!object.h.count(d)) throw ParseError("pair file is missing divisor " + std::to_string(d));
  return object;
}

void write_pair(std::ostream& out, const FilterMap& object) {
  out << "pair n=" << object.n << " atoms=" << object.base.atom_count() << "\n";
  for (const auto& [d, filter] : object.h)
    out << "h " << d << " = " << to_string(filter.generator) << "\n";
}

FilterMap load_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open pair file: " + path);
  return read_pair(in);
}

std::string to_string(const MonotoneTuple& f) {
  std::string out = "[";
  for (int i = 1; i <= f.size(); ++i) {
    if (i > 1) out += ',';
    out += to_string(f(i));
  }
  return out + "]";
}

MonotoneTuple parse_monotone_tuple(const std::string& text, int atom_count) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("expected tuple like [{0},{0,1}], got '" + text + "'");
  MonotoneTuple out;
  std::size_t pos = 1;
  const std::size_t end = text.size() - 1;
  while (pos < end) {
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] != '{') throw ParseError("expected '{' at position " + std::to_string(pos));
    const std::size_t close = text.find('}', pos);
    if (close == std::string::npos) throw ParseError("unterminated atom set in tuple");
    try {
      out.entries.push_back(parse_bool_elem(text.substr(pos, close - pos + 1), atom_count));
    } catch (const std::invalid_argument& error) {
      throw ParseError(error.what());
    }
    pos = close + 1;
  }
  return out;
}

} // namespace mvdual
