#include "mvdual/chain.hpp"

#include <stdexcept>

namespace mvdual {

namespace {

void require_same_chain(ChainValue x, ChainValue y) {
  if (x.den != y.den)
    throw std::invalid_argument("chain values from incompatible chains: L_" +
                                std::to_string(x.den + 1) + " vs L_" + std::to_string(y.den + 1));
}

} // namespace

ChainValue::ChainValue(int num, int den) : num(num), den(den) {
  if (den < 1) throw std::invalid_argument("chain denominator must be positive");
  if (num < 0 || num > den)
    throw std::invalid_argument("chain numerator out of range: " + std::to_string(num) + "/" +
                                std::to_string(den));
}

ChainValue imp(ChainValue x, ChainValue y) {
  require_same_chain(x, y);
  const int n = x.den;
  return {std::min(n, n - x.num + y.num), n};
}

ChainValue neg(ChainValue x) { return {x.den - x.num, x.den}; }

bool leq(ChainValue x, ChainValue y) {
  require_same_chain(x, y);
  return x.num <= y.num;
}

ChainValue sigma(int j, ChainValue x) {
  const int n = x.den;
  if (j < 1 || j > n)
    throw std::invalid_argument("sigma index " + std::to_string(j) + " outside 1.." +
                                std::to_string(n));
  return {j + x.num > n ? n : 0, n};
}

ChainValue embed(ChainValue x, int n) {
  const int t = x.den;
  if (n < 1 || n % t != 0)
    throw std::invalid_argument("L_" + std::to_string(t + 1) + " does not embed in L_" +
                                std::to_string(n + 1));
  return {x.num * (n / t), n};
}

std::string to_string(ChainValue x) { return std::to_string(x.num) + "/" + std::to_string(x.den); }

ChainValue parse_chain_value(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("expected k/n, got '" + text + "'");
  try {
    const int num = std::stoi(text.substr(0, slash));
    const int den = std::stoi(text.substr(slash + 1));
    return {num, den};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("expected k/n, got '" + text + "'");
  }
}

} // namespace mvdual
