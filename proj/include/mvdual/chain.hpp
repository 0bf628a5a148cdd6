#pragma once

#include <string>

namespace mvdual {

/** Element num/den of the Lukasiewicz chain L_{den+1} = {0, 1/den, ..., 1}.
    Stored as an exact integer pair; values of different chains never mix. */
struct ChainValue {
  int num = 0;
  int den = 1;

  ChainValue() = default;
  ChainValue(int num, int den);

  bool is_zero() const { return num == 0; }
  bool is_one() const { return num == den; }

  friend bool operator==(const ChainValue&, const ChainValue&) = default;
};

/// x -> y := min(1, 1 - x + y).
ChainValue imp(ChainValue x, ChainValue y);

/// ~x := 1 - x.
ChainValue neg(ChainValue x);

/// x <= y in the natural order (equivalently imp(x, y) = 1).
bool leq(ChainValue x, ChainValue y);

/** The j-th modal operator on L_{n+1}: sigma(j, k/n) = 1 iff j + k > n,
    else 0. Boolean-valued; requires 1 <= j <= n. */
ChainValue sigma(int j, ChainValue x);

/** The unique embedding of L_{t+1} into L_{n+1}; exists iff t divides n.
    Maps k/t to (k*n/t)/n and preserves imp and neg. */
ChainValue embed(ChainValue x, int n);

std::string to_string(ChainValue x); // "k/n"
ChainValue parse_chain_value(const std::string& text);

} // namespace mvdual
