#pragma once
#include <stdexcept>
#include <string>

namespace nullplane {

// Base class for everything this library throws on its own behalf.
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic between series of different truncation orders.
struct OrderMismatchError : EngineError {
  OrderMismatchError(int lhs, int rhs)
      : EngineError("truncation order mismatch: " + std::to_string(lhs) +
                    " vs " + std::to_string(rhs)),
        lhs_order(lhs), rhs_order(rhs) {}
  int lhs_order;
  int rhs_order;
};

// Malformed .algdef input or expression text; carries a source location.
struct ParseError : EngineError {
  ParseError(std::string msg, int line_, int col_)
      : EngineError(std::move(msg) + " (line " + std::to_string(line_) +
                    ", column " + std::to_string(col_)),
        line(line_), col(col_) {}
  int line;
  int col;
};

} // namespace nullplane
