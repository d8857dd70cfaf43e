#pragma once

#include "fano/errors.hpp"
#include "fano/exact/multipoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace fano {

class ParseError : public InputError {
  public:
    ParseError(const std::string& message, std::size_t offset)
        : InputError(message + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

inline constexpr int kMaxParsedExponent = 64;

/// Parses a polynomial over Q in the declared variables.
///
/// Grammar: integer and rational literals (`-33`, `1/2`), declared variable names,
/// `+ - * ^`, parentheses, unary minus, and implicit multiplication between adjacent
/// factors (`2x^2y`). `^` binds tighter than `*`, which binds tighter than `+`/`-`.
/// Variable names are matched longest-first. Homogeneity is not checked here.
MultiPoly parse_poly(std::string_view text, const VarNames& vars);

}  // namespace fano
