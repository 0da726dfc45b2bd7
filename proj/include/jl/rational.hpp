#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace jl {

/// Exact rational coefficient type. All arithmetic in the library is exact;
/// there is no floating point anywhere.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

/// Strict parser for rational literals of the form "-3/2", "7", "0".
/// Only ASCII digits, an optional leading ASCII '-', and a single '/' are
/// accepted; anything else (including a unicode minus sign) is rejected
/// with the offending byte offset.
Rat rat_from_string(std::string_view s);

}  // namespace jl
