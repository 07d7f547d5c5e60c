#ifndef YKIT_JSON_IO_HPP
#define YKIT_JSON_IO_HPP

// Canonical JSON serialization for the exact types.  Conventions:
//   - Rational          "p/q" string ("p" when the denominator is 1), so no
//                       consumer can silently lose precision;
//   - Polynomial        array of coefficient strings, lowest degree first,
//                       e.g. u - 1/2  ->  ["-1/2","1"];
//   - RationalFunction  {"num": [...], "den": [...]} of coefficient arrays;
//   - DrinfeldTuple     {"polys": [entry, ...]} where each entry is an array
//                       of factor polynomials whose product is the stored
//                       monic polynomial; emission always writes exactly one
//                       canonical factor, e.g. (u-1/2, 1) ->
//                       {"polys":[[["-1/2","1"]],[["1"]]]};
//   - TRep              {"kind","dim","desc","entries"} with entries[p][q]
//                       the dim x dim generator block for the (p,q)-th label
//                       pair in label order, each entry a RationalFunction;
//   - weight tuple      {"kind","lambda":[rf, ...]} in label order.
//
// Emission is deterministic (keys sorted, two-space indentation, trailing
// newline); loading reproduces the object exactly.  Parsers throw
// std::invalid_argument with a path-annotated message on malformed input.

#include <string>
#include <vector>

#include "ykit/drinfeld.hpp"
#include "ykit/hw.hpp"
#include "ykit/polynomial.hpp"
#include "ykit/rational.hpp"
#include "ykit/rational_function.hpp"
#include "ykit/trep.hpp"

namespace ykit {

std::string polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const std::string& text);

std::string rational_function_to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const std::string& text);

std::string drinfeld_to_json(const DrinfeldTuple& t);
DrinfeldTuple drinfeld_from_json(const std::string& text);

std::string trep_to_json(const TRep& rep);
TRep trep_from_json(const std::string& text);

std::string weights_to_json(const HighestWeightData& hw);
HighestWeightData weights_from_json(const std::string& text);

// Whole-file helpers; throw std::runtime_error on I/O failure.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace ykit

#endif  // YKIT_JSON_IO_HPP
