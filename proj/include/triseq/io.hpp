#ifndef TRISEQ_IO_HPP
#define TRISEQ_IO_HPP

#include <string>
#include <vector>

#include "triseq/exact.hpp"
#include "triseq/triangle_map.hpp"
#include "triseq/uniqueness.hpp"

namespace triseq {

// Accepts "p/q", plain integers, and decimal literals ("0.25" -> 1/4).
BigRational parse_rational(const std::string& text);

// Lowest-terms "p/q", or just "p" for integers.
std::string rational_to_string(const BigRational& r);

// "x,y" with rational components.
RationalPoint parse_point(const std::string& text);

// "xlo:xhi,ylo:yhi".
IntervalPoint parse_interval(const std::string& text);

// Comma- or newline-separated nonnegative integers, optional trailing "!"
// marking termination.
TriSequence parse_digits(const std::string& text);

std::string digits_to_string(const TriSequence& seq);

// "linear", "square", "prime", "pow2", "const:<c>", or "file:<path>" (the
// file holds digit text as above).
SequenceFamily parse_family(const std::string& spec);

// Fixed-width decimal with 12 significant digits, for SVG coordinates.
std::string svg_float(double v);

}  // namespace triseq

#endif
