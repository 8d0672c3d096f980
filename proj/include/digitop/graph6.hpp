#pragma once

#include <string>
#include <string_view>

#include "digitop/image.hpp"

namespace digitop {

/// Parses one line of standard graph6 (header byte(s) N(n), then the
/// upper-triangle bit vector in 6-bit groups offset by 63). Throws
/// ParseError with the offending byte offset on malformed input.
DigitalImage parse_graph6(std::string_view line);

/// Standard graph6 encoding of X in its current vertex order.
std::string write_graph6(const DigitalImage& X);

/// Plain adjacency-list text: first line "n", then one "i j" pair per
/// edge, 0-based, whitespace-separated; '#' starts a comment.
DigitalImage parse_adjacency_list(std::string_view text);
std::string write_adjacency_list(const DigitalImage& X);

/// Reads an image file, sniffing the format: lines beginning with a digit
/// or '#' are treated as adjacency-list text, anything else as graph6.
DigitalImage read_image_file(const std::string& path);

} // namespace digitop
