#ifndef IPD_IO_HPP
#define IPD_IO_HPP

#include <string>
#include <string_view>

#include "ipd/dissection.hpp"
#include "ipd/poset.hpp"

namespace ipd {

// {"n": <int>, "intervals": [[lo, hi], ...]} sorted by (lo, hi).
std::string poset_to_json(const IntervalPoset &P);
IntervalPoset poset_from_json(std::string_view text);

// {"m": <int>, "diagonals": [[i, j], ...]} sorted lexicographically.
std::string dissection_to_json(const Dissection &D);
Dissection dissection_from_json(std::string_view text);

/// Vertex k sits at angle 90 - 360 (k-1)/m degrees on a circle centred in a
/// 512x512 viewport. Byte-stable for a given dissection.
std::string render_svg(const Dissection &D);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

} // namespace ipd

#endif
