#pragma once

#include <string>
#include <vector>

#include "klmasks/heap.hpp"
#include "klmasks/mask.hpp"

namespace klmasks {

// One text row per level, top first; columns 1..n-1 separated by spaces.
// marks[j] is drawn at entry j and '.' at empty lattice points.
std::string render_ascii(const Heap& h, const std::vector<char>& marks);
// Entries drawn as '*'.
std::string render_heap_ascii(const Heap& h);
// Overlay with '1' plain-one, '0' plain-zero, 'D' zero-defect, 'd' one-defect.
std::string render_mask_ascii(const Mask& m);

// Dots at the entries and, when a mask is given, one polyline per strand.
std::string render_heap_svg(const Heap& h);
std::string render_mask_svg(const Mask& m);

}  // namespace klmasks
