#pragma once

#include <string>

#include "djsense/types.hpp"

namespace djsense {

/* Binary file formats, all little-endian, bit-exact:
 *
 *   MCK1: "MCK1" | u32 C | u32 H | u32 W | C*H*W * (f32 re, f32 im),
 *         coil-major then row-major.
 *   MSK1: "MSK1" | u32 H | u32 W | u32 acs_width | W bytes (0/1 per column).
 */

void write_mck(const MulticoilKSpace &data, const std::string &path);
MulticoilKSpace read_mck(const std::string &path);

void write_mask(const SamplingMask &mask, const std::string &path);
SamplingMask read_mask(const std::string &path);

}  // namespace djsense
