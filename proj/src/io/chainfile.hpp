#pragma once

#include <string>

#include "maps/maps.hpp"

namespace acs {

// Chain files store the generators of every step — affine coefficients, the
// gluing line with its two affine pieces, or the fan domain with outside map
// and apex relocation — as exact rational strings.  Parsing reconstructs each
// step through the validating constructors, so parse(serialize(c)) == c bit
// for bit and a parsed chain is always a valid plane homeomorphism.
std::string serialize_chain(const Chain& c);
Chain parse_chain(const std::string& text);
Chain load_chain(const std::string& path);
void save_chain(const Chain& c, const std::string& path);

}  // namespace acs
