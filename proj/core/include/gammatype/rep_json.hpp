#pragma once

#include <string>

#include "gammatype/rep.hpp"

namespace gammatype {

// {"logC": x, "sign": +-1, "d": x, "num": [[a, b], ...], "den": [[a, b], ...]}
std::string rep_to_json(const GammaTypeRep& rep, int indent = -1);

// Throws InvalidRep on malformed input.
GammaTypeRep rep_from_json(const std::string& text);

}  // namespace gammatype
