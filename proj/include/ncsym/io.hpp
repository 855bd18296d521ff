#pragma once

// Text and JSON encodings of NCSym elements and tensors.
//
// Text:  "(1.24.3) - (1.23.4) - (1.2.34)", terms in leading-term order; a lone
//        term with coefficient 1 prints bare ("1.23"); zero prints "0"; the
//        empty partition prints as "∅".
// JSON:  {"terms":[{"coeff":"-1","partition":[[1],[2,3]]}, ...]}, terms sorted
//        by extended partition text, coefficients as decimal strings.

#include <string>
#include <string_view>

#include <json.hpp>

#include "ncsym/hopf.hpp"

namespace ncsym::io {

using json = nlohmann::json;

std::string formatElement(const Element& x);
Element parseElement(std::string_view text);

std::string formatTensor(const TensorElement& x);
TensorElement parseTensor(std::string_view text);

json blocksToJson(const std::vector<Block>& blocks);
std::vector<Block> blocksFromJson(const json& j);

json toJson(const Element& x);
Element elementFromJson(const json& j);

/// {"terms":[{"coeff":..,"left":[[..]],"right":[[..]]}]}
json toJson(const TensorElement& x);
TensorElement tensorFromJson(const json& j);

}  // namespace ncsym::io
