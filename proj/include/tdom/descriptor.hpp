#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "tdom/graph.hpp"

namespace tdom {

// Graph descriptor mini-language:
//   K[a,b]                  one multipartite factor
//   K[1,2]xK[1,3]xK[1,5]    direct product ('x'-separated)
//   ucg:<n>                 unitary Cayley graph of Z/nZ
// Whitespace is ignored. The canonical rendering sorts factors by (b, a).
struct UcgDescriptor {
  std::int64_t n = 2;
  friend bool operator==(const UcgDescriptor&, const UcgDescriptor&) = default;
};

struct Descriptor {
  std::variant<ProductSpec, UcgDescriptor> value;

  bool is_ucg() const { return std::holds_alternative<UcgDescriptor>(value); }
  std::string canonical() const;
  // The product form: the canonical spec, or the CRT factorisation for ucg:<n>.
  ProductSpec product_spec() const;
  // Graph whose vertex numbering matches witnesses reported for canonical(): residues for
  // ucg:<n>, row-major tuples of the canonical factor order otherwise.
  Graph build(const GraphLimits& limits = {}) const;
};

Descriptor parse_descriptor(std::string_view text);  // throws ParseError
std::string render_spec(const ProductSpec& spec);    // factors in the given order

}  // namespace tdom
