#pragma once

// Text syntax shared by the CLI and file formats:
//   group    "Z12", "Z2xZ6", "Z6xZ2" (any order; "Z1" is the trivial group)
//   element  "(a,b,...)" or a bare integer for rank 1; negatives allowed
//   list     elements separated by commas, e.g. "1,3" or "(1,0),(-1,1)"

#include <string>
#include <string_view>
#include <vector>

#include "cayley/abelian.hpp"

namespace cayley {

GroupSpec ParseGroupLiteral(std::string_view text);

// Raw coordinate vectors, unreduced.
std::vector<std::vector<Int>> ParseElementList(std::string_view text);

// Parses the list against the written product and maps every entry into
// the canonical group's coordinates.
std::vector<GroupElement> ParseElements(const CanonicalForm& form,
                                        std::string_view text);

std::string FormatElement(const GroupElement& u);
std::string FormatElementList(const std::vector<GroupElement>& elements);

}  // namespace cayley
