#pragma once

#include "rodwave/cas/system.hpp"

#include <string>
#include <vector>

namespace rodwave::cas {

/// A published coefficient set, transcribed symbolically, with the system it claims to solve.
struct PublishedCase {
    int case_no;
    std::string name;  ///< "sg.case1", "mefm.case13", ...
    bool sine_gordon;
    AuxKind aux;       ///< MEFM only; M is 1 throughout
    Assignment assignment;
};

/// Cases 1-15 in order.
const std::vector<PublishedCase>& published_cases();
/// Throws std::invalid_argument for an unknown name.
const PublishedCase& published_case(const std::string& name);

AlgebraicSystem system_for(const PublishedCase& c);

}  // namespace rodwave::cas
