#pragma once

#include "gcset/geometry.hpp"
#include "gcset/ideal.hpp"

#include <string>
#include <vector>

namespace gcset {

/// A named, fully pinned input: an ideal together with a specialization map
/// and dehomogenization chart. label_offset records how the fixture's 0-based
/// vertex indices relate to the customary 1-based labels (label = index +
/// offset).
struct Fixture {
    std::string name;
    int label_offset = 0;
    SquarefreeMonomialIdeal ideal;
    SpecializationMap map;
    int chart = 0;
};

/// Ships: "cy-4-lines", "berzolari-radon-10", "one-lattice-8".
Fixture fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace gcset
