#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "verify/scenario.hpp"

namespace vmeasure::verify {

struct GalleryEntry {
  std::string name;
  std::string summary;
  std::vector<Scenario> scenarios;
};

/// Built-in counterexamples, in listing order.
const std::vector<GalleryEntry>& gallery();

/// nullptr when no entry has that name.
const GalleryEntry* find_gallery_entry(std::string_view name);

}  // namespace vmeasure::verify
