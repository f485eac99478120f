#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace rrfair {

struct Dataset {
  std::string_view name;
  std::string_view text;  // VenueMatrixFile content
};

/// tata2002, danish2008, baseball2024.
std::span<const Dataset> bundled_datasets();

inline std::optional<std::string_view> find_dataset(std::string_view name) {
  for (const Dataset& d : bundled_datasets())
    if (d.name == name) return d.text;
  return std::nullopt;
}

}  // namespace rrfair
