#pragma once

// Text format for WindowedSet:
//
//   # comment
//   window <lo> <hi>        (mandatory, exactly once)
//   <n>                     single member
//   <a>..<b>                inclusive range
//
// Order is irrelevant and duplicates are ignored. The canonical serializer
// writes the window line followed by maximal runs in ascending order.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hindlab/intset.hpp"

namespace hindlab {

struct ParsedSet {
  WindowedSet set;
  std::vector<std::string> comments;  ///< comment bodies, without the leading '#'
};

[[nodiscard]] ParsedSet parse_set_text(std::string_view text);
[[nodiscard]] ParsedSet read_set_file(const std::filesystem::path& path);

/// Canonical text; `header` lines are emitted first as comments.
[[nodiscard]] std::string serialize_set(const WindowedSet& s,
                                        const std::vector<std::string>& header = {});

}  // namespace hindlab
