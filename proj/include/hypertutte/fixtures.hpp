#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypertutte {

struct FixtureFile {
  std::string name;
  std::string text;
};

struct FixtureEntry {
  std::string name;
  std::string description;
  std::vector<std::string> files;
};

// Shipped instances, compiled into the library.
const std::vector<FixtureEntry>& fixture_entries();
std::optional<std::string> fixture_text(std::string_view file_name);

namespace detail {
const std::vector<FixtureFile>& embedded_fixture_files();
}

}  // namespace hypertutte
