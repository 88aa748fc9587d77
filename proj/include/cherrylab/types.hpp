#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cherrylab {

// Vertices are 1-based dense integers on both the pattern and the host side.
using Vertex = std::uint32_t;
using Color = std::uint32_t;

// proper: no monochromatic cherry in the image.
// rainbow: all image edges pairwise distinct colors.
enum class CopyMode { proper, rainbow };

// Which boundedness notion a coloring is measured against.
enum class Boundedness { local, global };

std::string_view to_string(CopyMode mode);
std::string_view to_string(Boundedness b);
CopyMode parse_copy_mode(std::string_view text);
Boundedness parse_boundedness(std::string_view text);

// proper copies live in locally bounded hosts, rainbow copies in globally
// bounded ones.
constexpr Boundedness boundedness_for(CopyMode mode) {
  return mode == CopyMode::proper ? Boundedness::local : Boundedness::global;
}

// Raised by the strict file loaders; carries the 1-based line number of the
// offending input line (0 when the problem is not tied to one line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cherrylab
