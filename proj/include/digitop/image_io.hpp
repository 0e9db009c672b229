#ifndef DIGITOP_IMAGE_IO_HPP
#define DIGITOP_IMAGE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "digitop/core.hpp"

namespace digitop {

/// Parses the DIGIMG text format. `origin` labels error messages.
DigitalImage read_image(std::istream& in, const std::string& origin = "<stream>");
DigitalImage read_image_file(const std::filesystem::path& path);

/// Writes DIGIMG. Points appear in canonical order, so edge indices in the
/// file match the in-memory indices.
void write_image(std::ostream& out, const DigitalImage& img);
void write_image_file(const std::filesystem::path& path, const DigitalImage& img);

} // namespace digitop

#endif
