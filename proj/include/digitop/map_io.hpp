#ifndef DIGITOP_MAP_IO_HPP
#define DIGITOP_MAP_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "digitop/maps.hpp"

namespace digitop {

/// Parses the DIGMAP text format. The referenced image paths resolve
/// relative to `base_dir`. Every domain point must appear exactly once.
DigitalMap read_map(std::istream& in, const std::string& origin, const std::filesystem::path& base_dir);
/// Image paths resolve relative to the map file's directory.
DigitalMap read_map_file(const std::filesystem::path& path);

/// Pair lines "x_1 ... x_n -> y_1 ... y_m", one per domain point, in
/// canonical domain order.
std::vector<std::string> pair_lines(const DigitalMap& f);

void write_map(std::ostream& out, const DigitalMap& f, const std::string& domain_path,
               const std::string& codomain_path);
void write_map_file(const std::filesystem::path& path, const DigitalMap& f,
                    const std::string& domain_path, const std::string& codomain_path);

} // namespace digitop

#endif
