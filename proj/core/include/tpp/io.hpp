#ifndef TPP_IO_HPP
#define TPP_IO_HPP

#include <string>

#include "tpp/partition.hpp"

namespace tpp {

/// Partition JSON: {"format_version": 1, "n": int, "paths": [[v,...],...]}
/// with 0-indexed vertices. format_version is optional on input.
std::string partition_to_json(const PathPartition& q);
PathPartition partition_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace tpp

#endif
