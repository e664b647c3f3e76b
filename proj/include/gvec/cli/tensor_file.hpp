#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gvec/tensor.hpp"

namespace gvec::cli {

// Tensor file format (JSON, one object):
//
//   {"shape":[2,2],"order":"row-major","data":[1,2,3,4]}
//
// "order" is "row-major" (last index fastest, the default when absent) or
// "column-major". Written files always carry all three keys in this order,
// compact, followed by a single newline. Integer-valued numbers of
// magnitude <= 2^53 are written without a fraction; every other finite
// value uses the shortest decimal that parses back to the same double.

std::string_view order_name(StorageOrder order) noexcept;

/// Throws FormatError (with line and column) on malformed JSON or fields,
/// ShapeError on a bad shape or a data length mismatch.
DenseTensor parse_tensor(std::string_view text);
std::string serialize_tensor(const DenseTensor& t, StorageOrder order = StorageOrder::LastIndexFastest);

/// Throws IoError when the file cannot be read.
DenseTensor read_tensor(const std::filesystem::path& path);
/// Throws IoError when the file cannot be written.
void write_tensor(const DenseTensor& t, const std::filesystem::path& path,
                  StorageOrder order = StorageOrder::LastIndexFastest);

}  // namespace gvec::cli
