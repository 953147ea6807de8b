#pragma once

#include <ostream>

namespace tsol::cli {

// Runs one `tsol` invocation. Exit status: 0 ok, 1 I/O or parse error,
// 2 domain error; usage errors use CLI11's codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tsol::cli
