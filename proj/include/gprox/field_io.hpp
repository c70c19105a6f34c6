#pragma once

#include <string>

#include "gprox/field.hpp"

namespace gprox {

/// 16-bit binary PGM (P5, maxval 65535, big-endian samples). Values are
/// clamped to [0,1] and scaled on write; scaled back to [0,1] on read.
void write_pgm16(const ScalarField& u, const std::string& path);
ScalarField read_pgm16(const std::string& path);

/// Row-major CSV, one line per grid row, full double precision. The exact
/// value interchange format.
void write_csv(const ScalarField& u, const std::string& path);
ScalarField read_csv(const std::string& path);

}  // namespace gprox
