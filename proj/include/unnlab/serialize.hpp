#ifndef UNNLAB_SERIALIZE_HPP
#define UNNLAB_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "unnlab/spectral.hpp"

namespace unnlab {

// Shortest round-trip decimal form of x (std::to_chars), locale-free.
// Used everywhere a float reaches a text stream, so output is
// byte-stable and parses back to the identical double.
std::string format_double(double x);

// Line-oriented key=value blocks.
void write_kv(std::ostream& out, const CheegerCertificate& cert);
void write_kv(std::ostream& out, const SpectralReport& report);

// Machine-readable JSON records with the same field names.
std::string to_json(const CheegerCertificate& cert);
std::string to_json(const SpectralReport& report);

} // namespace unnlab

#endif
