#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmwb {

/// Coefficient ring of a scheme. Int is arbitrary precision, Rat is exact.
enum class Ring { Z2, Int, Rat };

std::string_view ring_name(Ring r);
Ring parse_ring(std::string_view name);

/// Thrown when a value or file violates a data-model invariant.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maps a rational into the ring's canonical representative. Z2 keeps 0/1,
/// Int requires an integer, Rat is canonicalized.
mpq_class normalize(Ring r, const mpq_class& v);

/// True iff v is a member of the ring (before normalization).
bool is_member(Ring r, const mpq_class& v);

bool is_unit(Ring r, const mpq_class& v);

/// Parses "p", "-p" or "p/q".
mpq_class parse_rational(std::string_view text);
std::string format_rational(const mpq_class& v);

}  // namespace mmwb
