#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hhcw {

enum class errc {
  unsupported_type,
  dimension_mismatch,
  index_out_of_range,
  seed_not_a_root,
  unrecognized_type,
  unknown_pair,
  rank_out_of_range,
  not_in_pplus,
  not_an_ideal,
  not_minimal_coset_rep,
  not_unitary,
  k_out_of_range,
  wrong_type,
  not_covered,
  internal_inconsistency,
  parse_error,
};

inline std::string_view errc_name(errc e) {
  switch (e) {
    case errc::unsupported_type: return "UnsupportedType";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::seed_not_a_root: return "SeedNotARoot";
    case errc::unrecognized_type: return "UnrecognizedType";
    case errc::unknown_pair: return "UnknownPair";
    case errc::rank_out_of_range: return "RankOutOfRange";
    case errc::not_in_pplus: return "NotInPPlus";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_minimal_coset_rep: return "NotMinimalCosetRep";
    case errc::not_unitary: return "NotUnitary";
    case errc::k_out_of_range: return "KOutOfRange";
    case errc::wrong_type: return "WrongType";
    case errc::not_covered: return "NotCovered";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace hhcw
