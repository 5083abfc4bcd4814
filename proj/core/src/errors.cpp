#include "filcat/errors.hpp"

namespace filcat {

std::string_view errc_code(Errc e) noexcept {
  switch (e) {
    case Errc::incompatible_composition: return "E_COMPOSITION";
    case Errc::ground_mismatch: return "E_GROUND_MISMATCH";
    case Errc::duplicate_atom: return "E_DUPLICATE_ATOM";
    case Errc::unknown_atom: return "E_UNKNOWN_ATOM";
    case Errc::not_admissible: return "E_ADMISSIBILITY";
    case Errc::not_local: return "E_LOCALITY";
    case Errc::not_subfilter: return "E_NOT_SUBFILTER";
    case Errc::empty_join: return "E_EMPTY_JOIN";
    case Errc::not_parallel: return "E_NOT_PARALLEL";
    case Errc::class_violation: return "E_CLASS";
    case Errc::non_commuting: return "E_NON_COMMUTING";
    case Errc::no_diagonal: return "E_NO_DIAGONAL";
    case Errc::outside_domain: return "E_OUTSIDE_DOMAIN";
    case Errc::size_cap: return "E_SIZE_CAP";
    case Errc::syntax: return "E_SYNTAX";
    case Errc::unknown_reference: return "E_UNKNOWN_REF";
    case Errc::duplicate_name: return "E_DUPLICATE";
    case Errc::invariant: return "E_INVARIANT";
    case Errc::unknown_law: return "E_UNKNOWN_LAW";
    case Errc::invalid_argument: return "E_ARGUMENT";
  }
  return "E_UNKNOWN";
}

}  // namespace filcat
