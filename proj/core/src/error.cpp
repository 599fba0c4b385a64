#include "hindlab/error.hpp"

namespace hindlab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::disjoint_windows: return "DisjointWindows";
    case Errc::empty_set: return "EmptySet";
    case Errc::arity_cap_exceeded: return "ArityCapExceeded";
    case Errc::length_exceeds_window: return "LengthExceedsWindow";
    case Errc::window_too_small: return "WindowTooSmall";
    case Errc::window_too_large: return "WindowTooLarge";
    case Errc::precision_loss: return "PrecisionLoss";
    case Errc::window_exceeded: return "WindowExceeded";
    case Errc::no_ones: return "NoOnes";
    case Errc::not_in_language: return "NotInLanguage";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::solver_cap_exceeded: return "SolverCapExceeded";
    case Errc::not_a_cover: return "NotACover";
    case Errc::too_small: return "TooSmall";
    case Errc::schedule_too_tight: return "ScheduleTooTight";
    case Errc::overflow: return "Overflow";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hindlab
