#include "mlab/error.hpp"
#include "mlab/integer.hpp"

#include <cctype>

namespace mlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonZeroRemainder: return "NonZeroRemainder";
    case ErrorKind::NonMonicLeft: return "NonMonicLeft";
    case ErrorKind::NonMonic: return "NonMonic";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NotPurePower: return "NotPurePower";
    case ErrorKind::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool parse_decimal(const std::string& text, Integer& out) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  }
  return out.set_str(text[0] == '+' ? text.substr(1) : text, 10) == 0;
}

}  // namespace mlab
