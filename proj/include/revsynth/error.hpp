#pragma once

#include <stdexcept>
#include <string>

namespace revsynth {

// Failure categories. The CLI prints the enum name on stderr so scripts can
// dispatch on it without scraping message text.
enum class Errc {
  LengthNotPowerOfTwo,
  DuplicateImage,
  IndexOutOfRange,
  NonBinaryEntry,
  RowOrColumnWeightNotOne,
  WidthOverflow,
  WidthMismatch,
  LineOutOfRange,
  LinesNotDistinct,
  LengthMismatch,
  WidthTooLarge,
  DepthExhausted,
  ParseError,
};

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::LengthNotPowerOfTwo: return "LengthNotPowerOfTwo";
    case Errc::DuplicateImage: return "DuplicateImage";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NonBinaryEntry: return "NonBinaryEntry";
    case Errc::RowOrColumnWeightNotOne: return "RowOrColumnWeightNotOne";
    case Errc::WidthOverflow: return "WidthOverflow";
    case Errc::WidthMismatch: return "WidthMismatch";
    case Errc::LineOutOfRange: return "LineOutOfRange";
    case Errc::LinesNotDistinct: return "LinesNotDistinct";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::WidthTooLarge: return "WidthTooLarge";
    case Errc::DepthExhausted: return "DepthExhausted";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace revsynth
