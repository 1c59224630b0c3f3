#pragma once

#include <stdexcept>
#include <string>

namespace rirforge {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define RIRFORGE_DEFINE_ERROR(name)                                   \
    class name : public Error {                                       \
    public:                                                           \
        explicit name(const std::string& msg) : Error(msg) {}         \
    }

RIRFORGE_DEFINE_ERROR(PlacementFailure);
RIRFORGE_DEFINE_ERROR(BudgetExceeded);
RIRFORGE_DEFINE_ERROR(LengthTooShort);
RIRFORGE_DEFINE_ERROR(LengthMismatch);
RIRFORGE_DEFINE_ERROR(DegenerateData);
RIRFORGE_DEFINE_ERROR(InsufficientDecay);
RIRFORGE_DEFINE_ERROR(SilentInput);
RIRFORGE_DEFINE_ERROR(TooShort);
RIRFORGE_DEFINE_ERROR(ZeroNoise);
RIRFORGE_DEFINE_ERROR(ZeroSpeech);
RIRFORGE_DEFINE_ERROR(SilentReference);
RIRFORGE_DEFINE_ERROR(OutDirUnwritable);
RIRFORGE_DEFINE_ERROR(IoError);
RIRFORGE_DEFINE_ERROR(FormatError);

#undef RIRFORGE_DEFINE_ERROR

}  // namespace rirforge
