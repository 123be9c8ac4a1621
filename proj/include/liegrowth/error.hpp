#pragma once

#include <stdexcept>
#include <string>

namespace liegrowth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LIEGROWTH_DEFINE_ERROR(Name)          \
    class Name : public Error {               \
    public:                                   \
        using Error::Error;                   \
    }

LIEGROWTH_DEFINE_ERROR(MonomialNotInBasis);
LIEGROWTH_DEFINE_ERROR(DimensionMismatch);
LIEGROWTH_DEFINE_ERROR(UnsupportedFamily);
LIEGROWTH_DEFINE_ERROR(SizeMismatch);
LIEGROWTH_DEFINE_ERROR(UnknownLetter);
LIEGROWTH_DEFINE_ERROR(EmptyMultiDegree);
LIEGROWTH_DEFINE_ERROR(InvalidShape);
LIEGROWTH_DEFINE_ERROR(ArityMismatch);
LIEGROWTH_DEFINE_ERROR(InsufficientData);
LIEGROWTH_DEFINE_ERROR(ResourceLimit);
LIEGROWTH_DEFINE_ERROR(UsageError);

#undef LIEGROWTH_DEFINE_ERROR

}  // namespace liegrowth
