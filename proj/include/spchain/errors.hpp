#pragma once

#include <stdexcept>
#include <string>

namespace spchain {

// Base class for all typed errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SPCHAIN_DEFINE_ERROR(Name)                                    \
    struct Name : Error {                                             \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

SPCHAIN_DEFINE_ERROR(InvalidGroup);
SPCHAIN_DEFINE_ERROR(UnknownGroupName);
SPCHAIN_DEFINE_ERROR(NotProjective);
SPCHAIN_DEFINE_ERROR(NotRootOfUnity);
SPCHAIN_DEFINE_ERROR(NotIrreducible);
SPCHAIN_DEFINE_ERROR(DimensionMismatch);
SPCHAIN_DEFINE_ERROR(DegenerateFixedSpace);
SPCHAIN_DEFINE_ERROR(NonUnitaryFixedPoint);
SPCHAIN_DEFINE_ERROR(ShapeMismatch);
SPCHAIN_DEFINE_ERROR(NonOrthonormalStates);
SPCHAIN_DEFINE_ERROR(BadChainLength);
SPCHAIN_DEFINE_ERROR(BadBoundaryIndex);
SPCHAIN_DEFINE_ERROR(AxesNotOrthogonal);
SPCHAIN_DEFINE_ERROR(AxisNotUnit);
SPCHAIN_DEFINE_ERROR(NotUnitAxis);
SPCHAIN_DEFINE_ERROR(ParallelAxes);
SPCHAIN_DEFINE_ERROR(DimensionCap);
SPCHAIN_DEFINE_ERROR(NoGap);
SPCHAIN_DEFINE_ERROR(DegeneracyChange);
SPCHAIN_DEFINE_ERROR(NonConvergent);
SPCHAIN_DEFINE_ERROR(UnsupportedFormat);
SPCHAIN_DEFINE_ERROR(ConfigError);

#undef SPCHAIN_DEFINE_ERROR

}  // namespace spchain
