#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invert_unit: lowest nonzero coefficient is not +-1
struct NotAUnit : SeriesError {
    using SeriesError::SeriesError;
};

// invert_unit: no nonzero coefficient in the known window
struct ZeroSeries : SeriesError {
    using SeriesError::SeriesError;
};

// coeff: exponent at or above the known precision window
struct OutOfRange : SeriesError {
    using SeriesError::SeriesError;
};

// dissect: series has negative exponents
struct NegativeSupport : SeriesError {
    using SeriesError::SeriesError;
};

// equal_to_order: requested order not covered by both windows
struct InsufficientPrecision : SeriesError {
    using SeriesError::SeriesError;
};

// Lambert sums: a summed term has denominator 1 - q^0
struct ZeroDenominator : SeriesError {
    using SeriesError::SeriesError;
};

// partitions: repeated odd part
struct InvalidPartition : SeriesError {
    using SeriesError::SeriesError;
};

} // namespace qlab
