#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace editlab {

// Base error for the whole library. `code()` is a stable snake_case
// identifier used in machine-readable CLI error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define EDITLAB_ERROR(Name, code_str)                       \
    class Name : public Error {                             \
    public:                                                 \
        explicit Name(const std::string& what)              \
            : Error(code_str, what) {}                      \
    };

EDITLAB_ERROR(DimensionError, "dimension_error")
EDITLAB_ERROR(NonFiniteError, "non_finite_error")
EDITLAB_ERROR(SingularCovarianceError, "singular_covariance")
EDITLAB_ERROR(DegenerateDirectionError, "degenerate_direction")
EDITLAB_ERROR(SingularSystemError, "singular_system")
EDITLAB_ERROR(RangeError, "range_error")
EDITLAB_ERROR(VocabularyError, "vocabulary_error")
EDITLAB_ERROR(StaleCacheError, "stale_cache")
EDITLAB_ERROR(TrainingDivergenceError, "training_divergence")
EDITLAB_ERROR(InputError, "input_error")
EDITLAB_ERROR(GenerationError, "generation_error")
EDITLAB_ERROR(InjectionError, "injection_error")
EDITLAB_ERROR(PositiveSearchError, "positive_search_error")
EDITLAB_ERROR(SpanError, "span_error")
EDITLAB_ERROR(IoError, "io_error")
EDITLAB_ERROR(FormatError, "format_error")

#undef EDITLAB_ERROR

}  // namespace editlab
