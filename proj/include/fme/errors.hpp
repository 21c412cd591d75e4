#pragma once

#include <stdexcept>
#include <string>

namespace fme {

// Broad classes used by the CLI to pick an exit code.
enum class ErrorCategory {
  kDomain,      // mathematically undefined input (exit 2)
  kValidation,  // malformed or out-of-range input (exit 3)
  kResource,    // size caps, I/O, clocks (exit 4)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

#define FME_DEFINE_ERROR(Name, Category)                                 \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(Category, what) {}    \
  }

FME_DEFINE_ERROR(DomainError, ErrorCategory::kValidation);
FME_DEFINE_ERROR(ParseError, ErrorCategory::kValidation);
FME_DEFINE_ERROR(InvalidFactorization, ErrorCategory::kValidation);
FME_DEFINE_ERROR(ParameterOutOfRange, ErrorCategory::kValidation);
FME_DEFINE_ERROR(IndexError, ErrorCategory::kValidation);
FME_DEFINE_ERROR(DimensionMismatch, ErrorCategory::kValidation);
FME_DEFINE_ERROR(DegenerateFit, ErrorCategory::kValidation);

FME_DEFINE_ERROR(NotCoprime, ErrorCategory::kDomain);
FME_DEFINE_ERROR(NonInvertibleMatrix, ErrorCategory::kDomain);
FME_DEFINE_ERROR(UnsupportedPrime, ErrorCategory::kDomain);
FME_DEFINE_ERROR(NotUnit, ErrorCategory::kDomain);

FME_DEFINE_ERROR(ResourceError, ErrorCategory::kResource);
FME_DEFINE_ERROR(IoError, ErrorCategory::kResource);
FME_DEFINE_ERROR(ClockUnavailable, ErrorCategory::kResource);

// Raised when a benchmark sweep sees the fast path disagree with the baseline.
FME_DEFINE_ERROR(ResultMismatch, ErrorCategory::kDomain);

#undef FME_DEFINE_ERROR

}  // namespace fme
