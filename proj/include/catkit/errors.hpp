#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace catkit {

// All validation failures carry a short machine-readable code
// ("NotAssociative", "ImageKernelMismatch", ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Raised when an enumeration would exceed the configured candidate bound.
class SizeLimitError : public Error {
public:
    explicit SizeLimitError(const std::string& message)
        : Error("SizeLimit", message) {}
};

// Default enumeration bound, overridable per call and via CATKIT_MAX_CANDIDATES.
inline constexpr std::uint64_t kDefaultMaxCandidates = 100'000'000ULL;

// pow with saturation at 2^63-ish, used for candidate-space estimates.
inline std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > (1ULL << 62) / base) return ~0ULL;
        result *= base;
    }
    return result;
}

} // namespace catkit
