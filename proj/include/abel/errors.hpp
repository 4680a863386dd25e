#pragma once

#include <stdexcept>
#include <string>

namespace abel {

/// A theorem hypothesis could not be certified for the given input.
class HypothesisNotCertified : public std::runtime_error {
public:
    explicit HypothesisNotCertified(std::string hypothesis)
        : std::runtime_error("hypothesis not certified: " + hypothesis), hypothesis_(std::move(hypothesis)) {}
    const std::string& hypothesis() const { return hypothesis_; }

private:
    std::string hypothesis_;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace abel
