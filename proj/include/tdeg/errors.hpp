#ifndef TDEG_ERRORS_HPP
#define TDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tdeg
{

// Inconsistent or incomplete problem data (mismatched truncation, missing
// Cartan matrix, duplicate labels, ...).
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// An argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

} // namespace tdeg

#endif
