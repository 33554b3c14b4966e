#ifndef COXART_ERRORS_HPP
#define COXART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxart {

// Malformed input text: labels, words, points, arrangement files.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input outside an operation's domain
// (infinite type where a finite one is required, violated rank bounds, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coxart

#endif
