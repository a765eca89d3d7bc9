#pragma once

#include <stdexcept>
#include <string>

namespace hiersep {

  // Malformed query input: bad regex, letter outside the alphabet, arity.
  class InputError : public std::runtime_error {
   public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
  };

  // A configured budget (states, monoid size, antichain size, iterations)
  // was exceeded.
  class ResourceError : public std::runtime_error {
   public:
    ResourceError(std::string budget, std::size_t limit)
        : std::runtime_error(budget + " budget exceeded (limit "
                             + std::to_string(limit) + ")"),
          budget_(std::move(budget)),
          limit_(limit) {}

    std::string const& budget() const noexcept {
      return budget_;
    }
    std::size_t limit() const noexcept {
      return limit_;
    }

   private:
    std::string budget_;
    std::size_t limit_;
  };

  // Reserved basis or level that has no decision procedure in this library.
  class UnsupportedError : public std::runtime_error {
   public:
    explicit UnsupportedError(const std::string& what)
        : std::runtime_error(what) {}
  };

}  // namespace hiersep
