#ifndef MSCODES_ERRORS_HPP
#define MSCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mscodes {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller-supplied parameters (maps to CLI exit code 1).
class parameter_error : public error {
 public:
  using error::error;
};

class alphabet_mismatch : public parameter_error {
 public:
  alphabet_mismatch(std::size_t a, std::size_t b)
      : parameter_error("alphabet mismatch: q=" + std::to_string(a) + " vs q=" + std::to_string(b)) {}
};

class cardinality_mismatch : public parameter_error {
 public:
  using parameter_error::parameter_error;
};

class index_out_of_range : public parameter_error {
 public:
  using parameter_error::parameter_error;
};

class invalid_parameter : public parameter_error {
 public:
  using parameter_error::parameter_error;
};

class pattern_not_contained : public parameter_error {
 public:
  pattern_not_contained() : parameter_error("deletion pattern is not a sub-multiset of the word") {}
};

/// Enumeration would exceed the configured cap (maps to CLI exit code 2).
class resource_limit : public error {
 public:
  using error::error;
};

class too_many_deletions : public error {
 public:
  too_many_deletions(std::size_t observed, std::size_t capability)
      : error("too many deletions: " + std::to_string(observed) + " > " + std::to_string(capability)) {}
};

/// The received word is not the image of any codeword under <= t deletions.
class decode_failure : public error {
 public:
  using error::error;
};

}  // namespace mscodes

#endif  // MSCODES_ERRORS_HPP
