#ifndef LAWFORGE_ERRORS_HPP_
#define LAWFORGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lawforge {

// Base of everything the library throws on a contract violation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size cap was hit (flatten length, enumeration order, search
// length, integer width). The CLI maps these to exit code 3.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class EnumerationCap : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class CapExceeded : public ResourceLimit {
 public:
  using ResourceLimit::ResourceLimit;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class TrivialInput : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotPrimePower : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class UnknownName : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NoConjugatorFound : public Error {
 public:
  using Error::Error;
};

}  // namespace lawforge

#endif  // LAWFORGE_ERRORS_HPP_
