#pragma once

#include <stdexcept>
#include <string>

namespace chibound {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// graph-core
class EndpointOutOfRange : public Error {
public:
  using Error::Error;
};
class SelfLoop : public Error {
public:
  using Error::Error;
};
class VertexOutOfRange : public Error {
public:
  using Error::Error;
};
class OverlappingSets : public Error {
public:
  using Error::Error;
};
class ParseError : public Error {
public:
  using Error::Error;
};

// patterns
class PatternTooLarge : public Error {
public:
  using Error::Error;
};

// partition
class EmptyGraph : public Error {
public:
  using Error::Error;
};
class NotAClique : public Error {
public:
  using Error::Error;
};
class NotMaximum : public Error {
public:
  using Error::Error;
};

// coloring
class NotInClass : public Error {
public:
  using Error::Error;
};
class BudgetInfeasible : public Error {
public:
  using Error::Error;
};
class UncoloredVertex : public Error {
public:
  using Error::Error;
};

// oracles and generators
class SizeCapExceeded : public Error {
public:
  using Error::Error;
};
class OmegaTooSmall : public Error {
public:
  using Error::Error;
};
class InvalidLength : public Error {
public:
  using Error::Error;
};
class EmptyPartList : public Error {
public:
  using Error::Error;
};

} // namespace chibound
