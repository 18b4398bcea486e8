#pragma once

#include <stdexcept>
#include <string>

namespace qinv
{

/// Base of every error raised by the engine.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed diagram text; carries a 1-based position.
class SyntaxError : public Error
{
  public:
    SyntaxError(const std::string& what, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

  private:
    int line_;
    int column_;
};

/// Text parsed but the diagram it describes is inconsistent.
class ValidationError : public Error
{
  public:
    using Error::Error;
};

/// A configured size cap (crossings, colors, level) was exceeded.
class ResourceLimit : public Error
{
  public:
    using Error::Error;
};

/// Integer coefficient left the representable range.
class ArithmeticOverflow : public Error
{
  public:
    using Error::Error;
};

class ColorOutOfRange : public Error
{
  public:
    using Error::Error;
};

class ZeroToNegativePower : public Error
{
  public:
    using Error::Error;
};

/// Exact half power requested but the argument has no square root in the ring.
class InexactHalfPower : public Error
{
  public:
    using Error::Error;
};

/// A normalizing factor evaluated to zero.
class DegenerateNormalizer : public Error
{
  public:
    using Error::Error;
};

/// The three diagrams handed to the skein check do not differ at a single crossing.
class SiteMismatch : public Error
{
  public:
    using Error::Error;
};

} // namespace qinv
